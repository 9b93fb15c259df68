#include "monopro/transform.hpp"

namespace monopro {

Transform::Transform(std::function<Value(const Value&)> run) : run_(std::move(run)) {
  if (!run_) fail("Transform: empty function");
}

Transform dimap_fn(const Transform& pre, const Transform& post, const Transform& p) {
  return Transform([pre, post, p](const Value& v) { return post(p(pre(v))); });
}

Transform compose(const Transform& f, const Transform& g) {
  return Transform([f, g](const Value& v) { return f(g(v)); });
}

namespace tf {

Transform identity() {
  return Transform([](const Value& v) { return v; });
}

Transform constant(Value v) {
  return Transform([v](const Value&) { return v; });
}

Transform diag() {
  return Transform([](const Value& v) { return Value::pair(v, v); });
}

Transform fst() {
  return Transform([](const Value& v) { return v.first(); });
}

Transform snd() {
  return Transform([](const Value& v) { return v.second(); });
}

Transform swap_pair() {
  return Transform([](const Value& v) { return Value::pair(v.second(), v.first()); });
}

Transform assoc() {
  return Transform([](const Value& v) {
    const Value& x = v.first();
    const Value& yz = v.second();
    return Value::pair(Value::pair(x, yz.first()), yz.second());
  });
}

Transform assoc_inv() {
  return Transform([](const Value& v) {
    const Value& xy = v.first();
    const Value& z = v.second();
    return Value::pair(xy.first(), Value::pair(xy.second(), z));
  });
}

Transform flat3() {
  return Transform([](const Value& v) {
    const Value& ab = v.first();
    return Value::tuple({ab.first(), ab.second(), v.second()});
  });
}

Transform flat3_inv() {
  return Transform([](const Value& v) {
    const auto& p = v.parts();
    if (p.size() != 3) fail("flat3_inv: expected a 3-tuple");
    return Value::pair(Value::pair(p[0], p[1]), p[2]);
  });
}

Transform flat4() {
  return Transform([](const Value& v) {
    const Value& abc = v.first();
    const Value& ab = abc.first();
    return Value::tuple({ab.first(), ab.second(), abc.second(), v.second()});
  });
}

Transform flat4_inv() {
  return Transform([](const Value& v) {
    const auto& p = v.parts();
    if (p.size() != 4) fail("flat4_inv: expected a 4-tuple");
    return Value::pair(Value::pair(Value::pair(p[0], p[1]), p[2]), p[3]);
  });
}

}  // namespace tf

}  // namespace monopro
