#include "monopro/monocle.hpp"

namespace monopro {

MonocleRep::MonocleRep(int arity, Transform split, Transform merge)
    : arity_(arity), split_(std::move(split)), merge_(std::move(merge)) {
  if (arity < 0) fail("MonocleRep: negative arity");
}

MonocleRep each(int n) {
  if (n < 0 || n > kMaxEachArity) fail("each: arity out of supported range");
  Transform split([n](const Value& s) {
    if (n == 0) return Value::list({});
    if (n == 1) return Value::list({s});
    const auto& p = s.parts();
    if (static_cast<int>(p.size()) != n) fail("each: tuple arity mismatch");
    return Value::list(p);
  });
  Transform merge([n](const Value& v) {
    const auto& items = v.items();
    if (static_cast<int>(items.size()) != n) fail("each: merge arity mismatch");
    if (n == 0) return Value::unit();
    if (n == 1) return items[0];
    return Value::tuple(items);
  });
  return MonocleRep(n, std::move(split), std::move(merge));
}

Value nest_pairs(const std::vector<Value>& items) {
  if (items.empty()) fail("nest_pairs: empty");
  Value acc = items[0];
  for (std::size_t i = 1; i < items.size(); ++i) acc = Value::pair(acc, items[i]);
  return acc;
}

std::vector<Value> unnest_pairs(const Value& v, int n) {
  if (n <= 0) fail("unnest_pairs: bad arity");
  if (n == 1) return {v};
  std::vector<Value> rest = unnest_pairs(v.first(), n - 1);
  rest.push_back(v.second());
  return rest;
}

Value fold_of(const MonocleRep& rep, const Monoid& m, const Value& s) {
  ForgetPro keep(m, [](const Value& v) { return v; });
  return apply_monocle(forget_monopro(m), rep, keep)(s);
}

Value fold_map_of(const MonocleRep& rep, const Monoid& m, const Transform& f, const Value& s) {
  ForgetPro keep(m, [f](const Value& v) { return f(v); });
  return apply_monocle(forget_monopro(m), rep, keep)(s);
}

Container convolute_vl(const MonocleRep& rep, ContainerTag in, ContainerTag out,
                       const std::function<Container(const Container&)>& f,
                       const Container& fs) {
  SisoPro focus(in, out, f);
  return apply_monocle(siso_monopro(in, out), rep, focus)(fs);
}

Container traverse_of(const MonocleRep& rep, ContainerTag out,
                      const std::function<Container(const Value&)>& k, const Value& s) {
  auto focus = [k](const Container& c) { return k(c.value()); };
  return convolute_vl(rep, ContainerTag::identity, out, focus, Container::identity(s));
}

Value zip_f_with_of(const MonocleRep& rep, const std::function<Value(const Container&)>& k,
                    const Container& fs) {
  if (fs.tag() == ContainerTag::list && fs.items().size() != 2)
    fail("zip_f_with_of: the zip reading takes exactly two sources");
  auto focus = [k](const Container& c) { return Container::identity(k(c)); };
  return convolute_vl(rep, fs.tag(), ContainerTag::identity, focus, fs).value();
}

MonocleRep compose_rep(const MonocleRep& outer, const MonocleRep& inner) {
  const int n = outer.arity() * inner.arity();
  Transform osplit = outer.split();
  Transform isplit = inner.split();
  Transform omerge = outer.merge();
  Transform imerge = inner.merge();
  const int iarity = inner.arity();

  Transform split([osplit, isplit](const Value& s) {
    std::vector<Value> out;
    Value foci = osplit(s);
    for (const auto& focus : foci.items()) {
      Value sub = isplit(focus);
      out.insert(out.end(), sub.items().begin(), sub.items().end());
    }
    return Value::list(std::move(out));
  });
  const int oarity = outer.arity();
  Transform merge([omerge, imerge, iarity, oarity, n](const Value& v) {
    const auto& items = v.items();
    if (static_cast<int>(items.size()) != n) fail("compose_rep: merge arity mismatch");
    std::vector<Value> rebuilt;
    rebuilt.reserve(oarity);
    for (int chunk = 0; chunk < oarity; ++chunk) {
      std::vector<Value> sub(items.begin() + chunk * iarity,
                             items.begin() + (chunk + 1) * iarity);
      rebuilt.push_back(imerge(Value::list(std::move(sub))));
    }
    return omerge(Value::list(std::move(rebuilt)));
  });
  return MonocleRep(n, std::move(split), std::move(merge));
}

}  // namespace monopro
