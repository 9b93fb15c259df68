#include "monopro/monopro.hpp"

namespace monopro {

Transform star_fn(const Transform& p, const Transform& q) {
  return Transform([p, q](const Value& v) { return Value::pair(p(v.first()), q(v.second())); });
}

Transform transform_empty() { return tf::constant(Value::unit()); }

MonoProOps<Transform> transform_monopro() {
  return MonoProOps<Transform>{
      transform_empty(),
      [](const Transform& p, const Transform& q) { return star_fn(p, q); },
      [](const Transform& f, const Transform& g, const Transform& p) {
        return dimap_fn(f, g, p);
      }};
}

ArrowOps<Transform> transform_arrow() {
  return ArrowOps<Transform>{
      tf::identity(),
      [](const Transform& f, const Transform& g) { return compose(f, g); },
      [](const Transform& f) { return f; }};
}

SisoPro star_siso(const SisoPro& p, const SisoPro& q) {
  if (p.in_tag() != q.in_tag() || p.out_tag() != q.out_tag())
    fail("star_siso: container tags differ");
  return SisoPro(p.in_tag(), p.out_tag(), [p, q](const Container& c) {
    auto [ca, cb] = unzip_c(c);
    return zip_c(p(ca), q(cb));
  });
}

SisoPro siso_empty(ContainerTag in, ContainerTag out) {
  return SisoPro(in, out,
                 [out](const Container&) { return Container::pure(out, Value::unit()); });
}

MonoProOps<SisoPro> siso_monopro(ContainerTag in, ContainerTag out) {
  return MonoProOps<SisoPro>{
      siso_empty(in, out),
      [](const SisoPro& p, const SisoPro& q) { return star_siso(p, q); },
      [](const Transform& f, const Transform& g, const SisoPro& s) {
        return dimap_siso(f, g, s);
      }};
}

ForgetPro star_forget(const ForgetPro& p, const ForgetPro& q) {
  if (p.monoid() != q.monoid()) fail("star_forget: monoids differ");
  Monoid m = p.monoid();
  return ForgetPro(m, [m, p, q](const Value& v) {
    return m.combine(p(v.first()), q(v.second()));
  });
}

ForgetPro forget_empty(const Monoid& m) {
  Value e = m.empty();
  return ForgetPro(m, [e](const Value&) { return e; });
}

MonoProOps<ForgetPro> forget_monopro(const Monoid& m) {
  return MonoProOps<ForgetPro>{
      forget_empty(m),
      [](const ForgetPro& p, const ForgetPro& q) { return star_forget(p, q); },
      [](const Transform& f, const Transform& g, const ForgetPro& p) {
        return dimap_forget(f, g, p);
      }};
}

Transform app_to_monopro(const Transform& pab, const Transform& pa) {
  Transform apply([](const Value& v) { return v.first().call(v.second()); });
  return dimap_fn(tf::diag(), apply, star_fn(pab, pa));
}

}  // namespace monopro
