#include "monopro/forget.hpp"
#include "monopro/siso.hpp"

namespace monopro {

ForgetPro::ForgetPro(Monoid m, std::function<Value(const Value&)> run)
    : monoid_(std::move(m)), run_(std::move(run)) {
  if (!run_) fail("ForgetPro: empty function");
}

ForgetPro dimap_forget(const Transform& pre, const Transform& post, const ForgetPro& p) {
  (void)post;
  return ForgetPro(p.monoid(), [pre, p](const Value& v) { return p(pre(v)); });
}

SisoPro::SisoPro(ContainerTag in, ContainerTag out, std::function<Container(const Container&)> run)
    : in_(in), out_(out), run_(std::move(run)) {
  if (!run_) fail("SisoPro: empty function");
}

Container SisoPro::operator()(const Container& c) const {
  if (c.tag() != in_)
    fail("SisoPro: expected " + to_string(in_) + " input, got " + to_string(c.tag()));
  Container out = run_(c);
  if (out.tag() != out_)
    fail("SisoPro: run produced " + to_string(out.tag()) + ", declared " + to_string(out_));
  return out;
}

SisoPro dimap_siso(const Transform& pre, const Transform& post, const SisoPro& s) {
  return SisoPro(s.in_tag(), s.out_tag(), [pre, post, s](const Container& c) {
    Container pulled = map_c([pre](const Value& v) { return pre(v); }, c);
    return map_c([post](const Value& v) { return post(v); }, s(pulled));
  });
}

}  // namespace monopro
