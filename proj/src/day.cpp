#include "monopro/day.hpp"

namespace monopro {

UnitPro dimap_unit(const Transform& pre, const Transform& post, const UnitPro& u) {
  (void)pre;
  return UnitPro(post(u.value()));
}

DayPart day_part(DayPair d) { return std::make_shared<const DayPair>(std::move(d)); }

DayPart dimap_part(const Transform& pre, const Transform& post, const DayPart& part) {
  return std::visit(
      [&](const auto& p) -> DayPart {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Transform>) {
          return dimap_fn(pre, post, p);
        } else if constexpr (std::is_same_v<T, UnitPro>) {
          return dimap_unit(pre, post, p);
        } else if constexpr (std::is_same_v<T, ForgetPro>) {
          return dimap_forget(pre, post, p);
        } else if constexpr (std::is_same_v<T, SisoPro>) {
          return dimap_siso(pre, post, p);
        } else {
          return day_part(day_dimap(pre, post, *p));
        }
      },
      part);
}

Transform part_as_transform(const DayPart& part) {
  return std::visit(
      [](const auto& p) -> Transform {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Transform>) {
          return p;
        } else if constexpr (std::is_same_v<T, UnitPro>) {
          return tf::constant(p.value());
        } else if constexpr (std::is_same_v<T, std::shared_ptr<const DayPair>>) {
          return day_collapse(*p);
        } else {
          fail("day_collapse: part is not function-like");
        }
      },
      part);
}

DayPair::DayPair(DayPart left, DayPart right, Transform split, Transform merge)
    : left_(std::move(left)),
      right_(std::move(right)),
      split_(std::move(split)),
      merge_(std::move(merge)) {}

DayPair day_dimap(const Transform& pre, const Transform& post, const DayPair& d) {
  return DayPair(d.left(), d.right(), compose(d.split(), pre), compose(post, d.merge()));
}

Transform day_collapse(const DayPair& d) {
  Transform lt = part_as_transform(d.left());
  Transform rt = part_as_transform(d.right());
  Transform split = d.split();
  Transform merge = d.merge();
  return Transform([lt, rt, split, merge](const Value& s) {
    Value ac = split(s);
    return merge(Value::pair(lt(ac.first()), rt(ac.second())));
  });
}

DayPart rho(const DayPair& d) {
  const auto* u = std::get_if<UnitPro>(&d.right());
  if (!u) fail("rho: right part is not the unit");
  Value held = u->value();
  Transform merge = d.merge();
  Transform pre = compose(tf::fst(), d.split());
  Transform post([merge, held](const Value& b) { return merge(Value::pair(b, held)); });
  return dimap_part(pre, post, d.left());
}

DayPair rho_inv(const DayPart& p) {
  Transform split([](const Value& x) { return Value::pair(x, Value::unit()); });
  return DayPair(p, UnitPro(Value::unit()), split, tf::fst());
}

DayPart lambda(const DayPair& d) {
  const auto* u = std::get_if<UnitPro>(&d.left());
  if (!u) fail("lambda: left part is not the unit");
  Value held = u->value();
  Transform merge = d.merge();
  Transform pre = compose(tf::snd(), d.split());
  Transform post([merge, held](const Value& v) { return merge(Value::pair(held, v)); });
  return dimap_part(pre, post, d.right());
}

DayPair lambda_inv(const DayPart& q) {
  Transform split([](const Value& x) { return Value::pair(Value::unit(), x); });
  return DayPair(UnitPro(Value::unit()), q, split, tf::snd());
}

DayPair alpha(const DayPair& d) {
  const auto* boxed = std::get_if<std::shared_ptr<const DayPair>>(&d.left());
  if (!boxed) fail("alpha: expected a nested pair on the left");
  const DayPair& inner = **boxed;
  Transform s1 = inner.split();
  Transform f = inner.merge();
  Transform s2 = d.split();
  Transform g = d.merge();

  // mid consumes the whole source: split it for the middle and right parts.
  Transform mid_split([s1, s2](const Value& s) {
    Value outer = s2(s);
    return Value::pair(s1(outer.first()).second(), outer.second());
  });
  DayPair mid(inner.right(), d.right(), mid_split, tf::identity());

  Transform split([s1, s2](const Value& s) {
    return Value::pair(s1(s2(s).first()).first(), s);
  });
  Transform merge([f, g](const Value& v) {
    const Value& b = v.first();
    const Value& dd = v.second();
    return g(Value::pair(f(Value::pair(b, dd.first())), dd.second()));
  });
  return DayPair(inner.left(), day_part(std::move(mid)), split, merge);
}

DayPair alpha_inv(const DayPair& d) {
  const auto* boxed = std::get_if<std::shared_ptr<const DayPair>>(&d.right());
  if (!boxed) fail("alpha_inv: expected a nested pair on the right");
  const DayPair& mid = **boxed;
  Transform f1 = mid.split();
  Transform f2 = mid.merge();
  Transform f3 = d.split();
  Transform f4 = d.merge();

  Transform inner_split([f1, f3](const Value& s) {
    return Value::pair(f3(s).first(), f1(f3(s).second()).first());
  });
  DayPair inner(d.left(), mid.left(), inner_split, tf::identity());

  Transform split([f1, f3](const Value& s) {
    return Value::pair(s, f1(f3(s).second()).second());
  });
  Transform merge([f2, f4](const Value& v) {
    const Value& bd = v.first();
    return f4(Value::pair(bd.first(), f2(Value::pair(bd.second(), v.second()))));
  });
  return DayPair(day_part(std::move(inner)), mid.right(), split, merge);
}

DayPair gamma(const DayPair& d) {
  Transform merge = d.merge();
  Transform flipped([merge](const Value& v) {
    return merge(Value::pair(v.second(), v.first()));
  });
  return DayPair(d.right(), d.left(), compose(tf::swap_pair(), d.split()), flipped);
}

}  // namespace monopro
