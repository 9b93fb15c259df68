#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "monopro/forget.hpp"
#include "monopro/siso.hpp"
#include "monopro/transform.hpp"

namespace monopro {

/// The unit of the parallel tensor: carries only a covariant value, the
/// contravariant side is inert.
class UnitPro {
public:
  explicit UnitPro(Value v) : value_(std::move(v)) {}
  const Value& value() const { return value_; }

private:
  Value value_;
};

UnitPro dimap_unit(const Transform& pre, const Transform& post, const UnitPro& u);

class DayPair;

/// A type-erased profunctor value usable as one half of a DayPair. The roster
/// is closed; component types live only behind the closures inside.
using DayPart =
    std::variant<Transform, UnitPro, ForgetPro, SisoPro, std::shared_ptr<const DayPair>>;

DayPart day_part(DayPair d);

DayPart dimap_part(const Transform& pre, const Transform& post, const DayPart& part);

/// Collapse a function-like part (a transform, a unit treated as a constant,
/// or a nested pair) to a Transform. Fails on forget/siso parts.
Transform part_as_transform(const DayPart& part);

/// Two profunctor values glued by an input splitter and an output merger.
/// Parts are existential: only the outer source/target types are observable,
/// through day_collapse and day_dimap.
class DayPair {
public:
  DayPair(DayPart left, DayPart right, Transform split, Transform merge);

  const DayPart& left() const { return left_; }
  const DayPart& right() const { return right_; }
  const Transform& split() const { return split_; }  // s -> (a,c)
  const Transform& merge() const { return merge_; }  // (b,d) -> t

private:
  DayPart left_;
  DayPart right_;
  Transform split_;
  Transform merge_;
};

/// New split = split . pre, new merge = post . merge; parts untouched.
DayPair day_dimap(const Transform& pre, const Transform& post, const DayPair& d);

/// merge . (left x right) . split, requiring function-like parts.
Transform day_collapse(const DayPair& d);

/// Unit elimination on the right, and its inverse.
DayPart rho(const DayPair& d);
DayPair rho_inv(const DayPart& p);

/// Unit elimination on the left, and its inverse.
DayPart lambda(const DayPair& d);
DayPair lambda_inv(const DayPart& q);

/// Reassociation ((p,q),r) -> (p,(q,r)) and its inverse. Behavioral inverses
/// under day_collapse; fail on the wrong nesting shape.
DayPair alpha(const DayPair& d);
DayPair alpha_inv(const DayPair& d);

/// Swap the two parts; an involution under day_collapse.
DayPair gamma(const DayPair& d);

/// The currying bijection: a morphism out of a pair corresponds to a family
/// on the two parts, realized at the closed part roster.
template <class P>
std::function<P(const DayPart&, const DayPart&)> day_curry(
    std::function<P(const DayPair&)> nat) {
  return [nat](const DayPart& p, const DayPart& q) {
    return nat(DayPair(p, q, tf::identity(), tf::identity()));
  };
}

template <class P>
std::function<P(const DayPair&)> day_uncurry(
    std::function<P(const DayPart&, const DayPart&)> m,
    std::function<P(const Transform&, const Transform&, const P&)> dimap) {
  return [m, dimap](const DayPair& d) {
    return dimap(d.split(), d.merge(), m(d.left(), d.right()));
  };
}

}  // namespace monopro
