#pragma once

#include "monopro/value.hpp"

namespace monopro {

/// One of the closed monoid roster: string concatenation, list concatenation,
/// integer sum. combine is associative with empty as two-sided identity.
class Monoid {
public:
  enum class Kind { string_concat, list_concat, int_sum };

  static Monoid string_concat() { return Monoid(Kind::string_concat); }
  static Monoid list_concat() { return Monoid(Kind::list_concat); }
  static Monoid int_sum() { return Monoid(Kind::int_sum); }

  Kind kind() const { return kind_; }
  Value empty() const;
  Value combine(const Value& a, const Value& b) const;

  friend bool operator==(const Monoid& a, const Monoid& b) { return a.kind_ == b.kind_; }
  friend bool operator!=(const Monoid& a, const Monoid& b) { return !(a == b); }

private:
  explicit Monoid(Kind k) : kind_(k) {}
  Kind kind_;
};

}  // namespace monopro
