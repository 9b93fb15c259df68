#pragma once

#include <functional>

#include "monopro/monoid.hpp"
#include "monopro/transform.hpp"
#include "monopro/value.hpp"

namespace monopro {

/// Keeps only a contravariant mapping into a monoid carrier; dimap ignores
/// its covariant argument. Drives fold_of / fold_map_of.
class ForgetPro {
public:
  ForgetPro(Monoid m, std::function<Value(const Value&)> run);

  const Monoid& monoid() const { return monoid_; }
  Value operator()(const Value& v) const { return run_(v); }

private:
  Monoid monoid_;
  std::function<Value(const Value&)> run_;
};

ForgetPro dimap_forget(const Transform& pre, const Transform& post, const ForgetPro& p);

}  // namespace monopro
