#pragma once

#include <functional>

#include "monopro/value.hpp"

namespace monopro {

/// A pure total mapping between values: the hom profunctor and the currency
/// of every extensional equality check in the test suite.
class Transform {
public:
  explicit Transform(std::function<Value(const Value&)> run);

  Value operator()(const Value& v) const { return run_(v); }

private:
  std::function<Value(const Value&)> run_;
};

/// post . p . pre
Transform dimap_fn(const Transform& pre, const Transform& post, const Transform& p);

/// f after g.
Transform compose(const Transform& f, const Transform& g);

// The tuple kit: canonical pair/tuple plumbing. Every *_inv is a two-sided
// inverse of its partner.
namespace tf {

Transform identity();
Transform constant(Value v);
Transform diag();       // x -> (x,x)
Transform fst();        // (x,y) -> x
Transform snd();        // (x,y) -> y
Transform swap_pair();  // (x,y) -> (y,x)
Transform assoc();      // (x,(y,z)) -> ((x,y),z)
Transform assoc_inv();  // ((x,y),z) -> (x,(y,z))
Transform flat3();      // ((a,b),c) -> (a,b,c)
Transform flat3_inv();  // (a,b,c) -> ((a,b),c)
Transform flat4();      // (((a,b),c),d) -> (a,b,c,d)
Transform flat4_inv();  // (a,b,c,d) -> (((a,b),c),d)

}  // namespace tf

}  // namespace monopro
