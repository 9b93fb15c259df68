#pragma once

#include <functional>

#include "monopro/monopro.hpp"

namespace monopro {

inline constexpr int kMaxEachArity = 8;

/// An optic in unary normal form: an arity n, a splitter from the source to
/// exactly n focus values, and a merger from exactly n rebuilt values to the
/// target. This normal form is the library's only optic representation.
class MonocleRep {
public:
  MonocleRep(int arity, Transform split, Transform merge);

  int arity() const { return arity_; }
  const Transform& split() const { return split_; }  // s -> list of n
  const Transform& merge() const { return merge_; }  // list of n -> t

private:
  int arity_;
  Transform split_;
  Transform merge_;
};

/// Focus every position of a homogeneous n-tuple (0 <= n <= 8). Arity 0
/// works on unit, arity 1 on the bare value, arity n >= 2 on n-tuples.
MonocleRep each(int n);

// Left-nested pair plumbing between the list form and the n-fold parallel
// composition.
Value nest_pairs(const std::vector<Value>& items);
std::vector<Value> unnest_pairs(const Value& v, int n);

/// Run an optic at a monoidal-profunctor instance: dimap the nested split and
/// merge around the n-fold parallel composition of the focus (the unit for
/// n = 0).
template <class P>
P apply_monocle(const MonoProOps<P>& ops, const MonocleRep& rep, const P& focus) {
  const int n = rep.arity();
  Transform split = rep.split();
  Transform merge = rep.merge();
  if (n == 0) {
    Value out = merge(Value::list({}));
    return ops.dimap(tf::constant(Value::unit()), tf::constant(out), ops.empty);
  }
  P acc = focus;
  for (int i = 1; i < n; ++i) acc = ops.star(acc, focus);
  Transform pre([split, n](const Value& s) {
    std::vector<Value> foci = split(s).items();
    if (static_cast<int>(foci.size()) != n) fail("apply_monocle: split arity mismatch");
    return nest_pairs(foci);
  });
  Transform post([merge, n](const Value& v) {
    return merge(Value::list(unnest_pairs(v, n)));
  });
  return ops.dimap(pre, post, acc);
}

/// Monoidally collect every focus of s.
Value fold_of(const MonocleRep& rep, const Monoid& m, const Value& s);

/// As fold_of, mapping each focus through f first.
Value fold_map_of(const MonocleRep& rep, const Monoid& m, const Transform& f, const Value& s);

/// The functorial action: run a structured mapping over every focus, with
/// effects sequenced in focus order.
Container convolute_vl(const MonocleRep& rep, ContainerTag in, ContainerTag out,
                       const std::function<Container(const Container&)>& f,
                       const Container& fs);

/// convolute_vl with an identity-shaped input.
Container traverse_of(const MonocleRep& rep, ContainerTag out,
                      const std::function<Container(const Value&)>& k, const Value& s);

/// convolute_vl with an identity-shaped output; list inputs take exactly two
/// sources (the positional zip reading).
Value zip_f_with_of(const MonocleRep& rep, const std::function<Value(const Container&)>& k,
                    const Container& fs);

/// Sequential composition of optics: arity multiplies, the inner splitter
/// runs over each outer focus, the outer merger reassembles chunked inner
/// merges.
MonocleRep compose_rep(const MonocleRep& outer, const MonocleRep& inner);

}  // namespace monopro
