#pragma once

#include <functional>

#include "monopro/forget.hpp"
#include "monopro/siso.hpp"
#include "monopro/transform.hpp"

namespace monopro {

/// A monoidal-profunctor instance packaged as a value: the unit, the parallel
/// composition, and the profunctor lifting of pure mappings. Satisfies
///
///   dimap(diag, snd, star(empty, f))                 =  f
///   dimap(diag, fst, star(f, empty))                 =  f
///   dimap(assoc_inv, assoc, star(f, star(g, h)))     =  star(star(f, g), h)
///
/// extensionally over the sample domains used by the tests.
template <class P>
struct MonoProOps {
  P empty;
  std::function<P(const P&, const P&)> star;
  std::function<P(const Transform&, const Transform&, const P&)> dimap;
};

/// Category structure with a pure-function embedding, for bases of the free
/// chain that compose sequentially.
template <class P>
struct ArrowOps {
  P id;
  std::function<P(const P&, const P&)> compose;  // first arg runs second
  std::function<P(const Transform&)> arr;
};

// Instances.

Transform star_fn(const Transform& p, const Transform& q);
Transform transform_empty();
MonoProOps<Transform> transform_monopro();
ArrowOps<Transform> transform_arrow();

/// zip_c . (p x q) . unzip_c; tags of p and q must agree pairwise.
SisoPro star_siso(const SisoPro& p, const SisoPro& q);
SisoPro siso_empty(ContainerTag in, ContainerTag out);
MonoProOps<SisoPro> siso_monopro(ContainerTag in, ContainerTag out);

/// combine on split results; monoids must agree.
ForgetPro star_forget(const ForgetPro& p, const ForgetPro& q);
ForgetPro forget_empty(const Monoid& m);
MonoProOps<ForgetPro> forget_monopro(const Monoid& m);

// Derived combinators.

template <class P>
P lmap2(const MonoProOps<P>& ops, const Transform& f, const P& p, const P& q) {
  return ops.dimap(f, tf::identity(), ops.star(p, q));
}

template <class P>
P rmap2(const MonoProOps<P>& ops, const Transform& g, const P& p, const P& q) {
  return ops.dimap(tf::identity(), g, ops.star(p, q));
}

template <class P>
P rlmap(const MonoProOps<P>& ops, const Transform& g, const Transform& f, const P& p,
        const P& q) {
  return ops.dimap(f, g, ops.star(p, q));
}

/// Applicative-style application for function-valued transforms:
/// dimap(diag, uncurried application, pab * pa).
Transform app_to_monopro(const Transform& pab, const Transform& pa);

}  // namespace monopro
