#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monopro/container.hpp"
#include "monopro/monopro.hpp"

namespace monopro {

/// A monad from the roster: one of the four container monads, optionally
/// wrapped in an option transformer layer. With the layer on, the carrier is
/// still a container of the base tag, but every payload is an option value
/// and bind threads the option layer.
struct MonadKind {
  ContainerTag base;
  bool option_layer = false;

  friend bool operator==(const MonadKind& a, const MonadKind& b) {
    return a.base == b.base && a.option_layer == b.option_layer;
  }
  friend bool operator!=(const MonadKind& a, const MonadKind& b) { return !(a == b); }
};

MonadKind base_monad(ContainerTag t);
MonadKind option_over(ContainerTag t);

Container m_pure(const MonadKind& k, const Value& v);
Container m_bind(const MonadKind& k, const Container& m,
                 const std::function<Container(const Value&)>& f);
Container m_map(const MonadKind& k, const ValueFn& f, const Container& m);

/// Canonical value encoding of a container, used when one effect carries
/// another as a payload.
Value encode_container(const Container& c);
Container decode_container(ContainerTag tag, const Value& v);

/// The option-transformer lift: wrap every payload in some.
Container t_lift(ContainerTag inner, const Container& ma);

/// Flatten a nested effect: payloads of the option layer encode inner-monad
/// values; bind with the option-distributing sequence.
Container t_comm(ContainerTag inner, const Container& mna);

/// An effectful mapping into a roster monad, composed via bind.
class EffectArrow {
public:
  EffectArrow(MonadKind kind, std::function<Container(const Value&)> run);

  const MonadKind& kind() const { return kind_; }
  Container operator()(const Value& v) const;

private:
  MonadKind kind_;
  std::function<Container(const Value&)> run_;
};

EffectArrow arr_effect(const MonadKind& k, const Transform& f);
EffectArrow effect_id(const MonadKind& k);
/// g after f.
EffectArrow compose_effect(const EffectArrow& g, const EffectArrow& f);
EffectArrow dimap_effect(const Transform& pre, const Transform& post, const EffectArrow& k);

/// Parallel composition: run the left effect, then the right, pair the
/// results.
EffectArrow kleisli_star(const EffectArrow& p, const EffectArrow& q);
EffectArrow kleisli_empty(const MonadKind& k);
MonoProOps<EffectArrow> kleisli_monopro(const MonadKind& k);
ArrowOps<EffectArrow> kleisli_arrow(const MonadKind& k);

/// The transformer lift packaged as a profunctor over effect arrows: a
/// mapping from inner-monad values to the option stack over that monad.
class LiftPro {
public:
  LiftPro(ContainerTag inner, std::function<Container(const Container&)> run);

  ContainerTag inner() const { return inner_; }
  Container operator()(const Container& ma) const;

private:
  ContainerTag inner_;
  std::function<Container(const Container&)> run_;
};

LiftPro lift_pro(ContainerTag inner);

/// Lift two effect arrows around a lift profunctor: bind f into the input,
/// bind the lifted g onto the output.
LiftPro cat_dimap(const EffectArrow& f, const EffectArrow& g, const LiftPro& l);

/// The unit, built from an arrow into unit and an arrow out of unit.
LiftPro cmp_unit(const EffectArrow& f, const EffectArrow& g);
LiftPro cmp_empty(ContainerTag inner);

/// The effectful convolution: split with f inside the inner monad, run h and
/// l over the unzipped halves, zip in the option stack, map the effectful g
/// (nesting an inner effect), then flatten with t_comm. Logged effects are
/// never reordered.
LiftPro eff_convolute(const EffectArrow& f, const EffectArrow& g, const LiftPro& h,
                      const LiftPro& l);

LiftPro star_star(const LiftPro& h, const LiftPro& l);
LiftPro lconvolute(const EffectArrow& f, const LiftPro& h, const LiftPro& l);
LiftPro rconvolute(const EffectArrow& g, const LiftPro& h, const LiftPro& l);
MonoProOps<LiftPro> lift_monopro(ContainerTag inner);

// The logged, stoppable quicksort.

/// Bracketed, comma-separated, quoted rendering of a word list.
std::string show_words(const std::vector<std::string>& words);

Value words_value(const std::vector<std::string>& words);
std::vector<std::string> value_words(const Value& v);

/// Partition the tail of a non-empty word list against its head, logging one
/// line. Fails on empty input.
Container lsplit(const std::vector<std::string>& words);

/// Rebuild around the pivot, logging one line. The pair argument holds the
/// two sorted halves.
Container rsplit(const std::string& pivot, const Value& halves);

/// Quicksort in the option stack over the logger monad: the payload is the
/// sorted list, or none once an empty-string head is encountered; the log
/// built so far is retained either way.
Container qsort_logged(const std::vector<std::string>& words);

}  // namespace monopro
