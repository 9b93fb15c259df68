#pragma once

#include <memory>
#include <variant>

#include "monopro/monopro.hpp"

namespace monopro {

/// The free chain over a base profunctor: a terminal constant layer, or a
/// head value consed onto a tail through split/merge adapters. Always finite;
/// interpretation is depth-recursive.
template <class Base>
class FreeChain {
public:
  static FreeChain stop(Value t) { return FreeChain(Node(Stop{std::move(t)})); }

  static FreeChain layer(Transform split, Transform merge, Base head, FreeChain tail) {
    return FreeChain(Node(Layer{std::move(split), std::move(merge), std::move(head),
                                std::make_shared<const FreeChain>(std::move(tail))}));
  }

  bool is_stop() const { return std::holds_alternative<Stop>(node_); }

  const Value& stop_value() const { return std::get<Stop>(node_).value; }
  const Transform& split() const { return std::get<Layer>(node_).split; }
  const Transform& merge() const { return std::get<Layer>(node_).merge; }
  const Base& head() const { return std::get<Layer>(node_).head; }
  const FreeChain& tail() const { return *std::get<Layer>(node_).tail; }

  int depth() const { return is_stop() ? 0 : 1 + tail().depth(); }

private:
  struct Stop {
    Value value;
  };
  struct Layer {
    Transform split;
    Transform merge;
    Base head;
    std::shared_ptr<const FreeChain> tail;
  };
  using Node = std::variant<Stop, Layer>;

  explicit FreeChain(Node n) : node_(std::move(n)) {}

  Node node_;
};

/// A single-layer chain: split duplicates, merge projects, the tail is inert.
template <class Base>
FreeChain<Base> embed(const Base& p) {
  return FreeChain<Base>::layer(tf::diag(), tf::fst(), p,
                                FreeChain<Base>::stop(Value::unit()));
}

template <class Base>
FreeChain<Base> dimap_free(const Transform& pre, const Transform& post,
                           const FreeChain<Base>& c) {
  if (c.is_stop()) return FreeChain<Base>::stop(post(c.stop_value()));
  return FreeChain<Base>::layer(compose(c.split(), pre), compose(post, c.merge()), c.head(),
                                c.tail());
}

/// Fold the chain into any monoidal-profunctor instance, mapping each head
/// through h.
template <class Base, class P>
P interpret(const MonoProOps<P>& ops, const std::function<P(const Base&)>& h,
            const FreeChain<Base>& chain) {
  if (chain.is_stop()) {
    return ops.dimap(tf::constant(Value::unit()), tf::constant(chain.stop_value()),
                     ops.empty);
  }
  return ops.dimap(chain.split(), chain.merge(),
                   ops.star(h(chain.head()), interpret(ops, h, chain.tail())));
}

template <class Base>
FreeChain<Base> cons(const Base& p, const FreeChain<Base>& chain) {
  if (chain.is_stop())
    return FreeChain<Base>::layer(tf::identity(), tf::identity(), p, chain);
  return FreeChain<Base>::layer(star_fn(tf::identity(), chain.split()),
                                star_fn(tf::identity(), chain.merge()), p,
                                cons(chain.head(), chain.tail()));
}

template <class Base>
FreeChain<Base> empty_free() {
  return FreeChain<Base>::stop(Value::unit());
}

template <class Base>
FreeChain<Base> star_free(const FreeChain<Base>& a, const FreeChain<Base>& b) {
  if (a.is_stop()) {
    Value t = a.stop_value();
    Transform post([t](const Value& x) { return Value::pair(t, x); });
    return dimap_free(tf::snd(), post, b);
  }
  if (b.is_stop()) {
    Value t = b.stop_value();
    Transform post([t](const Value& x) { return Value::pair(x, t); });
    return dimap_free(tf::fst(), post, a);
  }
  Transform pre = compose(tf::assoc_inv(), star_fn(a.split(), tf::identity()));
  Transform post = compose(star_fn(a.merge(), tf::identity()), tf::assoc());
  return dimap_free(pre, post, cons(a.head(), star_free(a.tail(), b)));
}

template <class Base>
MonoProOps<FreeChain<Base>> free_monopro() {
  return MonoProOps<FreeChain<Base>>{
      empty_free<Base>(),
      [](const FreeChain<Base>& a, const FreeChain<Base>& b) { return star_free(a, b); },
      [](const Transform& f, const Transform& g, const FreeChain<Base>& c) {
        return dimap_free(f, g, c);
      }};
}

/// Collapse into the base instance with the identity interpretation.
template <class Base>
Base free_from(const MonoProOps<Base>& base_ops, const FreeChain<Base>& chain) {
  std::function<Base(const Base&)> id = [](const Base& p) { return p; };
  return interpret(base_ops, id, chain);
}

template <class Base>
FreeChain<Base> free_id(const ArrowOps<Base>& arrows) {
  Transform split([](const Value& x) { return Value::pair(x, Value::unit()); });
  return FreeChain<Base>::layer(split, tf::fst(), arrows.arr(tf::identity()),
                                FreeChain<Base>::stop(Value::unit()));
}

template <class Base>
FreeChain<Base> free_arr(const ArrowOps<Base>& arrows, const Transform& f) {
  Transform split([](const Value& x) { return Value::pair(x, Value::unit()); });
  return FreeChain<Base>::layer(split, tf::fst(), arrows.arr(f),
                                FreeChain<Base>::stop(Value::unit()));
}

/// Sequential composition: collapse both sides, compose in the base (second
/// argument runs first), and re-embed.
template <class Base>
FreeChain<Base> free_compose(const ArrowOps<Base>& arrows, const MonoProOps<Base>& base_ops,
                             const FreeChain<Base>& a, const FreeChain<Base>& b) {
  return embed(arrows.compose(free_from(base_ops, a), free_from(base_ops, b)));
}

}  // namespace monopro
