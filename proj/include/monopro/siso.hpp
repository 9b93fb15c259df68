#pragma once

#include <functional>

#include "monopro/container.hpp"
#include "monopro/transform.hpp"

namespace monopro {

/// Structured input, structured output: a mapping from one container shape to
/// another. The input tag needs only a functor, the output tag an applicative.
class SisoPro {
public:
  SisoPro(ContainerTag in, ContainerTag out, std::function<Container(const Container&)> run);

  ContainerTag in_tag() const { return in_; }
  ContainerTag out_tag() const { return out_; }

  /// Apply, checking the input and output tags.
  Container operator()(const Container& c) const;

private:
  ContainerTag in_;
  ContainerTag out_;
  std::function<Container(const Container&)> run_;
};

/// map(post) . run . map(pre)
SisoPro dimap_siso(const Transform& pre, const Transform& post, const SisoPro& s);

}  // namespace monopro
