#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Automorphism of A_Γ stored as generator images together with the images
/// of its inverse. The constructor checks that the two tables invert each
/// other on every generator, so every RaagAut in existence is bijective.
class RaagAut {
 public:
  /// Throws UsageError on size/graph mismatch and InverseMismatchError when
  /// `bwd` does not invert `fwd`.
  RaagAut(GraphPtr g, std::vector<RaagElement> fwd, std::vector<RaagElement> bwd);

  static RaagAut identity(GraphPtr g);
  /// Conjugation x -> w x w^-1.
  static RaagAut inner(const RaagElement& w);
  static RaagAut inner(GraphPtr g, VertexId v) { return inner(RaagElement::generator(g, v)); }
  /// t_vw: v -> v w, every other generator fixed. Requires v != w and v <= w.
  static RaagAut transvection(GraphPtr g, VertexId v, VertexId w);

  const GraphPtr& graph() const noexcept { return graph_; }
  const RaagElement& image(VertexId v) const { return fwd_.at(v.index); }
  const RaagElement& inverse_image(VertexId v) const { return bwd_.at(v.index); }
  const std::vector<RaagElement>& images() const noexcept { return fwd_; }
  const std::vector<RaagElement>& inverse_images() const noexcept { return bwd_; }

 private:
  GraphPtr graph_;
  std::vector<RaagElement> fwd_;
  std::vector<RaagElement> bwd_;
};

/// Image of a word under the generator-image table, reduced.
RaagElement apply_images(const GraphPtr& g, const std::vector<RaagElement>& images, const Word& w);
RaagElement apply(const RaagAut& f, const RaagElement& x);

/// (f ∘ h)(x) = f(h(x)).
RaagAut compose(const RaagAut& f, const RaagAut& h);
template <typename... Rest>
RaagAut compose(const RaagAut& f, const RaagAut& h, const Rest&... rest) {
  return compose(f, compose(h, rest...));
}

RaagAut inverse(const RaagAut& f);
/// n-fold composition; negative n uses the inverse, power(f, 0) is the identity.
RaagAut power(const RaagAut& f, long long n);

bool equals(const RaagAut& f, const RaagAut& h);
bool is_identity(const RaagAut& f);

inline bool operator==(const RaagAut& f, const RaagAut& h) { return equals(f, h); }

/// Lines `v -> <word>`, one per generator in vertex order.
std::vector<std::string> format_aut(const RaagAut& f);

}  // namespace raag
