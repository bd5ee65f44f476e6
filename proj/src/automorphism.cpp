#include "raag/automorphism.hpp"

#include "raag/errors.hpp"

namespace raag {

namespace {

void require_same_graph(const RaagAut& f, const RaagAut& h) {
  if (f.graph() != h.graph()) throw UsageError("automorphisms belong to different graphs");
}

std::vector<RaagElement> map_images(const GraphPtr& g, const std::vector<RaagElement>& outer,
                                    const std::vector<RaagElement>& inner_images) {
  std::vector<RaagElement> out;
  out.reserve(inner_images.size());
  for (const auto& x : inner_images) out.push_back(apply_images(g, outer, x.word()));
  return out;
}

}  // namespace

RaagAut::RaagAut(GraphPtr g, std::vector<RaagElement> fwd, std::vector<RaagElement> bwd)
    : graph_(std::move(g)), fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  if (!graph_) throw UsageError("null graph");
  if (fwd_.size() != graph_->size() || bwd_.size() != graph_->size()) {
    throw UsageError("image table size does not match the vertex count");
  }
  for (std::size_t i = 0; i < fwd_.size(); ++i) {
    if (fwd_[i].graph() != graph_ || bwd_[i].graph() != graph_) {
      throw UsageError("image element belongs to a different graph");
    }
  }
  for (VertexId v : graph_->vertices()) {
    const auto gen = RaagElement::generator(graph_, v);
    if (apply_images(graph_, fwd_, bwd_[v.index].word()) != gen ||
        apply_images(graph_, bwd_, fwd_[v.index].word()) != gen) {
      throw InverseMismatchError("inverse table does not invert the image of '" + graph_->name(v) + "'");
    }
  }
}

RaagAut RaagAut::identity(GraphPtr g) {
  std::vector<RaagElement> gens;
  for (VertexId v : g->vertices()) gens.push_back(RaagElement::generator(g, v));
  return RaagAut(g, gens, gens);
}

RaagAut RaagAut::inner(const RaagElement& w) {
  const auto& g = w.graph();
  const RaagElement w_inv = invert(w);
  std::vector<RaagElement> fwd, bwd;
  for (VertexId v : g->vertices()) {
    const auto gen = RaagElement::generator(g, v);
    fwd.push_back(conjugate(gen, w));
    bwd.push_back(conjugate(gen, w_inv));
  }
  return RaagAut(g, std::move(fwd), std::move(bwd));
}

RaagAut RaagAut::transvection(GraphPtr g, VertexId v, VertexId w) {
  if (!g->contains(v) || !g->contains(w)) throw LookupError("transvection names an unknown vertex");
  if (v == w) throw UsageError("transvection needs two distinct vertices");
  if (auto u = g->domination_obstruction(v, w)) {
    throw LegalityError("domination fails: " + g->name(*u) + " in lk(" + g->name(v) + ") but not st(" +
                        g->name(w) + ")");
  }
  std::vector<RaagElement> fwd, bwd;
  for (VertexId u : g->vertices()) {
    if (u == v) {
      fwd.push_back(reduce(g, Word{{v, 1}, {w, 1}}));
      bwd.push_back(reduce(g, Word{{v, 1}, {w, -1}}));
    } else {
      fwd.push_back(RaagElement::generator(g, u));
      bwd.push_back(RaagElement::generator(g, u));
    }
  }
  return RaagAut(g, std::move(fwd), std::move(bwd));
}

RaagElement apply_images(const GraphPtr& g, const std::vector<RaagElement>& images, const Word& w) {
  Word out;
  for (Letter x : w) {
    const Word& img = images.at(x.vertex.index).word();
    if (x.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const Word inv = inverse_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(g, out);
}

RaagElement apply(const RaagAut& f, const RaagElement& x) {
  if (f.graph() != x.graph()) throw UsageError("element and automorphism belong to different graphs");
  return apply_images(f.graph(), f.images(), x.word());
}

RaagAut compose(const RaagAut& f, const RaagAut& h) {
  require_same_graph(f, h);
  const auto& g = f.graph();
  return RaagAut(g, map_images(g, f.images(), h.images()), map_images(g, h.inverse_images(), f.inverse_images()));
}

RaagAut inverse(const RaagAut& f) { return RaagAut(f.graph(), f.inverse_images(), f.images()); }

RaagAut power(const RaagAut& f, long long n) {
  RaagAut base = n < 0 ? inverse(f) : f;
  RaagAut result = RaagAut::identity(f.graph());
  for (unsigned long long k = n < 0 ? 0ull - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
       k > 0; k >>= 1) {
    if (k & 1u) result = compose(result, base);
    if (k > 1) base = compose(base, base);
  }
  return result;
}

bool equals(const RaagAut& f, const RaagAut& h) {
  require_same_graph(f, h);
  return f.images() == h.images();
}

bool is_identity(const RaagAut& f) {
  for (VertexId v : f.graph()->vertices()) {
    if (f.image(v) != RaagElement::generator(f.graph(), v)) return false;
  }
  return true;
}

std::vector<std::string> format_aut(const RaagAut& f) {
  std::vector<std::string> lines;
  for (VertexId v : f.graph()->vertices()) {
    lines.push_back(f.graph()->name(v) + " -> " + format_word(*f.graph(), f.image(v).word()));
  }
  return lines;
}

}  // namespace raag
