#pragma once

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "raag/automorphism.hpp"
#include "raag/graph.hpp"
#include "raag/heisenberg.hpp"

namespace raag {

/// The homomorphism H3(Z) -> Aut(A_Γ) given by A -> c_a, B -> t_ab, C -> c_b
/// for a witness pair (a, b): a, b adjacent, a <= b, b not adjacent to all.
struct Embedding {
  GraphPtr graph;
  VertexId a;
  VertexId b;
  RaagAut c_a;
  RaagAut c_b;
  RaagAut t;
};

/// Throws HypothesisError naming the first failed condition, checked in the
/// order: adjacency, domination, b adjacent to every vertex.
Embedding build_embedding(GraphPtr g, VertexId a, VertexId b);

/// Returns the failed-condition message, or nullopt if (a, b) is a witness.
std::optional<std::string> witness_violation(const SimplicialGraph& g, VertexId a, VertexId b);

/// c_a^m ∘ t^n ∘ c_b^p.
RaagAut iota(const Embedding& e, const HeisElement& x);

/// Memoized powers of c_a, t and c_b; each iota evaluation then costs two
/// compositions. Not thread-safe.
class IotaTable {
 public:
  explicit IotaTable(const Embedding& e) : e_(e) {}

  RaagAut operator()(const HeisElement& x);
  const RaagAut& c_a_power(std::int64_t k) { return cached(e_.c_a, ca_pos_, ca_neg_, k); }
  const RaagAut& t_power(std::int64_t k) { return cached(e_.t, t_pos_, t_neg_, k); }
  const RaagAut& c_b_power(std::int64_t k) { return cached(e_.c_b, cb_pos_, cb_neg_, k); }

 private:
  const RaagAut& cached(const RaagAut& f, std::deque<RaagAut>& pos, std::deque<RaagAut>& neg, std::int64_t k);

  const Embedding& e_;
  std::deque<RaagAut> ca_pos_, ca_neg_, t_pos_, t_neg_, cb_pos_, cb_neg_;
};

struct RelationOutcome {
  std::string name;
  bool passed = false;
  RaagAut lhs;
  RaagAut rhs;
};

struct RelationsCheck {
  bool passed = false;
  std::vector<RelationOutcome> relations;
  int grid_bound = 0;
  std::size_t grid_pairs_checked = 0;
  bool grid_passed = false;
  std::string first_failure;
};

struct InjectivityCheck {
  bool passed = false;
  int bound = 0;
  std::size_t triples_checked = 0;
  std::size_t identities_found = 0;
  // The short argument: image of a is a b^n, so n = 0; then a^m b^p central.
  std::size_t shortcut_agreements = 0;
  std::size_t image_of_a_matches = 0;
  std::string first_failure;
};

struct Eq1Check {
  bool passed = false;
  int bound = 0;
  std::size_t identities_checked = 0;
  std::string first_failure;
};

struct PowerSubgroupRow {
  int k = 0;
  HeisElement commutator_ba;  // [B^k, A^k]
  bool coordinates_passed = false;
  bool automorphisms_passed = false;
};

struct PowerSubgroupCheck {
  bool passed = false;
  int bound = 0;
  std::vector<PowerSubgroupRow> rows;
  std::string first_failure;
};

struct VerifyBounds {
  int homomorphism_grid = 2;
  int injectivity = 3;
  int eq1 = 4;
  int power = 3;
  /// Worker threads for the injectivity sweep; 0 picks the hardware count.
  unsigned threads = 0;
};

/// The three defining relations, then iota(x y) = iota(x) ∘ iota(y) on the
/// grid |m|,|n|,|p| <= grid_bound.
RelationsCheck verify_homomorphism(const Embedding& e, int grid_bound = 2);
/// Sweeps [-bound, bound]^3 minus the origin with two independent tests.
InjectivityCheck verify_injectivity(const Embedding& e, int bound, unsigned threads = 1);
/// t^n c_a^m t^-n = c_a^m c_b^(mn) for a single (m, n).
bool eq1_holds(const Embedding& e, long long m, long long n);
Eq1Check verify_eq1(const Embedding& e, int bound);
PowerSubgroupCheck verify_power_subgroup(const Embedding& e, int bound);

struct EmbeddingCertificate {
  GraphPtr graph;
  VertexId a;
  VertexId b;
  std::vector<std::string> c_a_images;
  std::vector<std::string> t_images;
  std::vector<std::string> c_b_images;
  RelationsCheck relations;
  InjectivityCheck injectivity;
  Eq1Check eq1;
  PowerSubgroupCheck power_subgroup;

  bool all_passed() const {
    return relations.passed && injectivity.passed && eq1.passed && power_subgroup.passed;
  }
  /// "<SECTION>: <identity>" of the first failing check; empty when passing.
  std::string first_failure() const;
};

EmbeddingCertificate certify(const Embedding& e, const VerifyBounds& bounds = {});
void render_certificate(std::ostream& out, const EmbeddingCertificate& cert);

enum class Classification { HeisenbergWitnessFound, NoAdjacentTransvection, AdjacentTransvectionsButNoWitness };

std::string to_string(Classification c);

struct AnalysisReport {
  std::vector<VertexId> central_vertices;
  std::vector<VertexPair> adjacent_transvection_pairs;
  std::vector<VertexPair> theorem_witnesses;
  Classification classification = Classification::NoAdjacentTransvection;
};

AnalysisReport analyze(const SimplicialGraph& g);
void render_analysis(std::ostream& out, const SimplicialGraph& g, const AnalysisReport& report);

}  // namespace raag
