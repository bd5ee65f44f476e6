#include "raag/embedding.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <thread>

#include "raag/errors.hpp"

namespace raag {

namespace {

void render_aut_lines(std::ostream& out, const std::vector<std::string>& lines, const char* indent) {
  for (const auto& line : lines) out << indent << line << '\n';
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::optional<std::string> witness_violation(const SimplicialGraph& g, VertexId a, VertexId b) {
  if (!g.contains(a) || !g.contains(b)) throw LookupError("witness names an unknown vertex");
  if (a == b) return "not adjacent: " + g.name(a) + " and " + g.name(b) + " are the same vertex";
  if (!g.adjacent(a, b)) return "not adjacent: " + g.name(a) + " and " + g.name(b);
  if (auto u = g.domination_obstruction(a, b)) {
    return "domination fails: " + g.name(*u) + " in lk(" + g.name(a) + ") but not st(" + g.name(b) + ")";
  }
  if (g.is_central_vertex(b)) return "b adjacent to all: " + g.name(b) + " is adjacent to every vertex";
  return std::nullopt;
}

Embedding build_embedding(GraphPtr g, VertexId a, VertexId b) {
  if (auto why = witness_violation(*g, a, b)) throw HypothesisError(*why);
  return Embedding{g, a, b, RaagAut::inner(g, a), RaagAut::inner(g, b), RaagAut::transvection(g, a, b)};
}

RaagAut iota(const Embedding& e, const HeisElement& x) {
  return compose(power(e.c_a, x.m), power(e.t, x.n), power(e.c_b, x.p));
}

const RaagAut& IotaTable::cached(const RaagAut& f, std::deque<RaagAut>& pos, std::deque<RaagAut>& neg,
                                 std::int64_t k) {
  if (pos.empty()) {
    pos.push_back(RaagAut::identity(e_.graph));
    neg.push_back(pos.front());
  }
  auto& table = k < 0 ? neg : pos;
  const std::size_t want = static_cast<std::size_t>(k < 0 ? -k : k);
  if (table.size() <= want) {
    const RaagAut step = k < 0 ? inverse(f) : f;
    while (table.size() <= want) table.push_back(compose(table.back(), step));
  }
  return table[want];
}

RaagAut IotaTable::operator()(const HeisElement& x) {
  return compose(c_a_power(x.m), compose(t_power(x.n), c_b_power(x.p)));
}

RelationsCheck verify_homomorphism(const Embedding& e, int grid_bound) {
  RelationsCheck result;
  const RaagAut t_inv = inverse(e.t);

  auto record = [&](std::string name, RaagAut lhs, RaagAut rhs) {
    const bool ok = equals(lhs, rhs);
    if (!ok && result.first_failure.empty()) result.first_failure = name;
    result.relations.push_back(RelationOutcome{std::move(name), ok, std::move(lhs), std::move(rhs)});
  };
  record("c_a c_b = c_b c_a", compose(e.c_a, e.c_b), compose(e.c_b, e.c_a));
  record("t c_b = c_b t", compose(e.t, e.c_b), compose(e.c_b, e.t));
  record("t c_a t^-1 = c_b c_a", compose(e.t, e.c_a, t_inv), compose(e.c_b, e.c_a));

  result.grid_bound = grid_bound;
  result.grid_passed = true;
  IotaTable table(e);
  std::vector<HeisElement> grid;
  for (int m = -grid_bound; m <= grid_bound; ++m) {
    for (int n = -grid_bound; n <= grid_bound; ++n) {
      for (int p = -grid_bound; p <= grid_bound; ++p) grid.push_back({m, n, p});
    }
  }
  std::vector<RaagAut> images;
  images.reserve(grid.size());
  for (const auto& x : grid) images.push_back(table(x));

  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      ++result.grid_pairs_checked;
      if (!equals(table(h_multiply(grid[i], grid[j])), compose(images[i], images[j]))) {
        if (result.grid_passed && result.first_failure.empty()) {
          result.first_failure = "iota(x y) = iota(x) iota(y) at x=" + format_heis(grid[i]) +
                                 " y=" + format_heis(grid[j]);
        }
        result.grid_passed = false;
      }
    }
  }

  result.passed = result.grid_passed &&
                  std::all_of(result.relations.begin(), result.relations.end(), [](const auto& r) { return r.passed; });
  return result;
}

namespace {

struct TripleOutcome {
  HeisElement x;
  bool direct_identity = false;
  bool shortcut_identity = false;
  bool image_of_a_matches = false;
};

// Image of a under c_a^m t^n c_b^p equals a b^n; when n = 0 the automorphism
// is c_a^m c_b^p = inner(a^m b^p), trivial exactly when a^m b^p is central.
TripleOutcome check_triple(const Embedding& e, IotaTable& table, const HeisElement& x) {
  const auto& g = e.graph;
  TripleOutcome out{x};
  out.direct_identity = is_identity(table(x));

  const RaagElement a = RaagElement::generator(g, e.a);
  const RaagElement image =
      apply(table.c_a_power(x.m), apply(table.t_power(x.n), apply(table.c_b_power(x.p), a)));
  out.image_of_a_matches = image == multiply(a, power(RaagElement::generator(g, e.b), x.n));
  if (image != a) {
    out.shortcut_identity = false;
  } else {
    const RaagElement z = multiply(power(a, x.m), power(RaagElement::generator(g, e.b), x.p));
    out.shortcut_identity = is_central(z);
  }
  return out;
}

}  // namespace

InjectivityCheck verify_injectivity(const Embedding& e, int bound, unsigned threads) {
  InjectivityCheck result;
  result.bound = bound;

  std::vector<HeisElement> triples;
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) {
      for (int p = -bound; p <= bound; ++p) {
        if (m != 0 || n != 0 || p != 0) triples.push_back({m, n, p});
      }
    }
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, triples.size())));
  std::vector<TripleOutcome> outcomes(triples.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    IotaTable table(e);
    for (std::size_t i = begin; i < end; ++i) outcomes[i] = check_triple(e, table, triples[i]);
  };
  if (threads <= 1) {
    work(0, triples.size());
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (triples.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < triples.size(); begin += chunk) {
      jobs.push_back(std::async(std::launch::async, work, begin, std::min(triples.size(), begin + chunk)));
    }
    for (auto& job : jobs) job.get();
  }

  for (const auto& o : outcomes) {
    ++result.triples_checked;
    if (o.direct_identity) {
      ++result.identities_found;
      if (result.first_failure.empty()) result.first_failure = "iota" + format_heis(o.x) + " is the identity";
    }
    if (o.direct_identity == o.shortcut_identity) {
      ++result.shortcut_agreements;
    } else if (result.first_failure.empty()) {
      result.first_failure = "shortcut disagrees with direct check at " + format_heis(o.x);
    }
    if (o.image_of_a_matches) {
      ++result.image_of_a_matches;
    } else if (result.first_failure.empty()) {
      result.first_failure = "iota" + format_heis(o.x) + "(a) != a b^n";
    }
  }
  result.passed = result.first_failure.empty();
  return result;
}

bool eq1_holds(const Embedding& e, long long m, long long n) {
  const RaagAut lhs = compose(power(e.t, n), power(e.c_a, m), power(e.t, -n));
  const RaagAut rhs = compose(power(e.c_a, m), power(e.c_b, m * n));
  return equals(lhs, rhs);
}

Eq1Check verify_eq1(const Embedding& e, int bound) {
  Eq1Check result;
  result.bound = bound;
  IotaTable table(e);
  for (int m = 1; m <= bound; ++m) {
    for (int n = 1; n <= bound; ++n) {
      ++result.identities_checked;
      const RaagAut lhs = compose(table.t_power(n), table.c_a_power(m), table.t_power(-n));
      const RaagAut rhs = compose(table.c_a_power(m), table.c_b_power(static_cast<std::int64_t>(m) * n));
      if (!equals(lhs, rhs) && result.first_failure.empty()) {
        result.first_failure = "t^" + std::to_string(n) + " c_a^" + std::to_string(m) + " t^-" + std::to_string(n) +
                               " = c_a^" + std::to_string(m) + " c_b^" + std::to_string(m * n);
      }
    }
  }
  result.passed = result.first_failure.empty();
  return result;
}

PowerSubgroupCheck verify_power_subgroup(const Embedding& e, int bound) {
  PowerSubgroupCheck result;
  result.bound = bound;
  IotaTable table(e);
  for (int k = 1; k <= bound; ++k) {
    PowerSubgroupRow row;
    row.k = k;
    const HeisElement ak = h_power(HeisElement::A(), k);
    const HeisElement bk = h_power(HeisElement::B(), k);
    const HeisElement ck = h_power(HeisElement::C(), k);
    row.commutator_ba = h_commutator(bk, ak);
    row.coordinates_passed = h_commutator(ak, ck).is_identity() && h_commutator(bk, ck).is_identity() &&
                             row.commutator_ba == h_power(HeisElement::C(), static_cast<std::int64_t>(k) * k);

    const RaagAut alpha = table(ak);
    const RaagAut beta = table(bk);
    const RaagAut gamma = table(ck);
    const RaagAut beta_inv = inverse(beta);
    row.automorphisms_passed =
        equals(compose(alpha, gamma), compose(gamma, alpha)) && equals(compose(beta, gamma), compose(gamma, beta)) &&
        equals(compose(beta, alpha, beta_inv), compose(power(gamma, k), alpha)) &&
        equals(table(row.commutator_ba), compose(beta, alpha, beta_inv, inverse(alpha)));

    if (result.first_failure.empty()) {
      if (!row.coordinates_passed) {
        result.first_failure = "[B^" + std::to_string(k) + ",A^" + std::to_string(k) + "] = C^" + std::to_string(k * k);
      } else if (!row.automorphisms_passed) {
        result.first_failure = "iota relations for A^" + std::to_string(k) + ",B^" + std::to_string(k) + ",C^" +
                               std::to_string(k);
      }
    }
    result.rows.push_back(row);
  }
  result.passed = result.first_failure.empty();
  return result;
}

std::string EmbeddingCertificate::first_failure() const {
  if (!relations.passed) return "RELATIONS: " + relations.first_failure;
  if (!injectivity.passed) return "INJECTIVITY: " + injectivity.first_failure;
  if (!eq1.passed) return "EQ1: " + eq1.first_failure;
  if (!power_subgroup.passed) return "POWER_SUBGROUP: " + power_subgroup.first_failure;
  return {};
}

EmbeddingCertificate certify(const Embedding& e, const VerifyBounds& bounds) {
  EmbeddingCertificate cert;
  cert.graph = e.graph;
  cert.a = e.a;
  cert.b = e.b;
  cert.c_a_images = format_aut(e.c_a);
  cert.t_images = format_aut(e.t);
  cert.c_b_images = format_aut(e.c_b);
  cert.relations = verify_homomorphism(e, bounds.homomorphism_grid);
  cert.injectivity = verify_injectivity(e, bounds.injectivity, bounds.threads);
  cert.eq1 = verify_eq1(e, bounds.eq1);
  cert.power_subgroup = verify_power_subgroup(e, bounds.power);
  return cert;
}

void render_certificate(std::ostream& out, const EmbeddingCertificate& cert) {
  const auto& g = *cert.graph;
  const std::string& a = g.name(cert.a);
  const std::string& b = g.name(cert.b);

  if (cert.all_passed()) {
    out << "certificate: heisenberg-embedding\n";
  } else {
    out << "refutation: heisenberg-embedding\n";
    out << "first_failure: " << cert.first_failure() << '\n';
  }
  out << '\n';

  out << "WITNESS\n";
  out << "vertices: " << format_vertex_set(g, g.vertices()) << '\n';
  out << "a: " << a << '\n';
  out << "b: " << b << '\n';
  out << "map: A -> c_" << a << ", B -> t_" << a << b << ", C -> c_" << b << '\n';
  out << "c_a:\n";
  render_aut_lines(out, cert.c_a_images, "  ");
  out << "t:\n";
  render_aut_lines(out, cert.t_images, "  ");
  out << "c_b:\n";
  render_aut_lines(out, cert.c_b_images, "  ");
  out << '\n';

  out << "RELATIONS\n";
  out << "status: " << pass_fail(cert.relations.passed) << '\n';
  for (const auto& r : cert.relations.relations) {
    out << "relation: " << r.name << '\n';
    out << "  result: " << pass_fail(r.passed) << '\n';
    out << "  lhs:\n";
    render_aut_lines(out, format_aut(r.lhs), "    ");
    out << "  rhs:\n";
    render_aut_lines(out, format_aut(r.rhs), "    ");
  }
  out << "homomorphism_grid_bound: " << cert.relations.grid_bound << '\n';
  out << "homomorphism_pairs_checked: " << cert.relations.grid_pairs_checked << '\n';
  out << "homomorphism_grid: " << pass_fail(cert.relations.grid_passed) << '\n';
  out << '\n';

  const auto& inj = cert.injectivity;
  out << "INJECTIVITY\n";
  out << "status: " << pass_fail(inj.passed) << '\n';
  out << "bound: " << inj.bound << '\n';
  out << "triples_checked: " << inj.triples_checked << '\n';
  out << "identities_found: " << inj.identities_found << '\n';
  out << "shortcut_agreement: " << inj.shortcut_agreements << "/" << inj.triples_checked << '\n';
  out << "image_of_a_is_a_b^n: " << inj.image_of_a_matches << "/" << inj.triples_checked << '\n';
  out << '\n';

  out << "EQ1\n";
  out << "status: " << pass_fail(cert.eq1.passed) << '\n';
  out << "identity: t^n c_a^m t^-n = c_a^m c_b^(mn)\n";
  out << "bound: " << cert.eq1.bound << '\n';
  out << "identities_checked: " << cert.eq1.identities_checked << '\n';
  out << '\n';

  out << "POWER_SUBGROUP\n";
  out << "status: " << pass_fail(cert.power_subgroup.passed) << '\n';
  out << "bound: " << cert.power_subgroup.bound << '\n';
  for (const auto& row : cert.power_subgroup.rows) {
    out << "k: " << row.k << '\n';
    out << "  commutator_B^k_A^k: " << format_heis(row.commutator_ba) << '\n';
    out << "  coordinates: " << pass_fail(row.coordinates_passed) << '\n';
    out << "  automorphisms: " << pass_fail(row.automorphisms_passed) << '\n';
  }
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::HeisenbergWitnessFound: return "heisenberg-witness-found";
    case Classification::NoAdjacentTransvection: return "no-adjacent-transvection";
    case Classification::AdjacentTransvectionsButNoWitness: return "adjacent-transvections-but-no-witness";
  }
  return "unknown";
}

AnalysisReport analyze(const SimplicialGraph& g) {
  AnalysisReport report;
  report.central_vertices = g.central_vertices();
  report.adjacent_transvection_pairs = g.adjacent_transvection_pairs();
  report.theorem_witnesses = g.theorem_witnesses();
  if (!report.theorem_witnesses.empty()) {
    report.classification = Classification::HeisenbergWitnessFound;
  } else if (report.adjacent_transvection_pairs.empty()) {
    report.classification = Classification::NoAdjacentTransvection;
  } else {
    report.classification = Classification::AdjacentTransvectionsButNoWitness;
  }
  return report;
}

void render_analysis(std::ostream& out, const SimplicialGraph& g, const AnalysisReport& report) {
  out << "vertices: " << format_vertex_set(g, g.vertices()) << '\n';
  out << "central_vertices: " << format_vertex_set(g, report.central_vertices) << '\n';
  out << "adjacent_transvection_pairs: " << format_pairs(g, report.adjacent_transvection_pairs) << '\n';
  out << "theorem_witnesses: " << format_pairs(g, report.theorem_witnesses) << '\n';
  out << "classification: " << to_string(report.classification) << '\n';
}

}  // namespace raag
