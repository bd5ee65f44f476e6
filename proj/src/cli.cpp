#include "raag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "raag/embedding.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::cli {

namespace {

struct Config {
  std::string graph_path;
  std::string a;
  std::string b;
  std::string word;
  std::string output;
  VerifyBounds bounds;
};

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const SimplicialGraph g = SimplicialGraph::load(cfg.graph_path);
  const AnalysisReport report = analyze(g);
  render_analysis(out, g, report);
  return report.theorem_witnesses.empty() ? kNoWitness : kSuccess;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const GraphPtr g = share(SimplicialGraph::load(cfg.graph_path));
  const VertexId a = g->find(cfg.a);
  const VertexId b = g->find(cfg.b);
  Embedding e = [&] {
    try {
      return build_embedding(g, a, b);
    } catch (const HypothesisError& ex) {
      err << "hypothesis failure: " << ex.what() << '\n';
      throw;
    }
  }();
  const EmbeddingCertificate cert = certify(e, cfg.bounds);

  if (cfg.output.empty()) {
    render_certificate(out, cert);
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw LookupError("cannot open output file '" + cfg.output + "'");
    render_certificate(file, cert);
  }
  if (!cert.all_passed()) {
    err << "verification failed: " << cert.first_failure() << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_nf(const Config& cfg, std::ostream& out) {
  const GraphPtr g = share(SimplicialGraph::load(cfg.graph_path));
  const RaagElement x = reduce(g, parse_word(*g, cfg.word));
  out << format_word(*g, x.word()) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Right-angled Artin group words, automorphisms and Heisenberg embeddings", "raag-cli"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Report domination data and embedding witnesses of a graph");
  analyze_cmd->add_option("graph", cfg.graph_path, "Graph file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Build the Heisenberg embedding for a witness and certify it");
  verify_cmd->add_option("graph", cfg.graph_path, "Graph file")->required();
  verify_cmd->add_option("a", cfg.a, "Dominated vertex")->required();
  verify_cmd->add_option("b", cfg.b, "Dominating vertex")->required();
  verify_cmd->add_option("--injectivity-bound", cfg.bounds.injectivity, "Sweep bound N for injectivity")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify_cmd->add_option("--eq1-bound", cfg.bounds.eq1, "Bound M for the conjugation identity")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify_cmd->add_option("--power-bound", cfg.bounds.power, "Bound K for the power subgroup check")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify_cmd->add_option("--threads", cfg.bounds.threads, "Worker threads (0 = hardware)")->capture_default_str();
  verify_cmd->add_option("-o,--output", cfg.output, "Write the certificate here instead of stdout");

  auto* nf_cmd = app.add_subcommand("nf", "Print the normal form of a word");
  nf_cmd->add_option("graph", cfg.graph_path, "Graph file")->required();
  nf_cmd->add_option("word", cfg.word, "Word, e.g. 'a b^-2 c'")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out, err);
    if (*nf_cmd) return cmd_nf(cfg, out);
  } catch (const HypothesisError&) {
    return kHypothesisFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace raag::cli
