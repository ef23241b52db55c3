// mf: command-line front end for enumeration, minor/colouring searches,
// claim sweeps and certificate checking.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mf/certificate.hpp"
#include "mf/coloring.hpp"
#include "mf/generate.hpp"
#include "mf/graph6.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "mf/verify.hpp"

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::vector<mf::Graph> read_graphs(const std::string& path) {
  if (path.empty() || path == "-") return mf::read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return mf::read_graph6_stream(in);
}

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

int emit_report(const mf::Report& r, const std::string& output) {
  const std::string text = mf::write_report(r);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
  }
  // Timing lives outside the report so reports stay comparable across runs.
  std::fprintf(stderr, "%s n=%d: examined %llu graphs, %llu cases, %zu violations, %zu exceptions in %.2fs on %d workers\n",
               r.claim.c_str(), r.n, static_cast<unsigned long long>(r.graphs_examined),
               static_cast<unsigned long long>(r.cases), r.violations.size(), r.exceptions.size(),
               r.wall_seconds, r.workers);
  return r.verified() ? 0 : kExitViolations;
}

int check_certificates(const std::string& path) {
  const std::string text = slurp(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    std::cerr << "no certificates in " << path << "\n";
    return kExitViolations;
  }
  // A report is a single (pretty-printed) object carrying a claim id.
  if (text.find("\"claim\"") != std::string::npos) {
    try {
      mf::Report r = mf::read_report(text);
      std::size_t total = r.violations.size() + r.exceptions.size() + r.sanity.size() +
                          r.witness_certificates.size();
      std::cout << "report " << r.claim << " n=" << r.n << ": " << total
                << " certificates revalidated, " << r.violations.size() << " violations\n";
      return r.verified() ? 0 : kExitViolations;
    } catch (const mf::CertificateError& e) {
      std::cout << "invalid: " << e.what() << "\n";
      return kExitViolations;
    }
  }
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  int bad = 0;
  int good = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      mf::Certificate c = mf::read_certificate(line);
      ++good;
      std::cout << "line " << lineno << ": ok (" << mf::to_string(c.kind) << ")\n";
    } catch (const mf::CertificateError& e) {
      ++bad;
      std::cout << "line " << lineno << ": invalid: " << e.what() << "\n";
    }
  }
  std::cout << good << " valid, " << bad << " invalid\n";
  return bad == 0 ? 0 : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph-minor toolkit and theorem verification harness", "mf"};
  app.set_version_flag("--version", std::string("mf ") + mf::kToolkitVersion);
  app.require_subcommand(1);

  int jobs = 1;
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", jobs, "Worker threads")->envname("MF_JOBS")->check(CLI::PositiveNumber);
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Enumerate graphs up to isomorphism as graph6");
  mf::GraphFilter filter;
  gen->add_option("--n", filter.n, "Number of vertices")->required();
  gen->add_option("--min-edges", filter.min_edges, "Minimum number of edges");
  gen->add_option("--max-edges", filter.max_edges, "Maximum number of edges");
  gen->add_option("--min-conn", filter.min_connectivity, "Minimum vertex connectivity");
  gen->add_option("--max-degree", filter.max_degree, "Maximum degree");

  // minor
  auto* minor = app.add_subcommand("minor", "Search each input graph for a (rooted) minor model");
  std::string pattern_name;
  std::vector<int> roots;
  std::string input;
  minor->add_option("--pattern,-p", pattern_name, "Pattern name (k7v, k42s, c5, spindle, g6:...)")->required();
  minor->add_option("--roots", roots, "Host roots, comma separated")->delimiter(',');
  minor->add_option("--input", input, "graph6 file (default: stdin)");

  // color
  auto* color = app.add_subcommand("color", "k-colour each input graph (chromatic number if --k is omitted)");
  int k = -1;
  color->add_option("--k", k, "Number of colours")->check(CLI::NonNegativeNumber);
  color->add_option("--input", input, "graph6 file (default: stdin)");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustively check a claim at one order");
  std::string claim;
  int n = 0;
  std::string output;
  bool witnesses = false;
  verify->add_option("claim", claim, "Claim id")->required()->check(CLI::IsMember(mf::verification_claims()));
  verify->add_option("--n", n, "Number of vertices (ignored by spindle and maxdeg2)");
  verify->add_option("--input", input, "Check the graphs in this graph6 file instead of enumerating");
  verify->add_option("--output,-o", output, "Write the report here instead of stdout");
  verify->add_flag("--witnesses", witnesses, "Include positive certificates in the report");
  add_jobs(verify);

  // explore
  auto* explore = app.add_subcommand("explore", "Search for counterexample candidates to a conjecture");
  std::string conjecture;
  explore->add_option("conjecture", conjecture, "Conjecture id")
      ->required()
      ->check(CLI::IsMember({"k7mm-extremal", "k7mm-color", "k7m-color"}));
  explore->add_option("--n", n, "Number of vertices")->required();
  explore->add_option("--input", input, "Check the graphs in this graph6 file instead of enumerating");
  explore->add_option("--output,-o", output, "Write the report here instead of stdout");
  explore->add_flag("--witnesses", witnesses, "Include positive certificates in the report");
  add_jobs(explore);

  // cert check
  auto* cert = app.add_subcommand("cert", "Certificate utilities");
  cert->require_subcommand(1);
  auto* check = cert->add_subcommand("check", "Revalidate certificates (JSON lines) or a report");
  std::string cert_path;
  check->add_option("file", cert_path, "Certificate or report file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      for (const mf::Graph& g : mf::generate_graphs(filter)) std::cout << mf::emit_graph6(g) << '\n';
      return 0;
    }
    if (minor->parsed()) {
      const mf::Pattern p = mf::parse_pattern(pattern_name);
      for (const mf::Graph& g : read_graphs(input)) {
        auto m = roots.empty() ? mf::find_model(g, p) : mf::find_rooted_model(g, p, roots);
        std::cout << mf::write_certificate(m ? mf::model_certificate(*m)
                                             : mf::no_model_certificate(g, p.name, roots))
                  << '\n';
      }
      return 0;
    }
    if (color->parsed()) {
      for (const mf::Graph& g : read_graphs(input)) {
        const int colours = k >= 0 ? k : mf::chromatic_number(g);
        auto c = mf::find_coloring(g, colours);
        std::cout << mf::write_certificate(c ? mf::coloring_certificate(g, *c)
                                             : mf::no_coloring_certificate(g, colours))
                  << '\n';
      }
      return 0;
    }
    mf::VerifyOptions opt;
    opt.jobs = jobs;
    opt.keep_witnesses = witnesses;
    if (!input.empty()) opt.input = read_graphs(input);
    if (verify->parsed()) return emit_report(mf::run_claim(claim, n, opt), output);
    if (explore->parsed()) return emit_report(mf::explore_conjecture(conjecture, n, opt), output);
    if (check->parsed()) return check_certificates(cert_path);
  } catch (const std::exception& e) {
    std::cerr << "mf: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
