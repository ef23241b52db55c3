#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mf/certificate.hpp"
#include "mf/generate.hpp"

namespace mf {

inline constexpr const char* kToolkitVersion = "1.0.0";

struct FilterSummary {
  int n = 0;
  int min_edges = 0;
  int max_edges = 0;
  int min_connectivity = 0;
  int max_degree = -1;
  std::vector<std::string> predicates;

  bool operator==(const FilterSummary&) const = default;
};

/// Outcome of one sweep. Serialised JSON covers everything except the timing
/// fields, so that runs with different worker counts compare byte for byte.
struct Report {
  std::string claim;
  int n = 0;
  FilterSummary filter;
  std::string source = "generated";  // or "input"
  std::uint64_t graphs_read = 0;      // before the hypothesis filter (input streams)
  std::uint64_t graphs_examined = 0;
  std::uint64_t cases = 0;            // (G, Z) pairs, chi >= 7 graphs, ... per claim
  std::uint64_t witnesses = 0;
  std::vector<Certificate> violations;
  std::vector<Certificate> exceptions;
  std::vector<Certificate> sanity;    // extra fixed checks run alongside the sweep
  std::vector<Certificate> witness_certificates;  // only when requested

  double wall_seconds = 0;
  int workers = 1;

  bool verified() const { return violations.empty(); }
};

struct VerifyOptions {
  int jobs = 1;
  /// Replaces enumeration; graphs failing the claim's hypothesis are skipped.
  std::optional<std::vector<Graph>> input;
  bool keep_witnesses = false;
};

/// 4-connected, |E| >= 4n - 8: K7^v model unless K_{2,2,2,2}. 5 <= n <= 11.
Report verify_extremal(int n, const VerifyOptions& opt = {});
/// chi >= 7 implies a K7^v model. 7 <= n <= 9.
Report verify_main(int n, const VerifyOptions& opt = {});
/// (G, Z) internally 4-connected and |E| >= 3n - 6: Z-rooted K4 model. 4 <= n <= 8.
Report verify_lemma_k4(int n, const VerifyOptions& opt = {});
/// (G, Z) internally 4-connected: Z-rooted K4^- model. 6 <= n <= 8.
Report verify_lemma_k4minus(int n, const VerifyOptions& opt = {});
/// (G, Z) internally 4-connected, |E| >= 4n - 9: Z-rooted K*_{4,2} model, and the
/// K*_{4,2} model read as a K_{4,2} model. 6 <= n <= 8.
Report verify_lemma_k42star(int n, const VerifyOptions& opt = {});
/// Seven vertices, alpha <= 2, omega <= 3: contains the Moser spindle.
Report verify_spindle_claim(const VerifyOptions& opt = {});
/// Seven vertices, max degree <= 2: a subgraph of C7, C6+K1, C5+K2, C4+C3 or C3+C3+K1.
Report verify_maxdeg2_cases(const VerifyOptions& opt = {});

/// Exploratory sweeps; violations hold counterexample candidates.
/// name: k7mm-extremal, k7mm-color or k7m-color. 1 <= n <= 10.
Report explore_conjecture(std::string_view name, int n, const VerifyOptions& opt = {});

/// Four universal vertices over a perfect-as-possible matching on the other n - 4.
Graph matching_over_k4(int n);

/// Claim ids accepted by run_claim, in CLI spelling.
const std::vector<std::string>& verification_claims();
/// Dispatch by CLI id; n is ignored by the fixed seven-vertex claims.
Report run_claim(std::string_view claim, int n, const VerifyOptions& opt = {});

std::string write_report(const Report& r);
/// Parses a report, checks its schema and revalidates every certificate in it.
Report read_report(std::string_view json);

}  // namespace mf
