#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mf/coloring.hpp"
#include "mf/graph.hpp"
#include "mf/minor.hpp"

namespace mf {

enum class CertificateKind { model, coloring, exception, none_found };

/// How a model certificate relates pattern and host. A subgraph witness is a
/// model whose bags are single vertices.
enum class Relation { minor, subgraph };

/// Self-contained witness. Which fields are meaningful depends on kind:
///   model       graph, pattern, relation, bags, roots
///   coloring    graph, k, colors
///   exception   graph, pattern (absent), isomorphic_to
///   none_found  graph, then pattern + relation + host_roots (minor or
///               subgraph search) or k (colouring search)
struct Certificate {
  CertificateKind kind = CertificateKind::none_found;
  Graph graph;
  std::string pattern;
  Relation relation = Relation::minor;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> roots;  // (pattern vertex, host vertex)
  std::vector<int> host_roots;
  std::string isomorphic_to;
  int k = -1;
  std::vector<int> colors;

  bool operator==(const Certificate&) const = default;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* to_string(CertificateKind kind);

Certificate model_certificate(const Model& m, Relation relation = Relation::minor);
Certificate coloring_certificate(const Graph& g, const Coloring& c);
Certificate exception_certificate(const Graph& g, std::string pattern, std::string isomorphic_to);
Certificate no_model_certificate(const Graph& g, std::string pattern, std::vector<int> host_roots = {},
                                 Relation relation = Relation::minor);
Certificate no_coloring_certificate(const Graph& g, int k);

/// Re-checks the payload against the host graph from scratch. Negative kinds
/// (exception, none_found) repeat the exact search. Throws CertificateError.
void revalidate(const Certificate& c);

/// One-line JSON with a fixed key order.
std::string write_certificate(const Certificate& c);

/// Parses, checks the schema and revalidates. Throws CertificateError.
Certificate read_certificate(std::string_view json);

}  // namespace mf
