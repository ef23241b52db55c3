#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mf/graph.hpp"

namespace mf {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard graph6: size header (n + 63, or '~' plus 18 bits), then the upper
/// triangle column by column, six bits per printable character, zero padded.
std::string emit_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing newline / CR.
Graph parse_graph6(std::string_view text);

}  // namespace mf
