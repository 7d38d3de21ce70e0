#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tperf/graph.hpp"

namespace tperf {

/// Malformed textual input; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Standard graph6: one header byte n+63, then the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3)... packed six bits per byte, offset 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace tperf
