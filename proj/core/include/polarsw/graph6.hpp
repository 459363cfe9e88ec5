#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarsw/graph.hpp"

namespace polarsw {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 encoding (no trailing newline): N(n) followed by the upper
/// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian
/// into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing newline. Throws
/// FormatError on malformed input.
Graph graph6_decode(std::string_view bytes);

/// Writes the graph6 line (with newline) to `path`.
void write_graph6(const std::filesystem::path& path, const Graph& g);
/// Reads the first graph of a graph6 file.
Graph read_graph6(const std::filesystem::path& path);

/// Sidecar label files: optional "#"-prefixed header lines, then one label
/// per line in vertex order.
void write_labels(const std::filesystem::path& path, const std::vector<std::string>& header,
                  const std::vector<std::string>& labels);

struct LabelFile {
  std::vector<std::string> header;
  std::vector<std::string> labels;
};
LabelFile read_labels(const std::filesystem::path& path);

}  // namespace polarsw
