#include "polarsw/graph6.hpp"

#include <fstream>
#include <sstream>

namespace polarsw {
namespace {

constexpr std::uint64_t kMaxOrder = 68719476735ULL;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

unsigned sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw FormatError("graph6 byte out of range");
  return static_cast<unsigned>(v);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  put_size(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph graph6_decode(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw FormatError("empty graph6 input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (s[0] != '~') {
    n = sextet(s[0]);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw FormatError("truncated graph6 size");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(s[i]);
    if (n <= 62) throw FormatError("non-canonical graph6 size");
    pos = 4;
  } else {
    if (s.size() < 8) throw FormatError("truncated graph6 size");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(s[i]);
    if (n <= 258047) throw FormatError("non-canonical graph6 size");
    pos = 8;
  }

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (s.size() - pos != byte_count)
    throw FormatError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                      std::to_string(byte_count));

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned byte = sextet(s[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1u) b.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const unsigned last = sextet(s.back());
    if (last & ((1u << (6 - bit_count % 6)) - 1)) throw FormatError("nonzero graph6 padding bits");
  }
  return std::move(b).build();
}

void write_graph6(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << graph6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Graph read_graph6(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  return graph6_decode(line);
}

void write_labels(const std::filesystem::path& path, const std::vector<std::string>& header,
                  const std::vector<std::string>& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& l : labels) out << l << '\n';
}

LabelFile read_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  LabelFile lf;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') {
      lf.header.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    lf.labels.push_back(line);
  }
  return lf;
}

}  // namespace polarsw
