#include <stdexcept>
#include <string>

#include "dcg/graph.hpp"

namespace dcg {

namespace {
constexpr int kBias = 63;   // printable offset
constexpr int kLong = 126;  // '~' introduces the 18-bit order form
}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLong));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int acc = 0, bits = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < kBias || c > kLong) throw std::invalid_argument("graph6: byte out of printable range");
    return c - kBias;
  };

  long n;
  int first = next();
  if (first == kLong - kBias) {
    int a = next(), b = next(), c = next();
    if (a == kLong - kBias) throw std::invalid_argument("graph6: 36-bit orders unsupported");
    n = (static_cast<long>(a) << 12) | (b << 6) | c;
  } else {
    n = first;
  }
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds capacity 64");

  GraphBuilder builder(static_cast<int>(n));
  int acc = 0, bits = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) builder.add_edge(row, col);
      --bits;
    }
  if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  if (pos != text.size()) throw std::invalid_argument("graph6: trailing bytes");
  return std::move(builder).build();
}

}  // namespace dcg
