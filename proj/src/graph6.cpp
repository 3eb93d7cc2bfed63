#include "hamsq/graph6.hpp"

#include "hamsq/error.hpp"

namespace hamsq {

namespace {

constexpr int kBias = 63;

int bit_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail(ErrorCode::kParse, "graph6: empty string");
  for (char c : text) {
    if (c < kBias || c > 126) {
      fail(ErrorCode::kParse, "graph6: byte outside 63..126");
    }
  }
  const int n = text[0] - kBias;
  if (n > Graph::kMaxVertices) {
    fail(ErrorCode::kParse, "graph6: only n <= 62 is supported");
  }
  const int bits = bit_count(n);
  const std::size_t want = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != want) {
    fail(ErrorCode::kParse, "graph6: expected " + std::to_string(want) +
                                " bytes for n=" + std::to_string(n) + ", got " +
                                std::to_string(text.size()));
  }
  std::vector<std::uint64_t> rows(n, 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (; k % 6 != 0; ++k) {
    const int byte = text[1 + k / 6] - kBias;
    if ((byte >> (5 - k % 6)) & 1) {
      fail(ErrorCode::kParse, "graph6: nonzero padding bits");
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
      }
    }
  }
  if (k % 6 != 0) {
    acc <<= 6 - k % 6;
    out.push_back(static_cast<char>(acc + kBias));
  }
  return out;
}

}  // namespace hamsq
