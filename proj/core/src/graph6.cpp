#include "turan2d/graph6.hpp"

namespace turan2d {

namespace {
constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw invalid_argument("graph6: empty input");

  for (char c : text)
    if (c < 63 || c > 126)
      throw invalid_argument("graph6: byte outside 63..126");

  size_t pos = 0;
  long n;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = (long(text[1] - kBias) << 12) | (long(text[2] - kBias) << 6) | long(text[3] - kBias);
    pos = 4;
  } else {
    // 8-byte form encodes n > 258047, always past our vertex cap
    throw invalid_argument("graph6: malformed or oversized length prefix");
  }
  if (n > Graph::kMaxVertices)
    throw invalid_argument("graph6: vertex count " + std::to_string(n) + " exceeds cap 512");

  const long nbits = n * (n - 1) / 2;
  const size_t expect = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() - pos != expect)
    throw invalid_argument("graph6: body length mismatch (expected " +
                           std::to_string(expect) + " bytes, got " +
                           std::to_string(text.size() - pos) + ")");

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (long b = nbits; b < static_cast<long>(expect) * 6; ++b) {
    int byte = text[pos + b / 6] - kBias;
    if ((byte >> (5 - b % 6)) & 1) throw invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb) out.push_back(static_cast<char>(kBias + (acc << (6 - nb))));
  return out;
}

}  // namespace turan2d
