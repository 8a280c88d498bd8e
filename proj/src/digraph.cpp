#include "tperiod/digraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tperiod {

std::vector<std::size_t> Digraph::out_degrees() const {
  std::vector<std::size_t> deg(order() + 1, 0);
  for (std::size_t u = 1; u <= order(); ++u)
    for (auto w : adj_.row(u)) deg[u] += static_cast<std::size_t>(std::popcount(w));
  return deg;
}

std::vector<std::size_t> Digraph::in_degrees() const {
  std::vector<std::size_t> deg(order() + 1, 0);
  for (std::size_t u = 1; u <= order(); ++u)
    for (std::size_t v = 1; v <= order(); ++v)
      if (adj_.at(u, v)) ++deg[v];
  return deg;
}

Digraph contract(const Digraph& g, std::size_t d) {
  if (d < 1 || d > g.order())
    throw std::invalid_argument("contraction modulus outside [1, order]");
  const std::size_t n = g.order();
  // fold[i][j] for residues i, j in 1..d, stored flat.
  std::vector<char> fold(d * d, 0);
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t i = (m - 1) % d;
    const auto row = g.adjacency().row(m);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (auto bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t l =
            w * BoolMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(bits));  // 0-based
        fold[i * d + l % d] = 1;
      }
    }
  }
  return Digraph(BoolMatrix::from_predicate(
      d, [&](std::size_t i, std::size_t j) { return fold[(i - 1) * d + j - 1] != 0; }));
}

bool has_source_or_sink(const Digraph& g) {
  const auto out = g.out_degrees();
  const auto in = g.in_degrees();
  for (std::size_t v = 1; v <= g.order(); ++v)
    if (out[v] == 0 || in[v] == 0) return true;
  return false;
}

std::optional<std::vector<std::vector<std::size_t>>> cycle_decomposition(
    const Digraph& g) {
  const auto out = g.out_degrees();
  const auto in = g.in_degrees();
  const std::size_t n = g.order();
  for (std::size_t v = 1; v <= n; ++v)
    if (out[v] != 1 || in[v] != 1) return std::nullopt;

  std::vector<std::size_t> next(n + 1, 0);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = 1; v <= n; ++v)
      if (g.has_arc(u, v)) next[u] = v;

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = start; !seen[v]; v = next[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool walk_exists(PowerSequence& powers, std::size_t u, std::size_t v,
                 std::size_t length) {
  const std::size_t n = powers.base().order();
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::out_of_range("walk endpoint outside the vertex set");
  return powers.at(length).at(u, v);
}

std::string to_dot(const Digraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t v = 1; v <= g.order(); ++v) os << v << ";\n";
  for (std::size_t u = 1; u <= g.order(); ++u)
    for (std::size_t v = 1; v <= g.order(); ++v)
      if (g.has_arc(u, v)) os << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tperiod
