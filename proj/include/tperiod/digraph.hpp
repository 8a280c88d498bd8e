#ifndef TPERIOD_DIGRAPH_HPP
#define TPERIOD_DIGRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tperiod/boolmat.hpp"

namespace tperiod {

/// Digraph on vertices 1..order whose arcs are the set entries of an
/// adjacency matrix.
class Digraph {
 public:
  explicit Digraph(BoolMatrix adjacency) : adj_(std::move(adjacency)) {}

  static Digraph of(const ToeplitzSpec& spec) {
    return Digraph(BoolMatrix::from_toeplitz(spec));
  }

  std::size_t order() const noexcept { return adj_.order(); }
  const BoolMatrix& adjacency() const noexcept { return adj_; }
  bool has_arc(std::size_t u, std::size_t v) const { return adj_.at(u, v); }

  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  BoolMatrix adj_;
};

/// Quotient D/Z_d on residues 1..d: arc (i, j) iff D has an arc (m, l) with
/// m = i and l = j modulo d. Requires 1 <= d <= order.
Digraph contract(const Digraph& g, std::size_t d);

// Some vertex has in-degree 0 or out-degree 0.
bool has_source_or_sink(const Digraph& g);

/// Partition into directed cycles when every vertex has in- and out-degree
/// exactly one; nullopt otherwise. Each cycle starts at its smallest vertex
/// and cycles are listed by that vertex.
std::optional<std::vector<std::vector<std::size_t>>> cycle_decomposition(
    const Digraph& g);

// (A^length)(u, v) = 1. Vertices are 1-based; length 0 means u == v.
bool walk_exists(PowerSequence& powers, std::size_t u, std::size_t v,
                 std::size_t length);

/// Graphviz text: a "digraph G {" header, one "v;" line per vertex, then
/// one "u -> v;" line per arc in ascending (u, v) order, then "}".
std::string to_dot(const Digraph& g);

}  // namespace tperiod

#endif  // TPERIOD_DIGRAPH_HPP
