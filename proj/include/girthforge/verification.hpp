#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "girthforge/bipartite_graph.hpp"
#include "girthforge/exact.hpp"
#include "girthforge/family.hpp"

namespace girthforge {

struct GirthReport {
  std::optional<std::size_t> girth;  // nullopt for a forest
  std::vector<VertexId> witness;     // global ids, closing edge implied

  bool finite() const { return girth.has_value(); }
};

/// Exact girth by breadth-first search from every vertex. Each search stops
/// once it cannot improve on the best cycle seen so far.
GirthReport girth(const BipartiteGraph& g);

/// Decides whether g contains a simple cycle of exactly `length` edges.
/// Depth-first enumeration rooted at the cycle's smallest vertex id, with the
/// orientation fixed by requiring the second vertex to be smaller than the
/// last. Throws Error for odd or < 4 lengths.
std::optional<std::vector<VertexId>> has_cycle_of_length(const BipartiteGraph& g,
                                                         std::size_t length);

/// True iff `cycle` is a simple cycle in g (distinct vertices, consecutive
/// adjacency, closing edge) of at least 4 vertices.
bool is_valid_cycle(const BipartiteGraph& g, const std::vector<VertexId>& cycle);

struct SideDegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
};

struct DegreeStats {
  SideDegreeStats left;
  SideDegreeStats right;
};

DegreeStats degree_stats(const BipartiteGraph& g);

/// incidences / (ceil((m n)^(2/3)) + m + n). The ceiling makes the result an
/// upper estimate of the real-valued ratio.
Rational st_ratio(const BigInt& points, const BigInt& lines, const BigInt& incidences);

/// 1 + 4/(k^2+6k-3) for LU, 1 + 2/(k(k+1)) for Wenger.
Rational theoretical_exponent(Family family, int k);

/// k + 5.
int girth_target(int k);

/// Index-for-index adjacency equality. Throws Error on side-size mismatch.
bool graphs_identical(const BipartiteGraph& a, const BipartiteGraph& b);

}  // namespace girthforge
