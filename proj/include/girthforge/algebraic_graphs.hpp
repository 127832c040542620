#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "girthforge/bipartite_graph.hpp"

namespace girthforge {

/// Name of one coordinate in the Lazebnik-Ustimenko labeling:
/// First is u_1, Pair(i,j) is u_{i,j}, Primed(i) is u'_{i,i} (i >= 2; the
/// primed (1,1) coordinate is the same as Pair(1,1) and never stored).
struct CoordLabel {
  enum class Kind { First, Pair, Primed };
  Kind kind = Kind::First;
  int i = 0;
  int j = 0;

  static CoordLabel first() { return {Kind::First, 0, 0}; }
  static CoordLabel pair(int i, int j);
  static CoordLabel primed(int i);

  std::string to_string() const;
  friend bool operator==(const CoordLabel&, const CoordLabel&) = default;
};

/// Label of 1-based position `pos` among the first k coordinates.
CoordLabel lu_label(int pos, int k);

/// 1-based position of a label, or 0 if it lies beyond the first k.
int lu_position(const CoordLabel& label, int k);

/// One LU edge equation over 0-based positions:
///   v[target] - u[target] = v[v_factor] * u[u_factor]
/// Both factors precede target, so equations applied in target order
/// determine v from u and v[0] (or x from the line parameters and x[0]).
struct LUEquation {
  int target;
  int v_factor;
  int u_factor;
};

/// The k-1 equations, sorted by target position (1..k-1 zero-based).
const std::vector<LUEquation>& lu_equations(int k);

enum class Side { U, V };

struct FieldVertex {
  Side side = Side::U;
  std::vector<std::int64_t> coords;

  friend bool operator==(const FieldVertex&, const FieldVertex&) = default;
};

struct LUParams {
  int k;
  std::int64_t q;
  void validate() const;
};

struct WengerParams {
  int k;
  std::int64_t p;
  void validate() const;
};

inline constexpr std::uint64_t kDefaultVertexBudget = 1u << 22;

bool lu_edge(const FieldVertex& u, const FieldVertex& v, const LUParams& params);
std::vector<FieldVertex> lu_neighbors(const FieldVertex& u, const LUParams& params);

bool wenger_edge(const FieldVertex& u, const FieldVertex& v, const WengerParams& params);
std::vector<FieldVertex> wenger_neighbors(const FieldVertex& u, const WengerParams& params);

/// Mixed-radix encoding of a residue tuple, first coordinate most
/// significant. This is the vertex index inside its side of the graph.
std::size_t field_index(const std::vector<std::int64_t>& coords, std::int64_t modulus);
FieldVertex field_vertex(Side side, std::size_t index, int k, std::int64_t modulus);

/// D(q,k): left side U, right side V, both indexed by field_index.
BipartiteGraph build_lu_graph(const LUParams& params,
                              std::uint64_t vertex_budget = kDefaultVertexBudget);

/// H_k(p), same indexing convention.
BipartiteGraph build_wenger_graph(const WengerParams& params,
                                  std::uint64_t vertex_budget = kDefaultVertexBudget);

}  // namespace girthforge
