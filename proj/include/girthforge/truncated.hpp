#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girthforge/algebraic_graphs.hpp"
#include "girthforge/bipartite_graph.hpp"
#include "girthforge/exact.hpp"
#include "girthforge/family.hpp"

namespace girthforge {

/// Which truncation: family, dimension k and size parameter n.
struct TruncationSpec {
  Family family = Family::LU;
  int k = 3;
  BigInt n = 1;

  void validate() const;
  /// 4/(k^2+6k-3) for LU, 2/(k(k+1)) for Wenger.
  ExponentSpec base_exponent() const;
};

/// Inclusive integer range lo..hi; empty when lo > hi.
struct IntRange {
  BigInt lo;
  BigInt hi;

  bool empty() const { return lo > hi; }
  BigInt size() const { return empty() ? BigInt(0) : BigInt(hi - lo + 1); }
  bool contains(const BigInt& x) const { return lo <= x && x <= hi; }
};

IntRange lu_point_range(const CoordLabel& label, const TruncationSpec& spec);
IntRange lu_line_range(const CoordLabel& label, const TruncationSpec& spec);
IntRange wenger_point_range(int i, const TruncationSpec& spec);
IntRange wenger_line_range(int i, const TruncationSpec& spec);

/// Per-coordinate boxes for either family, in storage order.
std::vector<IntRange> point_box(const TruncationSpec& spec);
std::vector<IntRange> line_box(const TruncationSpec& spec);

/// Points U', line parameters V' and incidences E' over the integers.
/// points and line_params enumerate the full boxes in lexicographic order;
/// edges are sorted (point index, line index) pairs.
struct TruncatedArrangement {
  TruncationSpec spec;
  std::vector<IntTuple> points;
  std::vector<IntTuple> line_params;
  std::vector<Edge> edges;
  std::vector<std::string> warnings;

  BipartiteGraph graph() const { return BipartiteGraph(points.size(), line_params.size(), edges); }
};

/// The defining equations evaluated over Z (no modulus).
bool integer_edge(Family family, const IntTuple& point, const IntTuple& line_params);

/// The parent graph's edge predicate modulo q.
bool modular_edge(Family family, const IntTuple& point, const IntTuple& line_params, const BigInt& q);

struct BuildOptions {
  /// Cap on |U'| and on |V'|.
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// Brute-force cross-check of E' runs when |U'|*|V'| is at most this.
  std::uint64_t cross_check_limit = 2'000'000;
};

/// Builds U', V' and E'. Edges come from forward substitution along the free
/// coordinate (v_1 from each point for LU, u_{k-1} from each line for
/// Wenger); candidates leaving the partner box are dropped.
TruncatedArrangement build_truncated(const TruncationSpec& spec, const BuildOptions& options = {});

enum class PrimeMode { Window, Minimal };

/// Window: smallest prime in (4 n^{8/k}, 8 n^{8/k}) for LU or
/// (2^{2k} n^{2/k}, 2^{2k+1} n^{2/k}) for Wenger. Minimal: next prime above
/// the largest coordinate in U' and V'.
BigInt embedding_prime(const TruncatedArrangement& arr, PrimeMode mode);

/// Every coordinate is a residue mod q and every edge satisfies the parent
/// graph's modular equations. Throws Error if q is not prime.
bool verify_subgraph_embedding(const TruncatedArrangement& arr, const BigInt& q);

}  // namespace girthforge
