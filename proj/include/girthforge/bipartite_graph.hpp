#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace girthforge {

using VertexId = std::uint32_t;
using Edge = std::pair<std::size_t, std::size_t>;  // (left index, right index)

/// Immutable bipartite adjacency. Vertices carry global ids: left vertex i is
/// id i, right vertex j is id left_count() + j.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left_count, std::size_t right_count, std::span<const Edge> edges);

  std::size_t left_count() const { return left_.size(); }
  std::size_t right_count() const { return right_.size(); }
  std::size_t vertex_count() const { return left_.size() + right_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted right-side indices adjacent to left vertex i.
  std::span<const VertexId> left_neighbors(std::size_t i) const { return left_[i]; }
  /// Sorted left-side indices adjacent to right vertex j.
  std::span<const VertexId> right_neighbors(std::size_t j) const { return right_[j]; }

  /// Global-id adjacency, sorted.
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  std::vector<std::vector<VertexId>> left_;
  std::vector<std::vector<VertexId>> right_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace girthforge
