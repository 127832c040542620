#include "girthforge/bipartite_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "girthforge/exact.hpp"

namespace girthforge {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count,
                               std::span<const Edge> edges)
    : left_(left_count), right_(right_count), adj_(left_count + right_count) {
  if (left_count + right_count > std::numeric_limits<VertexId>::max()) {
    throw BudgetExceeded("graph too large for 32-bit vertex ids");
  }
  for (const auto& [l, r] : edges) {
    if (l >= left_count || r >= right_count) {
      throw Error("edge (" + std::to_string(l) + "," + std::to_string(r) + ") out of range");
    }
    left_[l].push_back(static_cast<VertexId>(r));
    right_[r].push_back(static_cast<VertexId>(l));
  }
  auto normalize = [](std::vector<VertexId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  const auto offset = static_cast<VertexId>(left_count);
  for (std::size_t i = 0; i < left_count; ++i) {
    normalize(left_[i]);
    edge_count_ += left_[i].size();
    auto& a = adj_[i];
    a.reserve(left_[i].size());
    for (VertexId r : left_[i]) a.push_back(r + offset);
  }
  for (std::size_t j = 0; j < right_count; ++j) {
    normalize(right_[j]);
    adj_[offset + j] = right_[j];
  }
}

bool BipartiteGraph::adjacent(VertexId a, VertexId b) const {
  const auto& n = adj_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < left_.size(); ++i) {
    for (VertexId r : left_[i]) out.emplace_back(i, r);
  }
  return out;
}

}  // namespace girthforge
