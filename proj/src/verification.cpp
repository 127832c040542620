#include "girthforge/verification.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace girthforge {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::vector<VertexId> tree_path(const std::vector<VertexId>& parent, VertexId root, VertexId v) {
  std::vector<VertexId> path;
  for (VertexId x = v; x != root; x = parent[x]) path.push_back(x);
  path.push_back(root);
  std::reverse(path.begin(), path.end());
  return path;
}

class CycleSearch {
 public:
  CycleSearch(const BipartiteGraph& g, std::size_t length)
      : g_(g), length_(length), on_path_(g.vertex_count(), false), dist_(g.vertex_count()) {}

  std::optional<std::vector<VertexId>> run() {
    const auto n = static_cast<VertexId>(g_.vertex_count());
    for (VertexId root = 0; root < n; ++root) {
      if (g_.neighbors(root).size() < 2) continue;
      root_ = root;
      distances_from_root();
      path_.assign(1, root);
      on_path_[root] = true;
      const bool found = extend();
      on_path_[root] = false;
      if (found) return path_;
    }
    return std::nullopt;
  }

 private:
  // BFS distances from the root inside the subgraph of ids >= root; a
  // vertex farther than the remaining budget cannot lie on a closing path.
  void distances_from_root() {
    std::fill(dist_.begin(), dist_.end(), kUnseen);
    std::vector<VertexId> queue{root_};
    dist_[root_] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const VertexId x = queue[h];
      if (dist_[x] >= length_ / 2) continue;
      for (VertexId y : g_.neighbors(x)) {
        if (y > root_ && dist_[y] == kUnseen) {
          dist_[y] = dist_[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  bool extend() {
    const std::size_t d = path_.size();
    const VertexId last = path_.back();
    if (d == length_) {
      return path_[1] < last && g_.adjacent(last, root_);
    }
    for (VertexId w : g_.neighbors(last)) {
      if (w <= root_ || on_path_[w]) continue;
      if (dist_[w] == kUnseen || dist_[w] > length_ - d) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t length_;
  VertexId root_ = 0;
  std::vector<VertexId> path_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> dist_;
};

SideDegreeStats side_stats(std::size_t count, auto&& degree_of) {
  SideDegreeStats s;
  if (count == 0) return s;
  s.min = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t deg = degree_of(i);
    s.min = std::min(s.min, deg);
    s.max = std::max(s.max, deg);
    ++s.histogram[deg];
  }
  return s;
}

}  // namespace

GirthReport girth(const BipartiteGraph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::size_t best = kUnseen;
  VertexId best_root = 0, best_x = 0, best_y = 0;
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<VertexId> parent(n);
  std::vector<VertexId> queue;
  queue.reserve(n);

  for (VertexId root = 0; root < n; ++root) {
    for (VertexId v : queue) dist[v] = kUnseen;
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const VertexId x = queue[h];
      // Any cycle closed from x has length >= 2 dist[x] + 2.
      if (best != kUnseen && 2 * dist[x] + 2 >= best) break;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (len < best) {
            best = len;
            best_root = root;
            best_x = x;
            best_y = y;
          }
        }
      }
    }
  }

  GirthReport report;
  if (best == kUnseen) return report;
  report.girth = best;

  // Recompute the tree of the winning root to extract the witness.
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.assign(1, best_root);
  dist[best_root] = 0;
  parent[best_root] = best_root;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const VertexId x = queue[h];
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  auto cycle = tree_path(parent, best_root, best_x);
  auto back = tree_path(parent, best_root, best_y);
  cycle.insert(cycle.end(), back.rbegin(), back.rend() - 1);
  if (cycle.size() != best || !is_valid_cycle(g, cycle)) {
    throw Error("internal error: girth witness failed validation");
  }
  report.witness = std::move(cycle);
  return report;
}

std::optional<std::vector<VertexId>> has_cycle_of_length(const BipartiteGraph& g,
                                                         std::size_t length) {
  if (length % 2 != 0) {
    throw Error("cycle length " + std::to_string(length) +
                " is odd; bipartite graphs have only even cycles");
  }
  if (length < 4) throw Error("cycle length must be at least 4");
  auto found = CycleSearch(g, length).run();
  if (found && !is_valid_cycle(g, *found)) {
    throw Error("internal error: cycle witness failed validation");
  }
  return found;
}

bool is_valid_cycle(const BipartiteGraph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() < 4) return false;
  std::vector<VertexId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

DegreeStats degree_stats(const BipartiteGraph& g) {
  return {side_stats(g.left_count(), [&](std::size_t i) { return g.left_neighbors(i).size(); }),
          side_stats(g.right_count(), [&](std::size_t j) { return g.right_neighbors(j).size(); })};
}

Rational st_ratio(const BigInt& points, const BigInt& lines, const BigInt& incidences) {
  if (points < 1 || lines < 1) throw Error("st_ratio needs at least one point and one line");
  const BigInt bound = ceil_pow(points * lines, ExponentSpec(2, 3), 1) + points + lines;
  Rational r(incidences, bound);
  r.canonicalize();
  return r;
}

Rational theoretical_exponent(Family family, int k) {
  validate_k(family, k);
  Rational r = family == Family::LU ? Rational(4, k * k + 6 * k - 3) : Rational(2, k * (k + 1));
  r.canonicalize();
  return r + 1;
}

int girth_target(int k) {
  validate_k(Family::LU, k);
  return k + 5;
}

bool graphs_identical(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.left_count() != b.left_count() || a.right_count() != b.right_count()) {
    throw Error("graphs_identical: side sizes differ");
  }
  return a == b;
}

}  // namespace girthforge
