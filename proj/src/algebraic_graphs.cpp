#include "girthforge/algebraic_graphs.hpp"

#include <map>
#include <mutex>

#include "girthforge/exact.hpp"

namespace girthforge {

CoordLabel CoordLabel::pair(int i, int j) {
  if (i < 1 || j < 1 || i - j > 1 || j - i > 1) {
    throw Error("invalid pair label (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return {Kind::Pair, i, j};
}

CoordLabel CoordLabel::primed(int i) {
  if (i < 2) throw Error("primed labels start at i=2; u'_{1,1} is u_{1,1}");
  return {Kind::Primed, i, i};
}

std::string CoordLabel::to_string() const {
  switch (kind) {
    case Kind::First:
      return "1";
    case Kind::Pair:
      return std::to_string(i) + "," + std::to_string(j);
    case Kind::Primed:
      return std::to_string(i) + "," + std::to_string(i) + "'";
  }
  return {};
}

CoordLabel lu_label(int pos, int k) {
  if (pos < 1 || pos > k) {
    throw Error("label position " + std::to_string(pos) + " outside 1.." + std::to_string(k));
  }
  switch (pos) {
    case 1: return CoordLabel::first();
    case 2: return CoordLabel::pair(1, 1);
    case 3: return CoordLabel::pair(1, 2);
    case 4: return CoordLabel::pair(2, 1);
    case 5: return CoordLabel::pair(2, 2);
    default: break;
  }
  const int i = (pos - 6) / 4 + 2;
  switch ((pos - 6) % 4) {
    case 0: return CoordLabel::primed(i);
    case 1: return CoordLabel::pair(i, i + 1);
    case 2: return CoordLabel::pair(i + 1, i);
    default: return CoordLabel::pair(i + 1, i + 1);
  }
}

int lu_position(const CoordLabel& label, int k) {
  int pos = 0;
  switch (label.kind) {
    case CoordLabel::Kind::First:
      pos = 1;
      break;
    case CoordLabel::Kind::Primed:
      pos = 4 * (label.i - 2) + 6;
      break;
    case CoordLabel::Kind::Pair: {
      const int i = label.i, j = label.j;
      if (i == 1 && j == 1) pos = 2;
      else if (i == 1 && j == 2) pos = 3;
      else if (i == 2 && j == 1) pos = 4;
      else if (i == j) pos = 4 * (i - 3) + 9;       // (i,i) closes block i-1
      else if (j == i + 1) pos = 4 * (i - 2) + 7;   // (i,i+1) in block i
      else pos = 4 * (j - 2) + 8;                   // (j+1,j) in block j
      break;
    }
  }
  return pos <= k ? pos : 0;
}

namespace {

std::vector<LUEquation> make_lu_equations(int k) {
  using K = CoordLabel::Kind;
  auto at = [k](const CoordLabel& l) {
    const int p = lu_position(l, k);
    if (p == 0) throw Error("internal error: equation factor beyond k");
    return p - 1;
  };
  const CoordLabel first = CoordLabel::first();
  std::vector<LUEquation> eqs;
  for (int pos = 2; pos <= k; ++pos) {
    const CoordLabel t = lu_label(pos, k);
    LUEquation e{pos - 1, 0, 0};
    if (t.kind == K::Primed) {
      // v'_{i,i} - u'_{i,i} = u_1 v_{i,i-1}
      e.v_factor = at(CoordLabel::pair(t.i, t.i - 1));
      e.u_factor = at(first);
    } else if (t.i == 1 && t.j == 1) {
      // v_{1,1} - u_{1,1} = v_1 u_1
      e.v_factor = at(first);
      e.u_factor = at(first);
    } else if (t.i == t.j) {
      // v_{i,i} - u_{i,i} = v_1 u_{i-1,i}
      e.v_factor = at(first);
      e.u_factor = at(CoordLabel::pair(t.i - 1, t.i));
    } else if (t.j == t.i + 1) {
      // v_{i,i+1} - u_{i,i+1} = u_1 v_{i,i}
      e.v_factor = at(CoordLabel::pair(t.i, t.i));
      e.u_factor = at(first);
    } else {
      // v_{i+1,i} - u_{i+1,i} = v_1 u'_{i,i}, with u'_{1,1} = u_{1,1}
      const int i = t.j;
      e.v_factor = at(first);
      e.u_factor = at(i == 1 ? CoordLabel::pair(1, 1) : CoordLabel::primed(i));
    }
    eqs.push_back(e);
  }
  return eqs;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void check_vertex(const FieldVertex& x, Side side, int k, std::int64_t modulus) {
  if (x.side != side) throw Error("vertex on the wrong side of the bipartition");
  if (static_cast<int>(x.coords.size()) != k) {
    throw Error("vertex has " + std::to_string(x.coords.size()) + " coordinates, expected k=" +
                std::to_string(k));
  }
  for (auto c : x.coords) {
    if (c < 0 || c >= modulus) throw Error("vertex coordinate not reduced modulo the field size");
  }
}

void validate_field(std::int64_t modulus) {
  if (modulus < 2 || modulus > (std::int64_t{1} << 31) || !is_prime(BigInt(static_cast<long>(modulus)))) {
    throw Error("field size " + std::to_string(modulus) + " must be a prime below 2^31");
  }
}

std::uint64_t side_size(int k, std::int64_t modulus, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::uint64_t>(modulus);
    if (size > budget) {
      throw BudgetExceeded("graph side of size " + std::to_string(modulus) + "^" + std::to_string(k) +
                           " exceeds vertex budget " + std::to_string(budget));
    }
  }
  return size;
}

}  // namespace

const std::vector<LUEquation>& lu_equations(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<LUEquation>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, make_lu_equations(k)).first;
  return it->second;
}

void LUParams::validate() const {
  if (k < 3 || k % 2 == 0) {
    throw Error("lu requires odd k >= 3 (the girth bound k+5 holds for odd k only); got k=" +
                std::to_string(k));
  }
  validate_field(q);
}

void WengerParams::validate() const {
  if (k != 2 && k != 3 && k != 5) {
    throw Error("wenger requires k in {2,3,5}; got k=" + std::to_string(k));
  }
  validate_field(p);
}

bool lu_edge(const FieldVertex& u, const FieldVertex& v, const LUParams& params) {
  params.validate();
  check_vertex(u, Side::U, params.k, params.q);
  check_vertex(v, Side::V, params.k, params.q);
  for (const auto& e : lu_equations(params.k)) {
    if (mod(v.coords[e.target] - u.coords[e.target] - v.coords[e.v_factor] * u.coords[e.u_factor],
            params.q) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<FieldVertex> lu_neighbors(const FieldVertex& u, const LUParams& params) {
  params.validate();
  check_vertex(u, Side::U, params.k, params.q);
  const auto& eqs = lu_equations(params.k);
  std::vector<FieldVertex> out;
  out.reserve(static_cast<std::size_t>(params.q));
  for (std::int64_t v1 = 0; v1 < params.q; ++v1) {
    FieldVertex v{Side::V, std::vector<std::int64_t>(params.k, 0)};
    v.coords[0] = v1;
    for (const auto& e : eqs) {
      v.coords[e.target] = mod(u.coords[e.target] + v.coords[e.v_factor] * u.coords[e.u_factor], params.q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool wenger_edge(const FieldVertex& u, const FieldVertex& v, const WengerParams& params) {
  params.validate();
  check_vertex(u, Side::U, params.k, params.p);
  check_vertex(v, Side::V, params.k, params.p);
  const auto slope = v.coords[params.k - 1];
  for (int j = 0; j + 1 < params.k; ++j) {
    if (mod(v.coords[j] - u.coords[j] - u.coords[j + 1] * slope, params.p) != 0) return false;
  }
  return true;
}

std::vector<FieldVertex> wenger_neighbors(const FieldVertex& u, const WengerParams& params) {
  params.validate();
  check_vertex(u, Side::U, params.k, params.p);
  std::vector<FieldVertex> out;
  out.reserve(static_cast<std::size_t>(params.p));
  for (std::int64_t c = 0; c < params.p; ++c) {
    FieldVertex v{Side::V, std::vector<std::int64_t>(params.k, 0)};
    v.coords[params.k - 1] = c;
    for (int j = 0; j + 1 < params.k; ++j) v.coords[j] = mod(u.coords[j] + u.coords[j + 1] * c, params.p);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t field_index(const std::vector<std::int64_t>& coords, std::int64_t modulus) {
  std::size_t idx = 0;
  for (auto c : coords) idx = idx * static_cast<std::size_t>(modulus) + static_cast<std::size_t>(c);
  return idx;
}

FieldVertex field_vertex(Side side, std::size_t index, int k, std::int64_t modulus) {
  FieldVertex x{side, std::vector<std::int64_t>(k, 0)};
  for (int i = k - 1; i >= 0; --i) {
    x.coords[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(modulus));
    index /= static_cast<std::size_t>(modulus);
  }
  return x;
}

namespace {

template <class Params, class NeighborFn>
BipartiteGraph build_field_graph(const Params& params, int k, std::int64_t modulus,
                                 std::uint64_t budget, NeighborFn neighbors) {
  params.validate();
  const auto n = static_cast<std::size_t>(side_size(k, modulus, budget));
  std::vector<Edge> edges;
  edges.reserve(n * static_cast<std::size_t>(modulus));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : neighbors(field_vertex(Side::U, i, k, modulus), params)) {
      edges.emplace_back(i, field_index(v.coords, modulus));
    }
  }
  return BipartiteGraph(n, n, edges);
}

}  // namespace

BipartiteGraph build_lu_graph(const LUParams& params, std::uint64_t vertex_budget) {
  return build_field_graph(params, params.k, params.q, vertex_budget, lu_neighbors);
}

BipartiteGraph build_wenger_graph(const WengerParams& params, std::uint64_t vertex_budget) {
  return build_field_graph(params, params.k, params.p, vertex_budget, wenger_neighbors);
}

}  // namespace girthforge
