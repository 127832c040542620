// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "girthforge/algebraic_graphs.hpp"
#include "girthforge/realization.hpp"
#include "girthforge/truncated.hpp"
#include "girthforge/verification.hpp"

using namespace girthforge;

namespace {

struct Check {
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Check&)> body;
};

std::size_t exhaustive_min_cycle(const BipartiteGraph& g) {
  for (std::size_t len = 4; len <= g.vertex_count(); len += 2) {
    if (has_cycle_of_length(g, len)) return len;
  }
  return 0;
}

bool regular(const BipartiteGraph& g, std::size_t d) {
  const auto s = degree_stats(g);
  return s.left.min == d && s.left.max == d && s.right.min == d && s.right.max == d;
}

void criterion1(Check& c) {
  const auto g = build_lu_graph({3, 3});
  c.expect(g.vertex_count() == 54, "54 vertices");
  c.expect(g.edge_count() == 81, "81 edges");
  c.expect(regular(g, 3), "3-regular");
  const auto r = girth(g);
  c.expect(r.finite() && *r.girth >= 8, "girth >= 8");
  const std::size_t oracle = exhaustive_min_cycle(g);
  c.expect(r.finite() && *r.girth == oracle, "BFS girth equals enumeration oracle");
  c.log << " girth=" << (r.finite() ? std::to_string(*r.girth) : "inf") << " oracle=" << oracle;
}

void criterion2(Check& c) {
  const auto g = build_lu_graph({5, 3});
  c.expect(g.vertex_count() == 486, "486 vertices");
  c.expect(regular(g, 3), "3-regular");
  const auto r = girth(g);
  c.expect(r.finite() && *r.girth >= 10, "girth >= 10");
  c.log << " girth=" << (r.finite() ? std::to_string(*r.girth) : "inf");
}

void criterion3(Check& c) {
  const std::vector<std::pair<int, std::int64_t>> cases{{2, 3}, {2, 5}, {2, 7}, {3, 3}, {5, 2}, {5, 3}};
  for (auto [k, p] : cases) {
    const auto g = build_wenger_graph({k, p});
    const bool free = !has_cycle_of_length(g, 2 * static_cast<std::size_t>(k)).has_value();
    c.expect(free, "H_" + std::to_string(k) + "(" + std::to_string(p) + ") has no C_" + std::to_string(2 * k));
    c.log << " H" << k << "(" << p << "):" << (free ? "free" : "CYCLE");
  }
}

void criterion4(Check& c) {
  const auto arr = build_truncated({Family::LU, 3, 64});
  c.expect(arr.points.size() == 135, "|U'| = 135");
  c.expect(arr.line_params.size() == 2145, "|V'| = 2145");
  c.expect(arr.edges.size() == 675, "|E'| = 675");
  const auto g = arr.graph();
  const auto s = degree_stats(g);
  const BigInt bound = floor_pow(64, ExponentSpec(1, 6), 2);
  c.expect(bound == 4, "floor_pow(64,1/6,2) = 4");
  c.expect(s.left.min == 5 && s.left.max == 5, "every point degree 5");
  c.expect(BigInt(static_cast<unsigned long>(s.left.min)) >= bound, "point degree >= 4");
  const auto r = girth(g);
  c.expect(!r.finite() || *r.girth >= 8, "girth >= 8");
  const BigInt q = embedding_prime(arr, PrimeMode::Minimal);
  c.expect(q == 37, "minimal prime 37");
  c.expect(verify_subgraph_embedding(arr, 37), "subgraph of D(37,3)");
  c.log << " girth=" << (r.finite() ? std::to_string(*r.girth) : "inf");
}

void criterion5(Check& c) {
  const auto arr = build_truncated({Family::Wenger, 2, 64});
  c.expect(arr.points.size() == 325, "|U'| = 325");
  c.expect(arr.line_params.size() == 165, "|V'| = 165");
  c.expect(arr.edges.size() == 825, "|E'| = 825");
  const auto g = arr.graph();
  const auto s = degree_stats(g);
  const BigInt bound = floor_pow(64, ExponentSpec(1, 3), 1);
  c.expect(bound == 4, "floor_pow(64,1/3,1) = 4");
  c.expect(s.right.min == 5 && s.right.max == 5, "every line degree 5");
  c.expect(BigInt(static_cast<unsigned long>(s.right.min)) >= bound, "line degree >= 4");
  c.expect(!has_cycle_of_length(g, 4).has_value(), "C4-free");
}

void criterion6(Check& c) {
  for (const TruncationSpec& spec : {TruncationSpec{Family::LU, 3, 64}, TruncationSpec{Family::Wenger, 2, 64}}) {
    const auto arr = build_truncated(spec);
    const auto lines = realize_lines(arr);
    const std::string tag(family_name(spec.family));
    c.expect(incidence_set_kd(arr.points, lines) == arr.edges, tag + ": incidences equal E'");
    const auto cert = certify_lines_distinct(lines);
    c.expect(cert.distinct, tag + ": lines distinct");
    c.log << " " << tag << ":" << lines.size() << " distinct lines";
  }
}

void criterion7(Check& c) {
  const auto arr = build_truncated({Family::LU, 3, 64});
  const auto result = project_generic(arr.points, realize_lines(arr), 1, 1u << 16, 8);
  const auto& planar = result.planar;
  c.expect(planar.points.size() == 135, "135 points");
  c.expect(planar.lines.size() == 2145, "2145 lines");
  c.expect(planar.incidences.size() == 675, "675 incidences");
  c.expect(graphs_identical(arr.graph(), planar.graph()), "graphs identical");
  const auto r = girth(planar.graph());
  c.expect(!r.finite() || *r.girth >= 8, "planar girth >= 8");
  c.log << " seed=" << result.map.seed << " attempts=" << result.attempts;
}

void criterion8(Check& c) {
  c.expect(theoretical_exponent(Family::LU, 3) == Rational(7, 6), "LU k=3 exponent 7/6");
  c.expect(theoretical_exponent(Family::Wenger, 5) == Rational(16, 15), "Wenger k=5 exponent 16/15");
  c.expect(girth_target(3) == 8, "girth_target(3) = 8");
  c.expect(girth_target(5) == 10, "girth_target(5) = 10");
}

void criterion9(Check& c) {
  for (const TruncationSpec& spec : {TruncationSpec{Family::LU, 3, 64}, TruncationSpec{Family::Wenger, 2, 64}}) {
    const auto arr = build_truncated(spec);
    const Rational ratio = st_ratio(arr.points.size(), arr.line_params.size(), arr.edges.size());
    c.expect(ratio < 1, std::string(family_name(spec.family)) + " st_ratio < 1");
    c.log << " " << family_name(spec.family) << ":st_ratio=" << to_string(ratio);
  }
  std::mt19937_64 rng(20240601);
  int discrepancies = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t left = 1 + rng() % 20, right = 1 + rng() % 20;
    const double p = 0.05 + 0.4 * static_cast<double>(rng() % 1000) / 1000.0;
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < left; ++i) {
      for (std::size_t j = 0; j < right; ++j) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    const BipartiteGraph g(left, right, edges);
    const auto r = girth(g);
    const std::size_t bfs = r.finite() ? *r.girth : 0;
    if (bfs != exhaustive_min_cycle(g)) ++discrepancies;
  }
  c.expect(discrepancies == 0, "zero girth discrepancies on 200 random graphs");
  c.log << " discrepancies=" << discrepancies << "/200";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "D(3,3): 54 vertices, 81 edges, 3-regular, girth >= 8 = oracle", 1.0, criterion1},
      {2, "D(3,5): 486 vertices, 3-regular, girth >= 10", 10.0, criterion2},
      {3, "Wenger graphs H_k(p) are C_2k-free", 60.0, criterion3},
      {4, "truncated LU k=3 n=64: 135/2145/675, degree 5, girth >= 8, subgraph mod 37", 5.0, criterion4},
      {5, "truncated Wenger k=2 n=64: 325/165/825, line degree 5, C4-free", 5.0, criterion5},
      {6, "realization reproduces E' and lines are distinct", 60.0, criterion6},
      {7, "projection preserves the incidence graph (seed 1, M=2^16)", 60.0, criterion7},
      {8, "exponent formulas and girth targets", 1.0, criterion8},
      {9, "st_ratio < 1 and girth oracle agreement on 200 random graphs", 60.0, criterion9},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.log << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= crit.time_limit_s) {
      check.ok = false;
      check.log << " [over time limit " << crit.time_limit_s << "s]";
    }
    if (!check.ok) ++failed;
    std::printf("%s criterion %d: %s (%.3fs)%s\n", check.ok ? "PASS" : "FAIL", crit.id, crit.title.c_str(), secs,
                check.log.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
