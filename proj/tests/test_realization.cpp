#include <doctest.h>

#include <random>

#include "girthforge/realization.hpp"
#include "girthforge/verification.hpp"

using namespace girthforge;

namespace {

RationalTuple R(std::initializer_list<long> xs) {
  RationalTuple out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Plugs a point into the LU line system for k = 3.
bool satisfies_lu3(const IntTuple& v, const RationalTuple& x) {
  return v[1] - x[1] == v[0] * x[0] && v[2] - x[2] == v[1] * x[0];
}

// Plugs a point into the Wenger line system x_i + v_{k-1} x_{i+1} - v_i = 0.
bool satisfies_wenger(const IntTuple& v, const RationalTuple& x) {
  const std::size_t k = v.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (x[i] + v[k - 1] * x[i + 1] - v[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("LU lines from parameters") {
  const auto l = line_from_params_lu({3, 5, 7});
  CHECK(l.base() == R({0, 5, 7}));
  CHECK(l.dir() == IntTuple{1, -3, -5});
  CHECK(satisfies_lu3({3, 5, 7}, l.base()));
  CHECK(satisfies_lu3({3, 5, 7}, l.at(1)));
  CHECK(satisfies_lu3({3, 5, 7}, l.at(Rational(-7, 3))));

  const auto axis = line_from_params_lu({0, 0, 0});
  CHECK(axis.base() == R({0, 0, 0}));
  CHECK(axis.dir() == IntTuple{1, 0, 0});
}

TEST_CASE("LU lines satisfy every defining equation for random k=7 parameters") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntTuple v(7);
    for (auto& x : v) x = static_cast<long>(rng() % 41) - 20;
    const auto l = line_from_params_lu(v);
    for (const Rational& t : {Rational(0), Rational(1), Rational(-5, 2)}) {
      const auto x = l.at(t);
      for (const auto& e : lu_equations(7)) REQUIRE(v[e.target] - x[e.target] == v[e.v_factor] * x[e.u_factor]);
    }
  }
}

TEST_CASE("Wenger lines from parameters") {
  const auto l2 = line_from_params_wenger({9, 4});
  CHECK(l2.base() == R({9, 0}));
  CHECK(l2.dir() == IntTuple{4, -1});  // canonical form of (-4, 1)

  const auto l3 = line_from_params_wenger({10, 3, 2});
  CHECK(l3.base() == R({10 - 2 * 3, 3, 0}));
  CHECK(l3.dir() == IntTuple{4, -2, 1});
  CHECK(satisfies_wenger({10, 3, 2}, l3.base()));
  CHECK(satisfies_wenger({10, 3, 2}, l3.at(Rational(7, 3))));

  const auto axis = line_from_params_wenger({0, 0, 0});
  CHECK(axis.dir() == IntTuple{0, 0, 1});
  CHECK(axis.base() == R({0, 0, 0}));
}

TEST_CASE("point_on_line") {
  const auto l = line_from_params_lu({1, 2, 2});
  CHECK(point_on_line(IntTuple{1, 1, 0}, l));
  CHECK_FALSE(point_on_line(IntTuple{1, 1, 1}, l));
  CHECK(point_on_line(l.base(), l));
  CHECK_THROWS_AS(point_on_line(IntTuple{1, 1}, l), Error);
}

TEST_CASE("reduced base is a canonical representative") {
  const AffineLineKD a(R({1, 2, 3}), {2, 4, 6});
  const AffineLineKD b(a.at(Rational(5, 7)), {-1, -2, -3});
  CHECK(a.dir() == b.dir());
  CHECK(a.reduced_base() == b.reduced_base());
  CHECK(a.reduced_base()[a.pivot()] == 0);
  // Canonicalizing a canonical line changes nothing.
  const AffineLineKD c(a.reduced_base(), a.dir());
  CHECK(c.dir() == a.dir());
  CHECK(c.reduced_base() == c.base());
  CHECK_THROWS_AS(AffineLineKD(R({0, 0}), {0, 0}), Error);
}

TEST_CASE("certify_lines_distinct") {
  const auto w1 = line_from_params_wenger({32, 4});
  const auto w2 = line_from_params_wenger({33, 4});
  CHECK(w1.dir() == w2.dir());
  CHECK(certify_lines_distinct({w1, w2}).distinct);

  const auto cert = certify_lines_distinct({w1, w2, line_from_params_wenger({32, 4})});
  CHECK_FALSE(cert.distinct);
  REQUIRE(cert.collision.has_value());
  CHECK(cert.collision->first == 0);
  CHECK(cert.collision->second == 2);

  // Same geometric line from different representations.
  const AffineLineKD a(R({0, 0}), {1, 1});
  const AffineLineKD b(R({3, 3}), {-2, -2});
  CHECK_FALSE(certify_lines_distinct({a, b}).distinct);
  CHECK(certify_lines_distinct({}).distinct);
}

TEST_CASE("realized lines are distinct and reproduce E'") {
  for (const TruncationSpec& spec : {TruncationSpec{Family::LU, 3, 64}, TruncationSpec{Family::Wenger, 2, 64},
                                     TruncationSpec{Family::Wenger, 3, 20}, TruncationSpec{Family::LU, 5, 1}}) {
    CAPTURE(family_name(spec.family));
    CAPTURE(spec.k);
    const auto arr = build_truncated(spec);
    const auto lines = realize_lines(arr);
    CHECK(certify_lines_distinct(lines).distinct);
    const auto naive = incidence_set_kd(arr.points, lines);
    CHECK(naive == arr.edges);
    CHECK(incidence_set_kd_hashed(arr.points, lines) == naive);
  }
  CHECK(incidence_set_kd({IntTuple{1, 2}}, {}).empty());
}

TEST_CASE("a point's degree equals the free-coordinate count") {
  const auto arr = build_truncated({Family::LU, 3, 64});
  const auto lines = realize_lines(arr);
  // The point (2,4,8) meets exactly the five lines with v1 = 0..4.
  const IntTuple p{2, 4, 8};
  std::size_t count = 0;
  for (const auto& l : lines) count += point_on_line(p, l) ? 1 : 0;
  CHECK(count == 5);
}

TEST_CASE("sample_projection") {
  const auto a = sample_projection(3, 1, 1u << 16);
  const auto b = sample_projection(3, 1, 1u << 16);
  CHECK(a.row_x == b.row_x);
  CHECK(a.row_y == b.row_y);
  CHECK(a.seed == 1);
  for (const auto& x : a.row_x) CHECK((x >= 0 && x < 65536));
  const auto id = sample_projection(2, 99, 5);
  CHECK(id.row_x == IntTuple{1, 0});
  CHECK(id.row_y == IntTuple{0, 1});
  // With bound 2 many draws are dependent; whatever comes back is not.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = sample_projection(3, seed, 2);
    bool independent = false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) independent |= m.row_x[i] * m.row_y[j] != m.row_x[j] * m.row_y[i];
    }
    CHECK(independent);
  }
  CHECK_THROWS_AS(sample_projection(3, 1, 1), Error);
}

TEST_CASE("planar lines are canonical") {
  const PlanarPoint p{Rational(1, 2), Rational(1, 3)};
  const auto l = planar_line_through(p, 2, -4);
  CHECK(point_on_planar_line(p, l));
  CHECK(l.a > 0);
  CHECK(gcd(gcd(l.a, l.b), l.c) == 1);
  CHECK(planar_line_through(p, -1, 2) == l);
  CHECK(planar_line_through({Rational(0), Rational(5)}, 1, 0) == PlanarLine{0, 1, -5});
  CHECK_THROWS_AS(planar_line_through(p, 0, 0), Error);
}

TEST_CASE("project_generic preserves the incidence graph") {
  const auto arr = build_truncated({Family::LU, 3, 64});
  const auto lines = realize_lines(arr);
  const auto result = project_generic(arr.points, lines, 1, 1u << 16, 8);
  CHECK(result.planar.points.size() == 135);
  CHECK(result.planar.lines.size() == 2145);
  CHECK(result.planar.incidences.size() == 675);
  CHECK(graphs_identical(arr.graph(), result.planar.graph()));
  CHECK(result.map.seed >= 1);

  // Same seed, same bytes.
  const auto again = project_generic(arr.points, lines, 1, 1u << 16, 8);
  CHECK(again.map.row_x == result.map.row_x);
  CHECK(again.planar.lines == result.planar.lines);
}

TEST_CASE("project_generic on a planar instance uses the identity") {
  const auto arr = build_truncated({Family::Wenger, 2, 64});
  const auto result = project_generic(arr.points, realize_lines(arr), 7, 1u << 16, 0);
  CHECK(result.map.row_x == IntTuple{1, 0});
  CHECK(result.planar.incidences == arr.edges);
  for (std::size_t i = 0; i < arr.points.size(); ++i) {
    CHECK(result.planar.points[i].x == arr.points[i][0]);
    CHECK(result.planar.points[i].y == arr.points[i][1]);
  }
}

TEST_CASE("project_generic rejects or fails on degenerate input") {
  const auto arr = build_truncated({Family::LU, 3, 64});
  auto lines = realize_lines(arr);
  // M = 2 leaves rows in {0,1}^3; collisions are essentially certain.
  CHECK_THROWS_AS(project_generic(arr.points, lines, 1, 2, 3), ProjectionFailed);
  lines.push_back(lines.front());
  CHECK_THROWS_AS(project_generic(arr.points, lines, 1, 1u << 16, 8), Error);
}
