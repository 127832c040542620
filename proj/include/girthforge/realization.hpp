#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "girthforge/bipartite_graph.hpp"
#include "girthforge/exact.hpp"
#include "girthforge/truncated.hpp"

namespace girthforge {

using RationalTuple = std::vector<Rational>;

/// The line {base + t * dir : t in R} in R^k. dir is primitive (gcd 1,
/// first nonzero entry positive); base is the point at parameter 0.
class AffineLineKD {
 public:
  AffineLineKD(RationalTuple base, IntTuple dir);

  std::size_t dim() const { return base_.size(); }
  const RationalTuple& base() const { return base_; }
  const IntTuple& dir() const { return dir_; }
  /// Index of the first nonzero direction entry.
  std::size_t pivot() const { return pivot_; }

  /// The member point whose pivot coordinate is zero. Together with dir it
  /// identifies the line uniquely.
  RationalTuple reduced_base() const;

  /// base + t * dir.
  RationalTuple at(const Rational& t) const;

 private:
  RationalTuple base_;
  IntTuple dir_;
  std::size_t pivot_ = 0;
};

/// Solution line of the LU line system, parametrized by x_1.
AffineLineKD line_from_params_lu(const IntTuple& v);
/// Solution line of the Wenger line system, parametrized by x_{k-1}.
AffineLineKD line_from_params_wenger(const IntTuple& v);
/// One line per member of V', in order.
std::vector<AffineLineKD> realize_lines(const TruncatedArrangement& arr);

bool point_on_line(const RationalTuple& p, const AffineLineKD& line);
bool point_on_line(const IntTuple& p, const AffineLineKD& line);

struct DistinctnessCertificate {
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> collision;  // first colliding pair, i < j
};

DistinctnessCertificate certify_lines_distinct(const std::vector<AffineLineKD>& lines);

/// Sorted (point, line) pairs with the point on the line; O(m n) exact tests.
std::vector<Edge> incidence_set_kd(const std::vector<IntTuple>& points, const std::vector<AffineLineKD>& lines);

/// Same set, computed by hashing each point's reduced base once per
/// distinct direction.
std::vector<Edge> incidence_set_kd_hashed(const std::vector<IntTuple>& points,
                                          const std::vector<AffineLineKD>& lines);

struct ProjectionMap {
  IntTuple row_x;
  IntTuple row_y;
  std::uint64_t seed = 0;
  std::uint64_t bound = 0;  // entries drawn from [0, bound)
};

/// Two independent rows with entries uniform in [0, bound), from a
/// mt19937_64 seeded with `seed`; dependent draws are discarded. For k = 2
/// the identity map is returned.
ProjectionMap sample_projection(std::size_t k, std::uint64_t seed, std::uint64_t bound);

/// Line a x + b y + c = 0 with gcd(a,b,c) = 1 and the first nonzero of
/// (a,b) positive.
struct PlanarLine {
  BigInt a, b, c;
  friend bool operator==(const PlanarLine&, const PlanarLine&) = default;
};

struct PlanarPoint {
  Rational x, y;
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

struct PlanarArrangement {
  std::vector<PlanarPoint> points;
  std::vector<PlanarLine> lines;
  std::vector<Edge> incidences;  // sorted

  BipartiteGraph graph() const { return BipartiteGraph(points.size(), lines.size(), incidences); }
};

/// Canonical line through p in direction (dx, dy); throws if the direction is zero.
PlanarLine planar_line_through(const PlanarPoint& p, const BigInt& dx, const BigInt& dy);
bool point_on_planar_line(const PlanarPoint& p, const PlanarLine& l);
std::vector<Edge> planar_incidences(const std::vector<PlanarPoint>& points, const std::vector<PlanarLine>& lines);

PlanarPoint project_point(const ProjectionMap& map, const IntTuple& p);
/// nullopt when the line's direction lies in the kernel of the map.
std::optional<PlanarLine> project_line(const ProjectionMap& map, const AffineLineKD& line);

class ProjectionFailed : public Error {
 public:
  using Error::Error;
};

struct ProjectionResult {
  PlanarArrangement planar;
  ProjectionMap map;
  int attempts = 0;
};

/// Projects with sample_projection(seed), then seed+1, ... until the image
/// has distinct points, distinct non-degenerate lines and exactly the same
/// incidence pairs as in R^k. Throws ProjectionFailed after 1 + max_retries
/// failed attempts.
ProjectionResult project_generic(const std::vector<IntTuple>& points, const std::vector<AffineLineKD>& lines,
                                 std::uint64_t seed, std::uint64_t bound, int max_retries);

}  // namespace girthforge
