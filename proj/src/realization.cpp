#include "girthforge/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace girthforge {

namespace {

bool tuple_less(const RationalTuple& a, const RationalTuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RationalTuple to_rational(const IntTuple& p) { return RationalTuple(p.begin(), p.end()); }

BigInt dot(const IntTuple& row, const IntTuple& p) {
  BigInt s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * p[i];
  return s;
}

Rational dot(const IntTuple& row, const RationalTuple& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * p[i];
  return s;
}

// (X, Y, D) with x = X/D, y = Y/D.
struct Homogeneous {
  BigInt x, y, d;
};

Homogeneous homogeneous(const PlanarPoint& p) {
  BigInt d = lcm(p.x.get_den(), p.y.get_den());
  return {p.x.get_num() * (d / p.x.get_den()), p.y.get_num() * (d / p.y.get_den()), d};
}

bool on_line(const Homogeneous& h, const PlanarLine& l) { return l.a * h.x + l.b * h.y + l.c * h.d == 0; }

auto planar_point_less = [](const PlanarPoint& a, const PlanarPoint& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
};
auto planar_line_less = [](const PlanarLine& a, const PlanarLine& b) {
  if (a.a != b.a) return a.a < b.a;
  if (a.b != b.b) return a.b < b.b;
  return a.c < b.c;
};

template <class T, class Less>
bool all_distinct(std::vector<T> v, Less less) {
  std::sort(v.begin(), v.end(), less);
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

AffineLineKD::AffineLineKD(RationalTuple base, IntTuple dir) : base_(std::move(base)), dir_(primitive(std::move(dir))) {
  if (base_.size() != dir_.size() || base_.empty()) throw Error("line base and direction differ in dimension");
  auto nz = std::find_if(dir_.begin(), dir_.end(), [](const BigInt& x) { return x != 0; });
  if (nz == dir_.end()) throw Error("line direction must be nonzero");
  pivot_ = static_cast<std::size_t>(nz - dir_.begin());
}

RationalTuple AffineLineKD::reduced_base() const {
  Rational t = base_[pivot_] / Rational(dir_[pivot_]);
  return at(-t);
}

RationalTuple AffineLineKD::at(const Rational& t) const {
  RationalTuple p(base_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = base_[i] + t * dir_[i];
  return p;
}

AffineLineKD line_from_params_lu(const IntTuple& v) {
  const int k = static_cast<int>(v.size());
  if (k < 2) throw Error("LU line parameters need at least two coordinates");
  // x_i = c_i + d_i t with t = x_1.
  IntTuple c(k, 0), d(k, 0);
  d[0] = 1;
  for (const auto& e : lu_equations(k)) {
    c[e.target] = v[e.target] - v[e.v_factor] * c[e.u_factor];
    d[e.target] = -v[e.v_factor] * d[e.u_factor];
  }
  return AffineLineKD(to_rational(c), std::move(d));
}

AffineLineKD line_from_params_wenger(const IntTuple& v) {
  const int k = static_cast<int>(v.size());
  if (k < 2) throw Error("Wenger line parameters need at least two coordinates");
  // x_i = c_i + d_i t with t = x_{k-1}; x_i = v_i - v_{k-1} x_{i+1}.
  IntTuple c(k, 0), d(k, 0);
  d[k - 1] = 1;
  for (int i = k - 2; i >= 0; --i) {
    c[i] = v[i] - v[k - 1] * c[i + 1];
    d[i] = -v[k - 1] * d[i + 1];
  }
  return AffineLineKD(to_rational(c), std::move(d));
}

std::vector<AffineLineKD> realize_lines(const TruncatedArrangement& arr) {
  std::vector<AffineLineKD> lines;
  lines.reserve(arr.line_params.size());
  for (const auto& v : arr.line_params) {
    lines.push_back(arr.spec.family == Family::LU ? line_from_params_lu(v) : line_from_params_wenger(v));
  }
  return lines;
}

bool point_on_line(const RationalTuple& p, const AffineLineKD& line) {
  if (p.size() != line.dim()) throw Error("point and line differ in dimension");
  const std::size_t j = line.pivot();
  const Rational t = (p[j] - line.base()[j]) / Rational(line.dir()[j]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != line.base()[i] + t * line.dir()[i]) return false;
  }
  return true;
}

bool point_on_line(const IntTuple& p, const AffineLineKD& line) { return point_on_line(to_rational(p), line); }

DistinctnessCertificate certify_lines_distinct(const std::vector<AffineLineKD>& lines) {
  struct Keyed {
    IntTuple dir;
    RationalTuple base;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) keyed.push_back({lines[i].dir(), lines[i].reduced_base(), i});
  auto same = [](const Keyed& a, const Keyed& b) { return a.dir == b.dir && a.base == b.base; };
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.dir != b.dir) return std::lexicographical_compare(a.dir.begin(), a.dir.end(), b.dir.begin(), b.dir.end());
    if (a.base != b.base) return tuple_less(a.base, b.base);
    return a.index < b.index;
  });
  DistinctnessCertificate cert;
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (same(keyed[i - 1], keyed[i])) {
      std::pair<std::size_t, std::size_t> pair{keyed[i - 1].index, keyed[i].index};
      if (!cert.collision || pair < *cert.collision) cert.collision = pair;
      cert.distinct = false;
    }
  }
  return cert;
}

std::vector<Edge> incidence_set_kd(const std::vector<IntTuple>& points, const std::vector<AffineLineKD>& lines) {
  std::vector<RationalTuple> rp;
  rp.reserve(points.size());
  for (const auto& p : points) rp.push_back(to_rational(p));
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (point_on_line(rp[i], lines[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Edge> incidence_set_kd_hashed(const std::vector<IntTuple>& points,
                                          const std::vector<AffineLineKD>& lines) {
  struct TupleLess {
    bool operator()(const RationalTuple& a, const RationalTuple& b) const { return tuple_less(a, b); }
  };
  struct IntTupleLess {
    bool operator()(const IntTuple& a, const IntTuple& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
  };
  std::map<IntTuple, std::map<RationalTuple, std::vector<std::size_t>, TupleLess>, IntTupleLess> by_dir;
  for (std::size_t j = 0; j < lines.size(); ++j) by_dir[lines[j].dir()][lines[j].reduced_base()].push_back(j);

  std::vector<Edge> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RationalTuple p = to_rational(points[i]);
    for (const auto& [dir, bases] : by_dir) {
      if (dir.size() != p.size()) throw Error("point and line differ in dimension");
      const AffineLineKD through(p, dir);
      auto it = bases.find(through.reduced_base());
      if (it == bases.end()) continue;
      for (std::size_t j : it->second) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjectionMap sample_projection(std::size_t k, std::uint64_t seed, std::uint64_t bound) {
  if (bound < 2) throw Error("projection coefficient bound must be at least 2");
  if (k < 2) throw Error("projection needs dimension at least 2");
  ProjectionMap map;
  map.seed = seed;
  map.bound = bound;
  if (k == 2) {
    map.row_x = {1, 0};
    map.row_y = {0, 1};
    return map;
  }
  std::mt19937_64 gen(seed);
  auto draw = [&] {
    IntTuple row(k);
    for (auto& x : row) x = BigInt(static_cast<unsigned long>(gen() % bound));
    return row;
  };
  for (;;) {
    map.row_x = draw();
    map.row_y = draw();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (map.row_x[i] * map.row_y[j] != map.row_x[j] * map.row_y[i]) return map;
      }
    }
  }
}

PlanarLine planar_line_through(const PlanarPoint& p, const BigInt& dx, const BigInt& dy) {
  if (dx == 0 && dy == 0) throw Error("planar line direction must be nonzero");
  // dy * x - dx * y + c = 0 through p, scaled to integers.
  const Rational c = -(dy * p.x - dx * p.y);
  const BigInt den = c.get_den();
  IntTuple abc = primitive({dy * den, -dx * den, c.get_num()});
  return {abc[0], abc[1], abc[2]};
}

bool point_on_planar_line(const PlanarPoint& p, const PlanarLine& l) { return on_line(homogeneous(p), l); }

std::vector<Edge> planar_incidences(const std::vector<PlanarPoint>& points, const std::vector<PlanarLine>& lines) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Homogeneous h = homogeneous(points[i]);
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (on_line(h, lines[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

PlanarPoint project_point(const ProjectionMap& map, const IntTuple& p) {
  if (p.size() != map.row_x.size()) throw Error("point dimension does not match the projection");
  return {Rational(dot(map.row_x, p)), Rational(dot(map.row_y, p))};
}

std::optional<PlanarLine> project_line(const ProjectionMap& map, const AffineLineKD& line) {
  if (line.dim() != map.row_x.size()) throw Error("line dimension does not match the projection");
  const BigInt dx = dot(map.row_x, line.dir());
  const BigInt dy = dot(map.row_y, line.dir());
  if (dx == 0 && dy == 0) return std::nullopt;
  return planar_line_through({dot(map.row_x, line.base()), dot(map.row_y, line.base())}, dx, dy);
}

ProjectionResult project_generic(const std::vector<IntTuple>& points, const std::vector<AffineLineKD>& lines,
                                 std::uint64_t seed, std::uint64_t bound, int max_retries) {
  if (!certify_lines_distinct(lines).distinct) throw Error("project_generic: input lines are not distinct");
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const IntTuple& a, const IntTuple& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("project_generic: input points are not distinct");
    }
  }
  std::size_t k = 0;
  if (!points.empty()) k = points.front().size();
  else if (!lines.empty()) k = lines.front().dim();
  if (k < 2) throw Error("project_generic: empty or low-dimensional input");

  const auto kd = incidence_set_kd_hashed(points, lines);
  std::string last_reason;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    ProjectionResult result;
    result.map = sample_projection(k, seed + static_cast<std::uint64_t>(attempt), bound);
    result.attempts = attempt + 1;
    auto& planar = result.planar;
    for (const auto& p : points) planar.points.push_back(project_point(result.map, p));
    bool degenerate = false;
    for (const auto& l : lines) {
      auto pl = project_line(result.map, l);
      if (!pl) {
        degenerate = true;
        break;
      }
      planar.lines.push_back(std::move(*pl));
    }
    if (degenerate) {
      last_reason = "a line direction lies in the kernel";
      continue;
    }
    if (!all_distinct(planar.points, planar_point_less)) {
      last_reason = "two points collide";
      continue;
    }
    if (!all_distinct(planar.lines, planar_line_less)) {
      last_reason = "two lines collide";
      continue;
    }
    planar.incidences = planar_incidences(planar.points, planar.lines);
    if (planar.incidences != kd) {
      last_reason = "the projection creates new incidences";
      continue;
    }
    return result;
  }
  throw ProjectionFailed("projection failed after " + std::to_string(max_retries + 1) + " attempts (last: " +
                         last_reason + "); raise the coefficient bound");
}

}  // namespace girthforge
