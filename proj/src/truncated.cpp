#include "girthforge/truncated.hpp"

#include <algorithm>
#include <set>

namespace girthforge {

void TruncationSpec::validate() const {
  validate_k(family, k);
  if (n < 1) throw Error("n must be a positive integer");
  // floor(n^beta) >= 1 holds for every n >= 1.
}

ExponentSpec TruncationSpec::base_exponent() const {
  if (family == Family::LU) return ExponentSpec(4, static_cast<std::uint64_t>(k * k + 6 * k - 3));
  return ExponentSpec(2, static_cast<std::uint64_t>(k * (k + 1)));
}

namespace {

using K = CoordLabel::Kind;

ExponentSpec label_exponent(const CoordLabel& label, const ExponentSpec& beta) {
  switch (label.kind) {
    case K::First: return beta;
    case K::Pair: return beta.scaled(static_cast<std::uint64_t>(label.i + label.j));
    case K::Primed: return beta.scaled(static_cast<std::uint64_t>(2 * label.i));
  }
  return beta;
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

void check_lu_label(const CoordLabel& label, const TruncationSpec& spec) {
  if (spec.family != Family::LU) throw Error("LU range requested for a Wenger spec");
  if (lu_position(label, spec.k) == 0) {
    throw Error("label " + label.to_string() + " is not among the first k coordinates");
  }
}

void check_wenger_index(int i, const TruncationSpec& spec) {
  if (spec.family != Family::Wenger) throw Error("Wenger range requested for an LU spec");
  if (i < 0 || i >= spec.k) throw Error("Wenger coordinate index out of range");
}

// Mixed-radix enumeration and indexing of an integer box.
class Box {
 public:
  explicit Box(std::vector<IntRange> ranges, std::uint64_t budget) : ranges_(std::move(ranges)) {
    BigInt total = 1;
    for (const auto& r : ranges_) {
      total *= r.size();
      sizes_.push_back(r.empty() ? 0 : r.size().get_ui());
    }
    if (total > budget) {
      throw BudgetExceeded("box of " + total.get_str() + " tuples exceeds budget " + std::to_string(budget));
    }
    count_ = total.get_ui();
  }

  std::uint64_t count() const { return count_; }

  std::vector<IntTuple> enumerate() const {
    std::vector<IntTuple> out;
    out.reserve(count_);
    if (count_ == 0) return out;
    IntTuple cur;
    for (const auto& r : ranges_) cur.push_back(r.lo);
    for (std::uint64_t n = 0; n < count_; ++n) {
      out.push_back(cur);
      for (std::size_t i = ranges_.size(); i-- > 0;) {
        if (cur[i] < ranges_[i].hi) {
          ++cur[i];
          break;
        }
        cur[i] = ranges_[i].lo;
      }
    }
    return out;
  }

  /// Index of t in enumerate(), or nullopt when t lies outside the box.
  std::optional<std::size_t> index(const IntTuple& t) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
      if (!ranges_[i].contains(t[i])) return std::nullopt;
      const BigInt off = t[i] - ranges_[i].lo;
      idx = idx * sizes_[i] + off.get_ui();
    }
    return idx;
  }

 private:
  std::vector<IntRange> ranges_;
  std::vector<std::uint64_t> sizes_;
  std::uint64_t count_ = 0;
};

std::vector<Edge> lu_edges(const TruncationSpec& spec, const std::vector<IntTuple>& points,
                           const Box& lines, const IntRange& slope_range, std::size_t& dropped) {
  const auto& eqs = lu_equations(spec.k);
  std::vector<Edge> edges;
  IntTuple v(spec.k);
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const IntTuple& u = points[pi];
    for (BigInt v1 = slope_range.lo; v1 <= slope_range.hi; ++v1) {
      v[0] = v1;
      for (const auto& e : eqs) v[e.target] = u[e.target] + v[e.v_factor] * u[e.u_factor];
      if (auto li = lines.index(v)) edges.emplace_back(pi, *li);
      else ++dropped;
    }
  }
  return edges;
}

std::vector<Edge> wenger_edges(const TruncationSpec& spec, const std::vector<IntTuple>& line_params,
                               const Box& points, const IntRange& last_range, std::size_t& dropped) {
  const int k = spec.k;
  std::vector<Edge> edges;
  IntTuple u(k);
  for (std::size_t li = 0; li < line_params.size(); ++li) {
    const IntTuple& v = line_params[li];
    for (BigInt last = last_range.lo; last <= last_range.hi; ++last) {
      u[k - 1] = last;
      for (int j = k - 2; j >= 0; --j) u[j] = v[j] - u[j + 1] * v[k - 1];
      if (auto pi = points.index(u)) edges.emplace_back(*pi, li);
      else ++dropped;
    }
  }
  return edges;
}

}  // namespace

IntRange lu_point_range(const CoordLabel& label, const TruncationSpec& spec) {
  check_lu_label(label, spec);
  return {0, floor_pow(spec.n, label_exponent(label, spec.base_exponent()), 1)};
}

IntRange lu_line_range(const CoordLabel& label, const TruncationSpec& spec) {
  check_lu_label(label, spec);
  int scale = 0;
  switch (label.kind) {
    case K::First: scale = 2; break;
    case K::Primed: scale = 4; break;
    case K::Pair: scale = label.j == label.i + 1 ? 4 : 3; break;  // (i,i) and (i+1,i) use 3
  }
  return {0, floor_pow(spec.n, label_exponent(label, spec.base_exponent()), scale)};
}

IntRange wenger_point_range(int i, const TruncationSpec& spec) {
  check_wenger_index(i, spec);
  const int k = spec.k;
  const ExponentSpec e(static_cast<std::uint64_t>(2 * (k - i)), static_cast<std::uint64_t>(k * (k + 1)));
  return {0, floor_pow(spec.n, e, pow2(2 * (k - i - 1)))};
}

IntRange wenger_line_range(int i, const TruncationSpec& spec) {
  check_wenger_index(i, spec);
  const int k = spec.k;
  const ExponentSpec e(static_cast<std::uint64_t>(2 * (k - i)), static_cast<std::uint64_t>(k * (k + 1)));
  if (i == k - 1) return {ceil_pow(spec.n, e, 1), floor_pow(spec.n, e, 2)};
  const int m = 2 * (k - i - 1);
  return {ceil_pow(spec.n, e, pow2(m - 1)), floor_pow(spec.n, e, pow2(m))};
}

std::vector<IntRange> point_box(const TruncationSpec& spec) {
  spec.validate();
  std::vector<IntRange> box;
  for (int pos = 1; pos <= spec.k; ++pos) {
    box.push_back(spec.family == Family::LU ? lu_point_range(lu_label(pos, spec.k), spec)
                                            : wenger_point_range(pos - 1, spec));
  }
  return box;
}

std::vector<IntRange> line_box(const TruncationSpec& spec) {
  spec.validate();
  std::vector<IntRange> box;
  for (int pos = 1; pos <= spec.k; ++pos) {
    box.push_back(spec.family == Family::LU ? lu_line_range(lu_label(pos, spec.k), spec)
                                            : wenger_line_range(pos - 1, spec));
  }
  return box;
}

bool integer_edge(Family family, const IntTuple& u, const IntTuple& v) {
  if (u.size() != v.size() || u.empty()) throw Error("point and line parameters differ in dimension");
  const int k = static_cast<int>(u.size());
  if (family == Family::LU) {
    for (const auto& e : lu_equations(k)) {
      if (v[e.target] - u[e.target] != v[e.v_factor] * u[e.u_factor]) return false;
    }
    return true;
  }
  for (int j = 0; j + 1 < k; ++j) {
    if (v[j] != u[j] + u[j + 1] * v[k - 1]) return false;
  }
  return true;
}

bool modular_edge(Family family, const IntTuple& u, const IntTuple& v, const BigInt& q) {
  if (u.size() != v.size() || u.empty()) throw Error("point and line parameters differ in dimension");
  const int k = static_cast<int>(u.size());
  auto congruent = [&q](const BigInt& a, const BigInt& b) {
    BigInt d = a - b;
    return mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()) != 0;
  };
  if (family == Family::LU) {
    for (const auto& e : lu_equations(k)) {
      if (!congruent(v[e.target] - u[e.target], v[e.v_factor] * u[e.u_factor])) return false;
    }
    return true;
  }
  for (int j = 0; j + 1 < k; ++j) {
    if (!congruent(v[j], u[j] + u[j + 1] * v[k - 1])) return false;
  }
  return true;
}

TruncatedArrangement build_truncated(const TruncationSpec& spec, const BuildOptions& options) {
  spec.validate();
  TruncatedArrangement arr;
  arr.spec = spec;
  const auto pbox = point_box(spec);
  const auto lbox = line_box(spec);
  for (std::size_t i = 0; i < lbox.size(); ++i) {
    if (lbox[i].empty()) {
      arr.warnings.push_back("line coordinate " + std::to_string(i) + " has an empty range [" +
                             lbox[i].lo.get_str() + ", " + lbox[i].hi.get_str() + "]");
    }
  }
  const Box points(pbox, options.budget);
  const Box lines(lbox, options.budget);
  if (lines.count() == 0) {
    throw Error("degenerate n: the line-parameter set is empty (" + arr.warnings.front() + ")");
  }
  arr.points = points.enumerate();
  arr.line_params = lines.enumerate();

  std::size_t dropped = 0;
  arr.edges = spec.family == Family::LU ? lu_edges(spec, arr.points, lines, lbox[0], dropped)
                                        : wenger_edges(spec, arr.line_params, points, pbox[spec.k - 1], dropped);
  std::sort(arr.edges.begin(), arr.edges.end());
  if (dropped > 0) {
    arr.warnings.push_back(std::to_string(dropped) +
                           " substituted partner tuples fell outside their box and were dropped");
  }

  if (points.count() * lines.count() <= options.cross_check_limit) {
    std::vector<Edge> brute;
    for (std::size_t pi = 0; pi < arr.points.size(); ++pi) {
      for (std::size_t li = 0; li < arr.line_params.size(); ++li) {
        if (integer_edge(spec.family, arr.points[pi], arr.line_params[li])) brute.emplace_back(pi, li);
      }
    }
    if (brute != arr.edges) {
      throw Error("internal error: substituted edge set disagrees with the brute-force predicate");
    }
  }
  return arr;
}

BigInt embedding_prime(const TruncatedArrangement& arr, PrimeMode mode) {
  const auto& spec = arr.spec;
  if (mode == PrimeMode::Minimal) {
    BigInt top = 0;
    for (const auto* set : {&arr.points, &arr.line_params}) {
      for (const auto& t : *set) {
        for (const auto& c : t) top = std::max(top, BigInt(abs(c)));
      }
    }
    return next_prime(top);
  }
  spec.validate();
  BigInt lo, hi;
  if (spec.family == Family::LU) {
    const ExponentSpec e(8, static_cast<std::uint64_t>(spec.k));
    lo = floor_pow(spec.n, e, 4);
    hi = ceil_pow(spec.n, e, 8);
  } else {
    const ExponentSpec e(2, static_cast<std::uint64_t>(spec.k));
    lo = floor_pow(spec.n, e, pow2(2 * spec.k));
    hi = ceil_pow(spec.n, e, pow2(2 * spec.k + 1));
  }
  auto q = prime_in_window(lo, hi);
  if (!q) throw Error("no prime in (" + lo.get_str() + ", " + hi.get_str() + ")");
  return *q;
}

bool verify_subgraph_embedding(const TruncatedArrangement& arr, const BigInt& q) {
  if (!is_prime(q)) throw Error(q.get_str() + " is not prime");
  for (const auto* set : {&arr.points, &arr.line_params}) {
    for (const auto& t : *set) {
      for (const auto& c : t) {
        if (c < 0 || c >= q) return false;
      }
    }
  }
  for (const auto& [pi, li] : arr.edges) {
    if (!modular_edge(arr.spec.family, arr.points[pi], arr.line_params[li], q)) return false;
  }
  return true;
}

}  // namespace girthforge
