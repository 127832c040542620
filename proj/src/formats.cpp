#include "girthforge/formats.hpp"

#include <fstream>
#include <sstream>

namespace girthforge {

namespace {

constexpr const char* kArrHeader = "GIRTHFORGE-ARR 1";
constexpr const char* kPlanarHeader = "GIRTHFORGE-PLANAR 1";

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next() {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError("unexpected end of file after line " + std::to_string(lineno_));
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  bool at_end() {
    in_ >> std::ws;
    return in_.peek() == std::char_traits<char>::eof();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(lineno_) + ": " + what);
  }

  std::vector<std::string> fields() {
    std::istringstream ss(next());
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
  }

  std::string keyed(const std::string& key) {
    auto f = fields();
    if (f.size() != 2 || f[0] != key) fail("expected '" + key + " <value>'");
    return f[1];
  }

  std::size_t count(const std::string& key) {
    const auto v = keyed(key);
    try {
      std::size_t pos = 0;
      const auto c = std::stoull(v, &pos);
      if (pos != v.size()) fail("bad count '" + v + "'");
      return static_cast<std::size_t>(c);
    } catch (const std::logic_error&) {
      fail("bad count '" + v + "'");
    }
  }

  BigInt integer(const std::string& tok) {
    BigInt x;
    if (tok.empty() || x.set_str(tok, 10) != 0) fail("bad integer '" + tok + "'");
    return x;
  }

  Rational rational(const std::string& tok) {
    const auto slash = tok.find('/');
    const BigInt num = integer(tok.substr(0, slash));
    const BigInt den = slash == std::string::npos ? BigInt(1) : integer(tok.substr(slash + 1));
    if (den <= 0) fail("rational denominator must be positive in '" + tok + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

void render_incidences(std::ostringstream& out, const std::vector<Edge>& edges) {
  out << "incidences " << edges.size() << '\n';
  for (const auto& [p, l] : edges) out << p << ' ' << l << '\n';
}

std::optional<std::vector<Edge>> parse_incidences(LineReader& r, std::size_t m, std::size_t l) {
  if (r.at_end()) return std::nullopt;
  const std::size_t c = r.count("incidences");
  std::vector<Edge> edges;
  edges.reserve(c);
  for (std::size_t e = 0; e < c; ++e) {
    auto f = r.fields();
    if (f.size() != 2) r.fail("expected 'point line'");
    std::size_t pi = 0, li = 0;
    try {
      pi = std::stoull(f[0]);
      li = std::stoull(f[1]);
    } catch (const std::logic_error&) {
      r.fail("bad incidence");
    }
    if (pi >= m || li >= l) r.fail("incidence index out of range");
    edges.emplace_back(pi, li);
  }
  if (!r.at_end()) r.fail("trailing content after incidences");
  return edges;
}

}  // namespace

ArrangementFile to_file(const TruncatedArrangement& arr, bool with_incidences) {
  ArrangementFile f{arr.spec.family, arr.spec.k, arr.spec.n, arr.points, arr.line_params, std::nullopt};
  if (with_incidences) f.incidences = arr.edges;
  return f;
}

TruncatedArrangement from_file(const ArrangementFile& file) {
  TruncatedArrangement arr;
  arr.spec = {file.family, file.k, file.n};
  arr.points = file.points;
  arr.line_params = file.lines;
  if (file.incidences) arr.edges = *file.incidences;
  return arr;
}

std::string render_arrangement(const ArrangementFile& f) {
  std::ostringstream out;
  out << kArrHeader << '\n'
      << "dim " << f.k << '\n'
      << "family " << family_name(f.family) << '\n'
      << "n " << f.n.get_str() << '\n'
      << "points " << f.points.size() << '\n'
      << "lines " << f.lines.size() << '\n';
  for (const auto* set : {&f.points, &f.lines}) {
    for (const auto& t : *set) {
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i].get_str();
      out << '\n';
    }
  }
  if (f.incidences) render_incidences(out, *f.incidences);
  return out.str();
}

ArrangementFile parse_arrangement(std::istream& in) {
  LineReader r(in);
  if (r.next() != kArrHeader) r.fail(std::string("expected header '") + kArrHeader + "'");
  ArrangementFile f;
  f.k = static_cast<int>(r.count("dim"));
  if (f.k < 1) r.fail("dim must be positive");
  try {
    f.family = parse_family(r.keyed("family"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(e.what());
  }
  f.n = r.integer(r.keyed("n"));
  const std::size_t m = r.count("points");
  const std::size_t l = r.count("lines");
  auto read_tuples = [&](std::size_t count, std::vector<IntTuple>& out) {
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto fields = r.fields();
      if (fields.size() != static_cast<std::size_t>(f.k)) r.fail("expected " + std::to_string(f.k) + " integers");
      IntTuple t;
      for (const auto& tok : fields) t.push_back(r.integer(tok));
      out.push_back(std::move(t));
    }
  };
  read_tuples(m, f.points);
  read_tuples(l, f.lines);
  f.incidences = parse_incidences(r, m, l);
  return f;
}

std::string render_planar(const PlanarArrangement& arr, bool with_incidences) {
  std::ostringstream out;
  out << kPlanarHeader << '\n' << "points " << arr.points.size() << '\n' << "lines " << arr.lines.size() << '\n';
  for (const auto& p : arr.points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  for (const auto& l : arr.lines) out << l.a.get_str() << ' ' << l.b.get_str() << ' ' << l.c.get_str() << '\n';
  if (with_incidences) render_incidences(out, arr.incidences);
  return out.str();
}

PlanarFile parse_planar(std::istream& in) {
  LineReader r(in);
  if (r.next() != kPlanarHeader) r.fail(std::string("expected header '") + kPlanarHeader + "'");
  PlanarFile f;
  auto& arr = f.arrangement;
  const std::size_t m = r.count("points");
  const std::size_t l = r.count("lines");
  for (std::size_t i = 0; i < m; ++i) {
    auto fields = r.fields();
    if (fields.size() != 2) r.fail("expected 'x y'");
    arr.points.push_back({r.rational(fields[0]), r.rational(fields[1])});
  }
  for (std::size_t i = 0; i < l; ++i) {
    auto fields = r.fields();
    if (fields.size() != 3) r.fail("expected 'a b c'");
    PlanarLine line{r.integer(fields[0]), r.integer(fields[1]), r.integer(fields[2])};
    IntTuple canon = primitive({line.a, line.b, line.c});
    if (line.a == 0 && line.b == 0) r.fail("line with a = b = 0");
    if (canon != IntTuple{line.a, line.b, line.c}) r.fail("line not in canonical form");
    arr.lines.push_back(std::move(line));
  }
  if (auto inc = parse_incidences(r, m, l)) {
    arr.incidences = std::move(*inc);
    f.has_incidences = true;
  }
  return f;
}

std::string render_edge_list(const BipartiteGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    for (VertexId j : g.left_neighbors(i)) out << 'U' << i << " V" << j << '\n';
  }
  return out.str();
}

FileKind sniff_file_kind(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::string first;
  std::getline(in, first);
  if (!first.empty() && first.back() == '\r') first.pop_back();
  if (first == kArrHeader) return FileKind::Arrangement;
  if (first == kPlanarHeader) return FileKind::Planar;
  throw ParseError(path + ": unrecognized header '" + first + "'");
}

}  // namespace girthforge
