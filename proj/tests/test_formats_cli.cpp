#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "girthforge/cli.hpp"
#include "girthforge/formats.hpp"
#include "girthforge/svg.hpp"

using namespace girthforge;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("girthforge_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "girthforge");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("arrangement file round trip") {
  const auto arr = build_truncated({Family::Wenger, 3, 20});
  for (bool with_inc : {true, false}) {
    const auto file = to_file(arr, with_inc);
    const std::string text = render_arrangement(file);
    std::istringstream in(text);
    const auto parsed = parse_arrangement(in);
    CHECK(parsed == file);
    CHECK(render_arrangement(parsed) == text);
  }
  std::istringstream head(render_arrangement(to_file(build_truncated({Family::LU, 3, 1}))));
  std::string first, dim;
  std::getline(head, first);
  std::getline(head, dim);
  CHECK(first == "GIRTHFORGE-ARR 1");
  CHECK(dim == "dim 3");
}

TEST_CASE("arrangement parse errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_arrangement(in);
  };
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 2\n"), ParseError);
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 1\ndim 2\nfamily foo\nn 1\npoints 0\nlines 0\n"), ParseError);
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 1\ndim 2\nfamily lu\nn 1\npoints 1\nlines 0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 1\ndim 2\nfamily lu\nn 1\npoints 2\nlines 0\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 1\ndim 2\nfamily lu\nn 1\npoints 1\nlines 1\n1 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("GIRTHFORGE-ARR 1\ndim 2\nfamily lu\nn 1\npoints 1\nlines 1\n1 1\n0 0\nincidences 1\n0 1\n"),
                  ParseError);
}

TEST_CASE("planar file round trip") {
  PlanarArrangement arr;
  arr.points = {{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(7, 5)}};
  arr.lines = {planar_line_through(arr.points[0], 1, 1), PlanarLine{0, 1, -7}};
  arr.incidences = planar_incidences(arr.points, arr.lines);
  const std::string text = render_planar(arr);
  CHECK(text.find("1/2 -3/1") != std::string::npos);
  std::istringstream in(text);
  const auto parsed = parse_planar(in);
  CHECK(parsed.has_incidences);
  CHECK(parsed.arrangement.points == arr.points);
  CHECK(parsed.arrangement.lines == arr.lines);
  CHECK(parsed.arrangement.incidences == arr.incidences);
  CHECK(render_planar(parsed.arrangement) == text);

  std::istringstream bad("GIRTHFORGE-PLANAR 1\npoints 0\nlines 1\n2 4 6\n");
  CHECK_THROWS_AS(parse_planar(bad), ParseError);
}

TEST_CASE("edge list export") {
  const std::vector<Edge> e{{0, 1}, {2, 0}};
  CHECK(render_edge_list(BipartiteGraph(3, 2, e)) == "U0 V1\nU2 V0\n");
}

TEST_CASE("svg export") {
  const auto arr = build_truncated({Family::Wenger, 2, 64});
  const auto planar = project_generic(arr.points, realize_lines(arr), 1, 1u << 16, 0).planar;
  const std::string svg = export_svg(planar);
  CHECK(count_of(svg, "<circle") == 325);
  CHECK(count_of(svg, "<line ") == 165);
  CHECK(svg.find("825 incidences") != std::string::npos);
  CHECK(export_svg(planar) == svg);

  PlanarArrangement single;
  single.points = {{Rational(2), Rational(3)}};
  single.lines = {planar_line_through(single.points[0], 1, 2)};
  single.incidences = {{0, 0}};
  const auto box = bounding_box(single);
  const auto seg = clip_line(single.lines[0], box);
  REQUIRE(seg.has_value());
  CHECK(point_on_planar_line(seg->first, single.lines[0]));
  CHECK(point_on_planar_line(seg->second, single.lines[0]));
  CHECK(seg->first.x <= single.points[0].x);
  CHECK(single.points[0].x <= seg->second.x);
  CHECK(count_of(export_svg(single), "<line ") == 1);

  CHECK_THROWS_AS(export_svg(PlanarArrangement{}), Error);
}

TEST_CASE("cli construct, verify, project, export, stats") {
  TempDir dir;
  const auto arr_path = dir / "a.arr";
  auto r = run({"construct", "--family", "lu", "--k", "3", "--n", "64", "--out", arr_path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("points 135") != std::string::npos);
  const auto file_text = slurp(arr_path);
  CHECK(file_text.find("points 135\nlines 2145\n") != std::string::npos);
  CHECK(file_text.find("incidences 675\n") != std::string::npos);

  r = run({"verify", "--in", arr_path, "--girth-at-least", "8", "--no-cycle-length", "4", "6",
           "--min-point-degree", "4", "--subgraph-prime", "minimal"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // A forbidden length that does occur: exit 1 with the witness.
  r = run({"verify", "--in", arr_path, "--no-cycle-length", "8"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL no cycle of length 8: U") != std::string::npos);
  r = run({"verify", "--in", arr_path, "--girth-at-least", "10"});
  CHECK(r.code == 1);

  // Tampered incidences are caught.
  {
    std::string tampered = file_text;
    const auto pos = tampered.rfind('\n', tampered.size() - 2);
    tampered = tampered.substr(0, pos + 1) + "0 0\n";
    std::ofstream(dir / "bad.arr") << tampered;
  }
  r = run({"verify", "--in", dir / "bad.arr"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL recorded incidences") != std::string::npos);

  const auto planar_path = dir / "a.planar";
  const auto svg_path = dir / "a.svg";
  r = run({"project", "--in", arr_path, "--seed", "1", "--M", "65536", "--out", planar_path, "--svg", svg_path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("seed 1") != std::string::npos);
  CHECK(r.out.find("incidences 675") != std::string::npos);
  const auto planar_text = slurp(planar_path);
  CHECK(planar_text.rfind("GIRTHFORGE-PLANAR 1\n", 0) == 0);

  // Reproducible byte-for-byte from the echoed seed.
  r = run({"project", "--in", arr_path, "--seed", "1", "--M", "65536", "--out", dir / "b.planar"});
  CHECK(slurp(dir / "b.planar") == planar_text);

  r = run({"verify", "--in", planar_path, "--girth-at-least", "8"});
  CHECK(r.code == 0);

  r = run({"export", "--in", arr_path, "--out", dir / "edges.txt"});
  CHECK(r.code == 0);
  CHECK(count_of(slurp(dir / "edges.txt"), "\n") == 675);
  r = run({"export", "--in", planar_path, "--format", "svg", "--out", dir / "b.svg"});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "b.svg") == slurp(svg_path));
  r = run({"export", "--family", "wenger", "--k", "2", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "\n") == 27);

  r = run({"stats", "--in", arr_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("girth 8") != std::string::npos);
  CHECK(r.out.find("theoretical_exponent 7/6") != std::string::npos);
  r = run({"stats", "--family", "lu", "--k", "3", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("incidences 81") != std::string::npos);

  r = run({"project", "--in", arr_path, "--M", "2", "--retries", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("cli usage errors exit 2") {
  auto r = run({"construct", "--family", "lu", "--k", "4", "--n", "64"});
  CHECK(r.code == 2);
  CHECK(r.err.find("odd k") != std::string::npos);
  CHECK(run({"construct", "--family", "wenger", "--k", "4", "--n", "64"}).code == 2);
  CHECK(run({"construct", "--family", "lu", "--k", "3", "--n", "abc"}).code == 2);
  CHECK(run({"construct", "--family", "nope", "--k", "3", "--n", "64"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--in", "/nonexistent/file"}).code == 2);
  CHECK(run({"stats"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
