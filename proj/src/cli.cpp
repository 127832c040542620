#include "girthforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "girthforge/algebraic_graphs.hpp"
#include "girthforge/formats.hpp"
#include "girthforge/realization.hpp"
#include "girthforge/svg.hpp"
#include "girthforge/truncated.hpp"
#include "girthforge/verification.hpp"

namespace girthforge::cli {

namespace {

struct Options {
  std::string family;
  int k = 0;
  std::string n;
  std::int64_t q = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::string in;
  std::string out;
  std::string svg;
  std::string format = "edgelist";
  bool no_incidences = false;
  std::uint64_t seed = 1;
  std::uint64_t bound = 65536;
  int retries = 8;
  std::size_t girth_at_least = 0;
  std::vector<std::size_t> no_cycle_lengths;
  std::size_t min_point_degree = 0;
  std::size_t min_line_degree = 0;
  std::string subgraph_prime;
};

BigInt parse_bigint(const std::string& s, const char* what) {
  BigInt x;
  if (s.empty() || x.set_str(s, 10) != 0) throw Error(std::string("bad integer for ") + what + ": '" + s + "'");
  return x;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

ArrangementFile read_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_arrangement(in);
}

PlanarFile read_planar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_planar(in);
}

std::string format_cycle(const std::vector<VertexId>& cycle, std::size_t left_count) {
  std::ostringstream s;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s << ' ';
    if (cycle[i] < left_count) s << 'U' << cycle[i];
    else s << 'V' << cycle[i] - left_count;
  }
  return s.str();
}

void print_degree_stats(const BipartiteGraph& g, std::ostream& out) {
  const auto stats = degree_stats(g);
  auto side = [&out](const char* name, const SideDegreeStats& s) {
    out << name << " degree min " << s.min << " max " << s.max << " histogram";
    for (const auto& [deg, count] : s.histogram) out << ' ' << deg << ':' << count;
    out << '\n';
  };
  side("point", stats.left);
  side("line", stats.right);
}

void print_girth(const BipartiteGraph& g, std::ostream& out) {
  const auto report = girth(g);
  if (report.finite()) out << "girth " << *report.girth << '\n';
  else out << "girth inf\n";
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  TruncationSpec spec{parse_family(o.family), o.k, parse_bigint(o.n, "--n")};
  spec.validate();
  BuildOptions build;
  build.budget = o.budget;
  const auto arr = build_truncated(spec, build);
  for (const auto& w : arr.warnings) err << "warning: " << w << '\n';
  out << "family " << family_name(spec.family) << " k " << spec.k << " n " << spec.n.get_str() << '\n'
      << "points " << arr.points.size() << '\n'
      << "lines " << arr.line_params.size() << '\n'
      << "incidences " << arr.edges.size() << '\n';
  if (!o.out.empty()) write_text(o.out, render_arrangement(to_file(arr, !o.no_incidences)), out);
  return kExitOk;
}

struct CheckLog {
  std::ostream& out;
  bool failed = false;

  void pass(const std::string& what) { out << "PASS " << what << '\n'; }
  void fail(const std::string& what) {
    out << "FAIL " << what << '\n';
    failed = true;
  }
};

void run_graph_checks(const Options& o, const BipartiteGraph& g, CheckLog& log) {
  if (o.girth_at_least > 0) {
    const auto report = girth(g);
    const std::string label = "girth >= " + std::to_string(o.girth_at_least);
    if (!report.finite()) log.pass(label + " (forest)");
    else if (*report.girth >= o.girth_at_least) log.pass(label + " (girth " + std::to_string(*report.girth) + ")");
    else log.fail(label + ": cycle of length " + std::to_string(*report.girth) + ": " +
                  format_cycle(report.witness, g.left_count()));
  }
  for (std::size_t len : o.no_cycle_lengths) {
    const std::string label = "no cycle of length " + std::to_string(len);
    if (auto c = has_cycle_of_length(g, len)) log.fail(label + ": " + format_cycle(*c, g.left_count()));
    else log.pass(label);
  }
  const auto stats = degree_stats(g);
  if (o.min_point_degree > 0) {
    const std::string label = "min point degree >= " + std::to_string(o.min_point_degree);
    if (stats.left.min >= o.min_point_degree) log.pass(label + " (min " + std::to_string(stats.left.min) + ")");
    else log.fail(label + ": found " + std::to_string(stats.left.min));
  }
  if (o.min_line_degree > 0) {
    const std::string label = "min line degree >= " + std::to_string(o.min_line_degree);
    if (stats.right.min >= o.min_line_degree) log.pass(label + " (min " + std::to_string(stats.right.min) + ")");
    else log.fail(label + ": found " + std::to_string(stats.right.min));
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  CheckLog log{out};
  if (sniff_file_kind(o.in) == FileKind::Planar) {
    const auto file = read_planar(o.in);
    const auto& arr = file.arrangement;
    const auto derived = planar_incidences(arr.points, arr.lines);
    if (file.has_incidences) {
      if (derived == arr.incidences) log.pass("recorded incidences match geometry (" + std::to_string(derived.size()) + ")");
      else log.fail("recorded incidences disagree with geometry");
    }
    run_graph_checks(o, BipartiteGraph(arr.points.size(), arr.lines.size(), derived), log);
    return log.failed ? kExitVerificationFailed : kExitOk;
  }

  const auto file = read_arrangement(o.in);
  validate_k(file.family, file.k);
  auto arr = from_file(file);
  const auto lines = realize_lines(arr);
  const auto cert = certify_lines_distinct(lines);
  if (cert.distinct) log.pass("lines distinct (" + std::to_string(lines.size()) + ")");
  else log.fail("lines " + std::to_string(cert.collision->first) + " and " + std::to_string(cert.collision->second) +
                " coincide");
  const auto derived = incidence_set_kd_hashed(arr.points, lines);
  if (file.incidences) {
    auto recorded = *file.incidences;
    std::sort(recorded.begin(), recorded.end());
    if (recorded == derived) log.pass("recorded incidences match geometry (" + std::to_string(derived.size()) + ")");
    else log.fail("recorded incidences disagree with geometry (" + std::to_string(recorded.size()) + " recorded, " +
                  std::to_string(derived.size()) + " derived)");
  }
  arr.edges = derived;
  const auto g = arr.graph();
  run_graph_checks(o, g, log);
  if (!o.subgraph_prime.empty()) {
    const auto mode = o.subgraph_prime == "paper" ? PrimeMode::Window : PrimeMode::Minimal;
    const BigInt q = embedding_prime(arr, mode);
    const std::string label = "subgraph of the parent graph mod " + q.get_str() + " (" + o.subgraph_prime + ")";
    if (verify_subgraph_embedding(arr, q)) log.pass(label);
    else log.fail(label);
  }
  return log.failed ? kExitVerificationFailed : kExitOk;
}

int cmd_project(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = read_arrangement(o.in);
  validate_k(file.family, file.k);
  const auto arr = from_file(file);
  ProjectionResult result;
  try {
    result = project_generic(arr.points, realize_lines(arr), o.seed, o.bound, o.retries);
  } catch (const ProjectionFailed& e) {
    err << "error: " << e.what() << " (seed " << o.seed << ", bound " << o.bound << ")\n";
    return kExitVerificationFailed;
  }
  auto row = [](const IntTuple& r) {
    std::string s;
    for (const auto& x : r) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
  };
  out << "seed " << result.map.seed << " (requested " << o.seed << ", attempts " << result.attempts << ")\n"
      << "bound " << result.map.bound << '\n'
      << "row_x " << row(result.map.row_x) << '\n'
      << "row_y " << row(result.map.row_y) << '\n'
      << "points " << result.planar.points.size() << '\n'
      << "lines " << result.planar.lines.size() << '\n'
      << "incidences " << result.planar.incidences.size() << '\n';
  if (!o.out.empty()) write_text(o.out, render_planar(result.planar), out);
  if (!o.svg.empty()) write_text(o.svg, export_svg(result.planar), out);
  return kExitOk;
}

BipartiteGraph field_graph(const Options& o) {
  const Family f = parse_family(o.family);
  if (f == Family::LU) return build_lu_graph({o.k, o.q}, o.budget);
  return build_wenger_graph({o.k, o.q}, o.budget);
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.in.empty()) {
    if (o.format != "edgelist") throw Error("field graphs export only as edgelist");
    write_text(o.out, render_edge_list(field_graph(o)), out);
    return kExitOk;
  }
  if (sniff_file_kind(o.in) == FileKind::Planar) {
    auto file = read_planar(o.in);
    if (!file.has_incidences) {
      file.arrangement.incidences = planar_incidences(file.arrangement.points, file.arrangement.lines);
    }
    if (o.format == "svg") write_text(o.out, export_svg(file.arrangement), out);
    else write_text(o.out, render_edge_list(file.arrangement.graph()), out);
    return kExitOk;
  }
  if (o.format == "svg") throw Error("svg export needs a planar file; run 'project' first");
  auto arr = from_file(read_arrangement(o.in));
  if (arr.edges.empty()) arr.edges = incidence_set_kd_hashed(arr.points, realize_lines(arr));
  write_text(o.out, render_edge_list(arr.graph()), out);
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  BipartiteGraph g;
  std::optional<std::pair<Family, int>> family;
  if (o.in.empty()) {
    g = field_graph(o);
    family = {parse_family(o.family), o.k};
    out << "graph " << o.family << " k " << o.k << " field " << o.q << '\n';
  } else if (sniff_file_kind(o.in) == FileKind::Planar) {
    const auto file = read_planar(o.in);
    g = BipartiteGraph(file.arrangement.points.size(), file.arrangement.lines.size(),
                       planar_incidences(file.arrangement.points, file.arrangement.lines));
  } else {
    auto arr = from_file(read_arrangement(o.in));
    validate_k(arr.spec.family, arr.spec.k);
    arr.edges = incidence_set_kd_hashed(arr.points, realize_lines(arr));
    g = arr.graph();
    family = {arr.spec.family, arr.spec.k};
  }
  out << "points " << g.left_count() << '\n' << "lines " << g.right_count() << '\n' << "incidences " << g.edge_count()
      << '\n';
  print_degree_stats(g, out);
  print_girth(g, out);
  if (g.left_count() > 0 && g.right_count() > 0) {
    out << "st_ratio " << to_string(st_ratio(g.left_count(), g.right_count(), g.edge_count())) << '\n';
  }
  if (family) {
    out << "theoretical_exponent " << to_string(theoretical_exponent(family->first, family->second)) << '\n';
    if (family->first == Family::LU) out << "girth_target " << girth_target(family->second) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Girth-extremal point-line arrangements: construct, verify, project, export"};
  app.name(args.empty() ? "girthforge" : args.front());
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a truncated arrangement");
  construct->add_option("--family", o.family, "lu or wenger")->required()->check(CLI::IsMember({"lu", "wenger"}));
  construct->add_option("--k", o.k, "dimension")->required();
  construct->add_option("--n", o.n, "size parameter")->required();
  construct->add_option("--budget", o.budget, "cap on |U'| and |V'|");
  construct->add_option("--out", o.out, "arrangement file to write");
  construct->add_flag("--no-incidences", o.no_incidences, "omit the incidence section");

  auto* verify = app.add_subcommand("verify", "Re-derive incidences and check properties");
  verify->add_option("--in", o.in, "arrangement or planar file")->required()->check(CLI::ExistingFile);
  verify->add_option("--girth-at-least", o.girth_at_least);
  verify->add_option("--no-cycle-length", o.no_cycle_lengths)->take_all();
  verify->add_option("--min-point-degree", o.min_point_degree);
  verify->add_option("--min-line-degree", o.min_line_degree);
  verify->add_option("--subgraph-prime", o.subgraph_prime)->check(CLI::IsMember({"minimal", "paper"}));

  auto* project = app.add_subcommand("project", "Project an arrangement to the plane");
  project->add_option("--in", o.in, "arrangement file")->required()->check(CLI::ExistingFile);
  project->add_option("--seed", o.seed);
  project->add_option("--M,--bound", o.bound, "coefficients drawn from [0, M)");
  project->add_option("--retries", o.retries);
  project->add_option("--out", o.out, "planar file to write");
  project->add_option("--svg", o.svg, "SVG figure to write");

  auto* exp = app.add_subcommand("export", "Export an edge list or SVG");
  exp->add_option("--in", o.in, "arrangement or planar file")->check(CLI::ExistingFile);
  exp->add_option("--family", o.family)->check(CLI::IsMember({"lu", "wenger"}));
  exp->add_option("--k", o.k);
  exp->add_option("--q,--p", o.q, "field size for the full graph");
  exp->add_option("--budget", o.budget);
  exp->add_option("--format", o.format)->check(CLI::IsMember({"edgelist", "svg"}));
  exp->add_option("--out", o.out);

  auto* stats = app.add_subcommand("stats", "Counts, degrees, girth and diagnostics");
  stats->add_option("--in", o.in, "arrangement or planar file")->check(CLI::ExistingFile);
  stats->add_option("--family", o.family)->check(CLI::IsMember({"lu", "wenger"}));
  stats->add_option("--k", o.k);
  stats->add_option("--q,--p", o.q, "field size for the full graph");
  stats->add_option("--budget", o.budget);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("girthforge");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (project->parsed()) return cmd_project(o, out, err);
    if ((exp->parsed() || stats->parsed()) && o.in.empty() && (o.family.empty() || o.k == 0 || o.q == 0)) {
      throw Error("give --in, or --family, --k and --q for a full field graph");
    }
    if (exp->parsed()) return cmd_export(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace girthforge::cli
