#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "girthforge/bipartite_graph.hpp"
#include "girthforge/exact.hpp"
#include "girthforge/family.hpp"
#include "girthforge/realization.hpp"
#include "girthforge/truncated.hpp"

namespace girthforge {

// Text formats. Arrangement files:
//
//   GIRTHFORGE-ARR 1
//   dim <k>
//   family <lu|wenger>
//   n <n>
//   points <m>
//   lines <l>
//   <m lines of k integers>
//   <l lines of k integers: line parameters>
//   [incidences <c>
//    <c lines "point line">]
//
// Planar files use the header GIRTHFORGE-PLANAR 1, then "points <m>",
// "lines <l>", m lines "num/den num/den", l lines "a b c" and the same
// optional incidence section.

struct ArrangementFile {
  Family family = Family::LU;
  int k = 0;
  BigInt n = 0;
  std::vector<IntTuple> points;
  std::vector<IntTuple> lines;
  std::optional<std::vector<Edge>> incidences;

  friend bool operator==(const ArrangementFile&, const ArrangementFile&) = default;
};

struct PlanarFile {
  PlanarArrangement arrangement;
  bool has_incidences = false;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

ArrangementFile to_file(const TruncatedArrangement& arr, bool with_incidences = true);
/// Rebuilds the truncated arrangement; edges come from the file if present,
/// otherwise they are left empty.
TruncatedArrangement from_file(const ArrangementFile& file);

std::string render_arrangement(const ArrangementFile& file);
ArrangementFile parse_arrangement(std::istream& in);

std::string render_planar(const PlanarArrangement& arr, bool with_incidences = true);
PlanarFile parse_planar(std::istream& in);

/// One "U<i> V<j>" line per edge.
std::string render_edge_list(const BipartiteGraph& g);

/// Reads the first line of a file to tell the two formats apart.
enum class FileKind { Arrangement, Planar };
FileKind sniff_file_kind(const std::string& path);

}  // namespace girthforge
