#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexarep/fault.hpp"
#include "hexarep/report.hpp"

namespace hexarep::fgeom {

inline constexpr std::uint8_t kUnreachable = 0xff;

// A slim point-line geometry: every line carries exactly three points.
// All derived incidence data (adjacency, per-point line lists, the pairwise
// distance table) is computed once at construction; instances are immutable
// afterwards and safe to share across threads.
//
// Construction tolerates degenerate inputs (duplicate lines, repeated point
// indices inside a line, duplicate labels) so that verify_partial_linear can
// report on them; out-of-range point indices are rejected outright.
class PartialLinearSpace {
 public:
  PartialLinearSpace(std::string name, std::vector<std::string> points,
                     std::vector<std::array<int, 3>> lines,
                     std::vector<std::string> line_tags = {});

  const std::string& name() const { return name_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::string>& point_labels() const { return points_; }
  const std::vector<std::array<int, 3>>& lines() const { return lines_; }
  const std::array<int, 3>& line(int l) const {
    return lines_[static_cast<size_t>(l)];
  }
  const std::vector<std::string>& line_tags() const { return line_tags_; }
  const std::string& label(int p) const { return points_[static_cast<size_t>(p)]; }
  int point_index(std::string_view label) const;  // -1 if absent

  bool adjacent(int p, int q) const {
    return (adj_[static_cast<size_t>(p) * words_ +
                 static_cast<size_t>(q >> 6)] >>
            (q & 63)) &
           1;
  }
  const std::vector<int>& lines_through(int p) const {
    return point_lines_[static_cast<size_t>(p)];
  }
  // First line containing both points, -1 if none. A partial linear space
  // has at most one; extras are recorded in multi_line_pairs().
  int line_on(int p, int q) const {
    return pair_line_[static_cast<size_t>(p) * points_.size() +
                      static_cast<size_t>(q)];
  }
  std::uint8_t distance_u8(int p, int q) const {
    return dist_[static_cast<size_t>(p) * points_.size() +
                 static_cast<size_t>(q)];
  }
  bool connected() const { return connected_; }
  bool line_contains(int l, int p) const;

  const std::vector<std::pair<int, int>>& multi_line_pairs() const {
    return multi_line_pairs_;
  }
  const std::vector<int>& degenerate_lines() const { return degenerate_lines_; }

 private:
  std::string name_;
  std::vector<std::string> points_;
  std::vector<std::array<int, 3>> lines_;
  std::vector<std::string> line_tags_;
  size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<std::int32_t> pair_line_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::pair<int, int>> multi_line_pairs_;
  std::vector<int> degenerate_lines_;
  bool connected_ = false;
};

// The third point of the given line: {p, q, third}. Faults if p == q or
// either point is off the line.
int third_point(const PartialLinearSpace& s, int line, int p, int q);

// Collinearity-graph distance; faults when the pair is unreachable.
int distance(const PartialLinearSpace& s, int p, int q);

// Checks: 3 distinct in-range points per line, two points on at most one
// common line, pairwise distinct labels.
VerificationReport verify_partial_linear(const PartialLinearSpace& s);

struct NearPolygonReport {
  bool connected = false;
  int diameter = -1;
  bool near_polygon = false;  // unique nearest point on every line
  bool dense = false;         // distance-2 pairs have >= 2 common neighbours
  int min_lines_per_point = 0;
  int max_lines_per_point = 0;
  bool regular = false;
  // (s,t) when the space is a GQ: diameter 2, regular, near polygon
  std::optional<std::pair<int, int>> gq_order;
  VerificationReport report;
};

// Faults on a disconnected collinearity graph.
NearPolygonReport verify_near_polygon(const PartialLinearSpace& s);

// Smallest superset of `seed` closed under line completion (third point of
// any line met twice) and geodesic insertion (every point on a shortest path
// between two members). Returned sorted.
std::vector<int> convex_closure(const PartialLinearSpace& s,
                                std::span<const int> seed);

struct Spread {
  std::vector<int> lines;
};

bool is_spread(const PartialLinearSpace& s, const Spread& sp);

struct SubGeometry {
  PartialLinearSpace space;
  std::vector<int> parent_points;  // sub index -> parent index
  std::vector<int> parent_lines;
};

// Induced geometry on a point subset: the lines fully inside it.
SubGeometry induced_subgeometry(const PartialLinearSpace& s,
                                std::span<const int> points, std::string name);

struct Quad {
  SubGeometry sub;
  std::optional<std::pair<int, int>> gq_order;
};

// Convex closure of two points at distance 2, as an induced geometry with
// its GQ order. Faults when d(p,q) != 2.
Quad quad_of(const PartialLinearSpace& s, int p, int q);

// The unique nearest point of the line; faults if the minimum is attained
// twice (input not a near polygon for this pair).
int project_to_line(const PartialLinearSpace& s, int p, int line);

// The grid through two disjoint lines: their points, the three transversals,
// and the transversals' third points. Returns the nine grid points and the
// line formed by the third points; nullopt when no grid exists (each point
// of l1 must see exactly one point of l2, and the three third points must be
// a line).
struct GridThrough {
  std::vector<int> points;  // sorted, size 9
  int third_line = -1;      // the grid line disjoint from l1 and l2
};
std::optional<GridThrough> grid_through(const PartialLinearSpace& s, int l1,
                                        int l2);

// For every pair of spread lines: a grid through them must exist and its
// third line must again lie in the spread. Faults when the spread invariant
// fails or some pair has no grid. A regular spread of Q(5,2) is also a
// spread of symmetry; the report carries that tag.
VerificationReport is_regular_spread(const PartialLinearSpace& s,
                                     const Spread& sp);

// Backtracking search for a line-preserving point permutation with
// per-point candidate images. Returns the first witness found.
std::optional<std::vector<int>> find_constrained_automorphism(
    const PartialLinearSpace& s,
    const std::function<std::vector<int>(int)>& candidates);

// An automorphism fixing every spread line setwise and mapping x1 to x2,
// or nullopt if none exists. Faults if sp is not a spread, line is not in
// it, or x1/x2 are off the line.
std::optional<std::vector<int>> spread_symmetry_witness(
    const PartialLinearSpace& s, const Spread& sp, int line, int x1, int x2);

}  // namespace hexarep::fgeom
