#include "hexarep/fgeom.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace hexarep::fgeom {

PartialLinearSpace::PartialLinearSpace(std::string name,
                                       std::vector<std::string> points,
                                       std::vector<std::array<int, 3>> lines,
                                       std::vector<std::string> line_tags)
    : name_(std::move(name)),
      points_(std::move(points)),
      lines_(std::move(lines)),
      line_tags_(std::move(line_tags)) {
  const size_t n = points_.size();
  if (n == 0) throw Fault(name_ + ": geometry has no points");
  if (!line_tags_.empty() && line_tags_.size() != lines_.size())
    throw Fault(name_ + ": line_tags size mismatch");
  for (const auto& ln : lines_)
    for (int p : ln)
      if (p < 0 || static_cast<size_t>(p) >= n)
        throw Fault(name_ + ": line references point out of range");

  words_ = (n + 63) / 64;
  adj_.assign(n * words_, 0);
  point_lines_.assign(n, {});
  pair_line_.assign(n * n, -1);

  auto set_adj = [&](int p, int q) {
    adj_[static_cast<size_t>(p) * words_ + static_cast<size_t>(q >> 6)] |=
        std::uint64_t{1} << (q & 63);
  };
  for (int l = 0; l < static_cast<int>(lines_.size()); ++l) {
    const auto& ln = lines_[static_cast<size_t>(l)];
    if (ln[0] == ln[1] || ln[0] == ln[2] || ln[1] == ln[2]) {
      degenerate_lines_.push_back(l);
      continue;
    }
    for (int a = 0; a < 3; ++a) {
      point_lines_[static_cast<size_t>(ln[a])].push_back(l);
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const int p = ln[a], q = ln[b];
        set_adj(p, q);
        auto& slot = pair_line_[static_cast<size_t>(p) * n +
                                static_cast<size_t>(q)];
        if (slot == -1) {
          slot = l;
        } else if (slot != l && p < q) {
          multi_line_pairs_.emplace_back(p, q);
        }
      }
    }
  }
  std::sort(multi_line_pairs_.begin(), multi_line_pairs_.end());
  multi_line_pairs_.erase(
      std::unique(multi_line_pairs_.begin(), multi_line_pairs_.end()),
      multi_line_pairs_.end());

  // Distance table by BFS from every point.
  dist_.assign(n * n, kUnreachable);
  std::vector<int> queue(n);
  for (size_t src = 0; src < n; ++src) {
    auto* row = &dist_[src * n];
    row[src] = 0;
    size_t head = 0, tail = 0;
    queue[tail++] = static_cast<int>(src);
    while (head < tail) {
      const int x = queue[head++];
      const std::uint8_t nd = static_cast<std::uint8_t>(row[x] + 1);
      const std::uint64_t* bits = &adj_[static_cast<size_t>(x) * words_];
      for (size_t w = 0; w < words_; ++w) {
        std::uint64_t word = bits[w];
        while (word) {
          const int y = static_cast<int>(w * 64) + std::countr_zero(word);
          word &= word - 1;
          if (row[y] == kUnreachable) {
            row[y] = nd;
            queue[tail++] = y;
          }
        }
      }
    }
  }
  connected_ = true;
  for (size_t q = 0; q < n; ++q)
    if (dist_[q] == kUnreachable) connected_ = false;
}

int PartialLinearSpace::point_index(std::string_view label) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == label) return static_cast<int>(i);
  return -1;
}

bool PartialLinearSpace::line_contains(int l, int p) const {
  const auto& ln = lines_[static_cast<size_t>(l)];
  return ln[0] == p || ln[1] == p || ln[2] == p;
}

int third_point(const PartialLinearSpace& s, int line, int p, int q) {
  if (line < 0 || line >= s.line_count())
    throw Fault("third_point: line index out of range");
  if (p == q) throw Fault("third_point: the two points coincide");
  if (!s.line_contains(line, p) || !s.line_contains(line, q))
    throw Fault("third_point: point not on the line");
  for (int x : s.line(line))
    if (x != p && x != q) return x;
  throw Fault("third_point: degenerate line");
}

int distance(const PartialLinearSpace& s, int p, int q) {
  const std::uint8_t d = s.distance_u8(p, q);
  if (d == kUnreachable)
    throw Fault("distance: points are in different components");
  return d;
}

VerificationReport verify_partial_linear(const PartialLinearSpace& s) {
  VerificationReport rep;
  rep.subject = s.name();
  const std::uint64_t n = static_cast<std::uint64_t>(s.point_count());

  bool lines_ok = s.degenerate_lines().empty();
  rep.add("lines_have_3_distinct_points",
          static_cast<std::uint64_t>(s.line_count()), lines_ok,
          lines_ok ? ""
                   : std::to_string(s.degenerate_lines().size()) +
                         " degenerate line(s)");

  // Duplicate lines collapse onto the same point pairs, so they are caught
  // here together with genuine double covers.
  bool pl = s.multi_line_pairs().empty();
  std::string detail;
  if (!pl) {
    const auto& [p, q] = s.multi_line_pairs().front();
    detail = "points " + std::to_string(p) + "," + std::to_string(q) +
             " lie on more than one line";
  }
  rep.add("two_points_on_at_most_one_line", n * (n - 1) / 2, pl, detail);

  std::set<std::string_view> seen;
  bool labels_ok = true;
  for (const auto& lbl : s.point_labels())
    if (!seen.insert(lbl).second) labels_ok = false;
  rep.add("labels_pairwise_distinct", n, labels_ok);
  return rep;
}

NearPolygonReport verify_near_polygon(const PartialLinearSpace& s) {
  if (!s.connected())
    throw Fault(s.name() + ": collinearity graph is disconnected");
  NearPolygonReport out;
  out.connected = true;
  out.report.subject = s.name();
  const int n = s.point_count();

  int diameter = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      diameter = std::max(diameter, static_cast<int>(s.distance_u8(p, q)));
  out.diameter = diameter;

  bool near = true;
  for (int p = 0; p < n && near; ++p)
    for (int l = 0; l < s.line_count(); ++l) {
      int best = kUnreachable, count = 0;
      for (int x : s.line(l)) {
        const int d = s.distance_u8(p, x);
        if (d < best) {
          best = d;
          count = 1;
        } else if (d == best) {
          ++count;
        }
      }
      if (count != 1) {
        near = false;
        break;
      }
    }
  out.near_polygon = near;
  out.report.add("unique_nearest_point_on_every_line",
                 static_cast<std::uint64_t>(n) *
                     static_cast<std::uint64_t>(s.line_count()),
                 near);

  bool dense = true;
  std::uint64_t d2_pairs = 0;
  for (int p = 0; p < n && dense; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (s.distance_u8(p, q) != 2) continue;
      ++d2_pairs;
      int common = 0;
      for (int z = 0; z < n; ++z)
        if (s.adjacent(p, z) && s.adjacent(q, z)) ++common;
      if (common < 2) {
        dense = false;
        break;
      }
    }
  out.dense = dense;
  out.report.add("distance_2_pairs_have_2_common_neighbours", d2_pairs, dense);

  int mn = s.line_count() + 1, mx = 0;
  for (int p = 0; p < n; ++p) {
    const int k = static_cast<int>(s.lines_through(p).size());
    mn = std::min(mn, k);
    mx = std::max(mx, k);
  }
  out.min_lines_per_point = mn;
  out.max_lines_per_point = mx;
  out.regular = (mn == mx);
  out.report.add("lines_per_point", static_cast<std::uint64_t>(n), true,
                 out.regular ? std::to_string(mn)
                             : std::to_string(mn) + ".." + std::to_string(mx));
  out.report.add("diameter", 1, true, std::to_string(diameter));
  if (near && out.regular && diameter == 2)
    out.gq_order = std::make_pair(2, mn - 1);
  return out;
}

std::vector<int> convex_closure(const PartialLinearSpace& s,
                                std::span<const int> seed) {
  const int n = s.point_count();
  std::vector<char> in(static_cast<size_t>(n), 0);
  std::vector<int> members;
  auto insert = [&](int p) {
    if (!in[static_cast<size_t>(p)]) {
      in[static_cast<size_t>(p)] = 1;
      members.push_back(p);
    }
  };
  for (int p : seed) {
    if (p < 0 || p >= n) throw Fault("convex_closure: seed point out of range");
    insert(p);
  }
  // Monotone growth: each unordered pair of members is processed exactly once;
  // both closure rules depend only on the pair, not on current membership.
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      const int x = members[a], y = members[b];
      const int l = s.line_on(x, y);
      if (l >= 0) insert(third_point(s, l, x, y));
      const std::uint8_t dxy = s.distance_u8(x, y);
      if (dxy >= 2 && dxy != kUnreachable) {
        for (int z = 0; z < n; ++z) {
          if (in[static_cast<size_t>(z)]) continue;
          if (s.distance_u8(x, z) + s.distance_u8(z, y) == dxy) insert(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_spread(const PartialLinearSpace& s, const Spread& sp) {
  std::vector<char> covered(static_cast<size_t>(s.point_count()), 0);
  for (int l : sp.lines) {
    if (l < 0 || l >= s.line_count()) return false;
    for (int p : s.line(l)) {
      if (covered[static_cast<size_t>(p)]) return false;
      covered[static_cast<size_t>(p)] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

SubGeometry induced_subgeometry(const PartialLinearSpace& s,
                                std::span<const int> points,
                                std::string name) {
  std::vector<int> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<int> to_sub(static_cast<size_t>(s.point_count()), -1);
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    to_sub[static_cast<size_t>(pts[i])] = static_cast<int>(i);
    labels.push_back(s.label(pts[i]));
  }
  std::vector<std::array<int, 3>> lines;
  std::vector<int> parent_lines;
  std::vector<std::string> tags;
  const bool tagged = !s.line_tags().empty();
  for (int l = 0; l < s.line_count(); ++l) {
    const auto& ln = s.line(l);
    if (to_sub[static_cast<size_t>(ln[0])] < 0 ||
        to_sub[static_cast<size_t>(ln[1])] < 0 ||
        to_sub[static_cast<size_t>(ln[2])] < 0)
      continue;
    lines.push_back({to_sub[static_cast<size_t>(ln[0])],
                     to_sub[static_cast<size_t>(ln[1])],
                     to_sub[static_cast<size_t>(ln[2])]});
    parent_lines.push_back(l);
    if (tagged) tags.push_back(s.line_tags()[static_cast<size_t>(l)]);
  }
  return SubGeometry{
      PartialLinearSpace(std::move(name), std::move(labels), std::move(lines),
                         std::move(tags)),
      std::move(pts), std::move(parent_lines)};
}

Quad quad_of(const PartialLinearSpace& s, int p, int q) {
  if (s.distance_u8(p, q) != 2)
    throw Fault("quad_of: points are not at distance 2");
  const std::array<int, 2> seed{p, q};
  auto pts = convex_closure(s, seed);
  auto sub = induced_subgeometry(
      s, pts, s.name() + "/quad(" + s.label(p) + "," + s.label(q) + ")");
  Quad out{std::move(sub), std::nullopt};
  const auto np = verify_near_polygon(out.sub.space);
  out.gq_order = np.gq_order;
  return out;
}

int project_to_line(const PartialLinearSpace& s, int p, int line) {
  if (line < 0 || line >= s.line_count())
    throw Fault("project_to_line: line index out of range");
  int best = kUnreachable, arg = -1, count = 0;
  for (int x : s.line(line)) {
    const int d = s.distance_u8(p, x);
    if (d < best) {
      best = d;
      arg = x;
      count = 1;
    } else if (d == best) {
      ++count;
    }
  }
  if (count != 1)
    throw Fault("project_to_line: nearest point on the line is not unique");
  return arg;
}

std::optional<GridThrough> grid_through(const PartialLinearSpace& s, int l1,
                                        int l2) {
  if (l1 < 0 || l1 >= s.line_count() || l2 < 0 || l2 >= s.line_count() ||
      l1 == l2)
    throw Fault("grid_through: bad line pair");
  for (int p : s.line(l1))
    for (int q : s.line(l2))
      if (p == q) return std::nullopt;  // lines meet: no grid through them

  std::vector<int> pts;
  std::array<int, 3> thirds{};
  int k = 0;
  for (int x : s.line(l1)) {
    pts.push_back(x);
    int mate = -1, count = 0;
    for (int y : s.line(l2))
      if (s.adjacent(x, y)) {
        mate = y;
        ++count;
      }
    if (count != 1) return std::nullopt;
    const int t = s.line_on(x, mate);
    thirds[static_cast<size_t>(k++)] = third_point(s, t, x, mate);
  }
  for (int y : s.line(l2)) pts.push_back(y);
  // The transversals' third points must themselves form a line.
  const int l3 = s.line_on(thirds[0], thirds[1]);
  if (l3 < 0 || !s.line_contains(l3, thirds[2])) return std::nullopt;
  for (int z : thirds) pts.push_back(z);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() != 9) return std::nullopt;
  return GridThrough{std::move(pts), l3};
}

VerificationReport is_regular_spread(const PartialLinearSpace& s,
                                     const Spread& sp) {
  if (!is_spread(s, sp))
    throw Fault("is_regular_spread: line set does not partition the points");
  VerificationReport rep;
  rep.subject = s.name() + "/spread";
  rep.add("justification", 0, true,
          "a regular spread of Q(5,2) is also a spread of symmetry");
  std::uint64_t pairs = 0;
  bool all_third_in = true;
  for (size_t i = 0; i < sp.lines.size(); ++i) {
    for (size_t j = i + 1; j < sp.lines.size(); ++j) {
      ++pairs;
      const auto grid = grid_through(s, sp.lines[i], sp.lines[j]);
      if (!grid)
        throw Fault("is_regular_spread: line pair not contained in a grid");
      if (std::find(sp.lines.begin(), sp.lines.end(), grid->third_line) ==
          sp.lines.end())
        all_third_in = false;
    }
  }
  rep.add("third_grid_line_in_spread", pairs, all_third_in);
  return rep;
}

namespace {

struct AutoSearch {
  const PartialLinearSpace& s;
  const std::function<std::vector<int>(int)>& candidates;
  std::vector<int> image;
  std::vector<char> used;
  std::vector<int> order;

  explicit AutoSearch(const PartialLinearSpace& space,
                      const std::function<std::vector<int>(int)>& cand)
      : s(space),
        candidates(cand),
        image(static_cast<size_t>(space.point_count()), -1),
        used(static_cast<size_t>(space.point_count()), 0) {
    order.resize(static_cast<size_t>(space.point_count()));
    std::iota(order.begin(), order.end(), 0);
    // Most-constrained first: fewer candidates means earlier pruning.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return candidates(a).size() < candidates(b).size();
    });
  }

  bool consistent(int p, int c) const {
    for (int q = 0; q < s.point_count(); ++q) {
      const int iq = image[static_cast<size_t>(q)];
      if (iq < 0 || q == p) continue;
      if (s.adjacent(p, q) != s.adjacent(c, iq)) return false;
      // When a line is fully mapped its image must be a line.
      const int l = s.line_on(p, q);
      if (l >= 0) {
        const int r = third_point(s, l, p, q);
        const int ir = image[static_cast<size_t>(r)];
        if (ir >= 0) {
          const int lm = s.line_on(c, iq);
          if (lm < 0 || !s.line_contains(lm, ir)) return false;
        }
      }
    }
    return true;
  }

  bool run(size_t depth) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    for (int c : candidates(p)) {
      if (used[static_cast<size_t>(c)]) continue;
      if (!consistent(p, c)) continue;
      image[static_cast<size_t>(p)] = c;
      used[static_cast<size_t>(c)] = 1;
      if (run(depth + 1)) return true;
      image[static_cast<size_t>(p)] = -1;
      used[static_cast<size_t>(c)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_constrained_automorphism(
    const PartialLinearSpace& s,
    const std::function<std::vector<int>(int)>& candidates) {
  AutoSearch search(s, candidates);
  if (!search.run(0)) return std::nullopt;
  return search.image;
}

std::optional<std::vector<int>> spread_symmetry_witness(
    const PartialLinearSpace& s, const Spread& sp, int line, int x1, int x2) {
  if (!is_spread(s, sp))
    throw Fault("spread_symmetry_witness: not a spread");
  if (std::find(sp.lines.begin(), sp.lines.end(), line) == sp.lines.end())
    throw Fault("spread_symmetry_witness: line not in the spread");
  if (!s.line_contains(line, x1) || !s.line_contains(line, x2))
    throw Fault("spread_symmetry_witness: point off the line");

  std::vector<int> spread_line_of(static_cast<size_t>(s.point_count()), -1);
  for (int l : sp.lines)
    for (int p : s.line(l)) spread_line_of[static_cast<size_t>(p)] = l;

  auto candidates = [&](int p) {
    std::vector<int> out;
    if (p == x1) {
      out.push_back(x2);
    } else {
      for (int q : s.line(spread_line_of[static_cast<size_t>(p)]))
        out.push_back(q);
    }
    return out;
  };
  return find_constrained_automorphism(s, candidates);
}

}  // namespace hexarep::fgeom
