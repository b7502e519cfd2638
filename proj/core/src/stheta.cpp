#include "hexarep/stheta.hpp"

#include <algorithm>
#include <set>

namespace hexarep::stheta {

using triples::Z3;
using triples::z3_add;
using triples::z3_neg;
using triples::z3_sub;

namespace {

struct SpreadIndex {
  std::vector<int> sls_of_point;  // duad point -> 0..8
  std::vector<int> sls_of_line;   // duad line -> 0..8 or -1

  SpreadIndex(const fgeom::PartialLinearSpace& duad,
              const fgeom::Spread& spread)
      : sls_of_point(static_cast<size_t>(duad.point_count()), -1),
        sls_of_line(static_cast<size_t>(duad.line_count()), -1) {
    for (size_t k = 0; k < spread.lines.size(); ++k) {
      sls_of_line[static_cast<size_t>(spread.lines[k])] = static_cast<int>(k);
      for (int p : duad.line(spread.lines[k]))
        sls_of_point[static_cast<size_t>(p)] = static_cast<int>(k);
    }
  }
};

}  // namespace

SThetaGeometry build_stheta(const fgeom::PartialLinearSpace& duad,
                            const fgeom::Spread& spread,
                            const triples::AdmissibleTriple& triple) {
  const int n = duad.point_count();
  if (n != 27) throw Fault("build_stheta: host is not a 27-point model");
  SpreadIndex si(duad, spread);

  std::vector<std::string> labels;
  labels.reserve(243);
  for (int p = 0; p < n; ++p) labels.push_back(duad.label(p));
  for (int p = 0; p < n; ++p) labels.push_back(duad.label(p) + "~");
  for (int p = 0; p < n; ++p) labels.push_back(duad.label(p) + "~~");

  SThetaGeometry out{fgeom::PartialLinearSpace("tmp", {"x"}, {}),
                     duad,
                     spread,
                     triple,
                     {},
                     {}};
  // P4 points: ordered collinear pairs on a spread line, times Z3.
  for (int a = 0; a < n; ++a) {
    const int sl = spread.lines[static_cast<size_t>(
        si.sls_of_point[static_cast<size_t>(a)])];
    std::array<int, 2> others{};
    int k = 0;
    for (int q : duad.line(sl))
      if (q != a) others[static_cast<size_t>(k++)] = q;
    std::sort(others.begin(), others.end());
    for (int b : others)
      for (int i = 0; i < 3; ++i) {
        out.p4_index[{a, b, i}] = static_cast<int>(labels.size());
        out.p4_labels.push_back(P4Label{a, b, static_cast<Z3>(i)});
        labels.push_back("(" + duad.label(a) + "," + duad.label(b) + "," +
                         std::to_string(i) + ")");
      }
  }
  if (labels.size() != 243) throw Fault("build_stheta: point census broken");

  std::vector<std::array<int, 3>> lines;
  std::vector<std::string> tags;
  auto push = [&](std::array<int, 3> ln, const char* tag) {
    std::sort(ln.begin(), ln.end());
    lines.push_back(ln);
    tags.emplace_back(tag);
  };

  for (const auto& ln : duad.lines()) push({ln[0], ln[1], ln[2]}, "L1");
  for (const auto& ln : duad.lines())
    push({ln[0] + n, ln[1] + n, ln[2] + n}, "L2");
  for (const auto& ln : duad.lines())
    push({ln[0] + 2 * n, ln[1] + 2 * n, ln[2] + 2 * n}, "L3");
  for (int p = 0; p < n; ++p) push({p, p + n, p + 2 * n}, "L4");

  auto p4 = [&](int a, int b, int i) { return out.p4_index.at({a, b, i}); };

  for (int sl : spread.lines) {
    const auto& ln = duad.line(sl);
    for (int idx = 0; idx < 3; ++idx) {
      const int a = ln[static_cast<size_t>(idx)];
      const int b = ln[static_cast<size_t>((idx + 1) % 3)];
      const int c = ln[static_cast<size_t>((idx + 2) % 3)];
      for (int i = 0; i < 3; ++i) {
        push({a, p4(a, b, i), p4(a, c, i)}, "L5");
        push({a + n, p4(b, a, i), p4(c, a, i)}, "L6");
        push({a + 2 * n, p4(b, c, i), p4(c, b, i)}, "L7");
      }
    }
  }

  // L8: both cyclic orientations of each spread line, all bijections to Z3.
  for (int sl : spread.lines) {
    const auto& ln = duad.line(sl);
    const std::array<std::array<int, 3>, 2> orients{{
        {ln[0], ln[1], ln[2]},
        {ln[0], ln[2], ln[1]},
    }};
    for (const auto& o : orients) {
      const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                     {0, 2, 1},
                                                     {1, 0, 2},
                                                     {1, 2, 0},
                                                     {2, 0, 1},
                                                     {2, 1, 0}}};
      for (const auto& pm : perms)
        push({p4(o[0], o[1], pm[0]), p4(o[1], o[2], pm[1]),
              p4(o[2], o[0], pm[2])},
             "L8");
    }
  }

  // L9: seeds are (non-spread line {a,b,c}, choice of a, u on a's spread
  // line, i); the partner line {u,v,w} is forced, and each resulting set
  // shows up once per choice of the distinguished point.
  std::set<std::array<int, 3>> l9_seen;
  for (int l = 0; l < duad.line_count(); ++l) {
    if (si.sls_of_line[static_cast<size_t>(l)] >= 0) continue;
    const auto& abc = duad.line(l);
    for (int pos = 0; pos < 3; ++pos) {
      const int a = abc[static_cast<size_t>(pos)];
      const int b = abc[static_cast<size_t>((pos + 1) % 3)];
      const int c = abc[static_cast<size_t>((pos + 2) % 3)];
      const int sa = si.sls_of_point[static_cast<size_t>(a)];
      const int sb = si.sls_of_point[static_cast<size_t>(b)];
      const int sc = si.sls_of_point[static_cast<size_t>(c)];
      for (int u : duad.line(spread.lines[static_cast<size_t>(sa)])) {
        if (u == a) continue;
        // the unique line through u disjoint from {a,b,c} meeting the
        // spread lines of b and c
        int v = -1, w = -1, found = 0;
        for (int m : duad.lines_through(u)) {
          const auto& uvw = duad.line(m);
          bool disjoint = true;
          for (int x : uvw)
            if (x == a || x == b || x == c) disjoint = false;
          if (!disjoint) continue;
          int vv = -1, ww = -1;
          for (int x : uvw) {
            if (x == u) continue;
            if (si.sls_of_point[static_cast<size_t>(x)] == sb) vv = x;
            if (si.sls_of_point[static_cast<size_t>(x)] == sc) ww = x;
          }
          if (vv >= 0 && ww >= 0) {
            ++found;
            v = vv;
            w = ww;
          }
        }
        if (found != 1)
          throw Fault("build_stheta: L9 partner line not unique");
        const Z3 tab = triple.theta(sa, sb);
        const Z3 tac = triple.theta(sa, sc);
        for (int i = 0; i < 3; ++i) {
          std::array<int, 3> ln{p4(a, u, i),
                                p4(b, v, z3_add(static_cast<Z3>(i), tab)),
                                p4(c, w, z3_add(static_cast<Z3>(i), tac))};
          std::sort(ln.begin(), ln.end());
          if (l9_seen.insert(ln).second) {
            lines.push_back(ln);
            tags.emplace_back("L9");
          }
        }
      }
    }
  }

  out.space = fgeom::PartialLinearSpace("Q(5,2)xQ(5,2) via S_theta",
                                        std::move(labels), std::move(lines),
                                        std::move(tags));
  return out;
}

namespace {

// Partition backtracking: cover all points with pairwise disjoint quads.
void find_partitions(const std::vector<std::vector<int>>& quads, int n_points,
                     std::vector<int>& chosen, std::vector<char>& covered,
                     int covered_count,
                     std::vector<std::vector<int>>& partitions) {
  if (covered_count == n_points) {
    partitions.push_back(chosen);
    return;
  }
  int pivot = -1;
  for (int p = 0; p < n_points; ++p)
    if (!covered[static_cast<size_t>(p)]) {
      pivot = p;
      break;
    }
  for (size_t qi = 0; qi < quads.size(); ++qi) {
    const auto& q = quads[qi];
    if (std::find(q.begin(), q.end(), pivot) == q.end()) continue;
    bool free = true;
    for (int p : q)
      if (covered[static_cast<size_t>(p)]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (int p : q) covered[static_cast<size_t>(p)] = 1;
    chosen.push_back(static_cast<int>(qi));
    find_partitions(quads, n_points, chosen, covered,
                    covered_count + static_cast<int>(q.size()), partitions);
    chosen.pop_back();
    for (int p : q) covered[static_cast<size_t>(p)] = 0;
  }
}

}  // namespace

HexagonStructure verify_hexagon_structure(const SThetaGeometry& g) {
  const auto& s = g.space;
  HexagonStructure out;
  out.report.subject = s.name();
  const int n = s.point_count();

  const auto pl = fgeom::verify_partial_linear(s);
  out.report.append(pl, "partial_linear.");

  const auto np = fgeom::verify_near_polygon(s);
  out.report.add("near_polygon", static_cast<std::uint64_t>(n) *
                                     static_cast<std::uint64_t>(s.line_count()),
                 np.near_polygon);
  out.report.add("dense", 0, np.dense);
  out.report.add("diameter_3", 1, np.diameter == 3,
                 std::to_string(np.diameter));
  out.report.add("lines_per_point_9", static_cast<std::uint64_t>(n),
                 np.regular && np.min_lines_per_point == 9);

  // Quad census: every distance-2 pair spans a quad of 9 or 27 points.
  // Pairs inside an already-found quad span that quad, so one closure per
  // quad suffices.
  std::vector<int> quad_of_pair(static_cast<size_t>(n) *
                                    static_cast<size_t>(n),
                                -1);
  std::vector<std::vector<int>> quads;
  std::vector<int> quad_sizes;
  bool sizes_ok = true;
  bool orders_ok = true;
  std::uint64_t d2_pairs = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (s.distance_u8(p, q) != 2) continue;
      ++d2_pairs;
      if (quad_of_pair[static_cast<size_t>(p) * static_cast<size_t>(n) +
                       static_cast<size_t>(q)] >= 0)
        continue;
      const std::array<int, 2> seed{p, q};
      const auto closure = fgeom::convex_closure(s, seed);
      const int qi = static_cast<int>(quads.size());
      if (closure.size() != 9 && closure.size() != 27) sizes_ok = false;
      const auto sub = fgeom::induced_subgeometry(s, closure, "quad");
      const auto sub_np = fgeom::verify_near_polygon(sub.space);
      const std::pair<int, int> want =
          closure.size() == 9 ? std::pair<int, int>(2, 1)
                              : std::pair<int, int>(2, 4);
      if (!sub_np.gq_order || *sub_np.gq_order != want) orders_ok = false;
      for (size_t x = 0; x < closure.size(); ++x)
        for (size_t y = x + 1; y < closure.size(); ++y) {
          if (s.distance_u8(closure[x], closure[y]) != 2) continue;
          quad_of_pair[static_cast<size_t>(closure[x]) *
                           static_cast<size_t>(n) +
                       static_cast<size_t>(closure[y])] = qi;
        }
      quads.push_back(closure);
      quad_sizes.push_back(static_cast<int>(closure.size()));
    }
  out.report.add("quads_have_9_or_27_points", d2_pairs, sizes_ok);
  out.report.add("quads_are_grids_or_q52", static_cast<std::uint64_t>(quads.size()),
                 orders_ok);
  for (int sz : quad_sizes)
    (sz == 27 ? out.big_quad_count : out.grid_quad_count) += 1;
  out.report.add("quad_census", static_cast<std::uint64_t>(quads.size()), true,
                 std::to_string(out.big_quad_count) + " big, " +
                     std::to_string(out.grid_quad_count) + " grids");

  // Two partitions of the point set into big quads.
  std::vector<std::vector<int>> big;
  for (const auto& q : quads)
    if (q.size() == 27) big.push_back(q);
  std::vector<std::vector<int>> partitions;
  {
    std::vector<int> chosen;
    std::vector<char> covered(static_cast<size_t>(n), 0);
    find_partitions(big, n, chosen, covered, 0, partitions);
  }
  bool partition_pair_found = false;
  std::vector<int> t1_idx, t2_idx;
  for (size_t i = 0; i < partitions.size() && !partition_pair_found; ++i)
    for (size_t j = i + 1; j < partitions.size(); ++j) {
      // every quad of one must meet every quad of the other in a line
      bool meets = true;
      for (int qa : partitions[i]) {
        for (int qb : partitions[j]) {
          std::vector<int> inter;
          std::set_intersection(big[static_cast<size_t>(qa)].begin(),
                                big[static_cast<size_t>(qa)].end(),
                                big[static_cast<size_t>(qb)].begin(),
                                big[static_cast<size_t>(qb)].end(),
                                std::back_inserter(inter));
          if (inter.size() != 3 ||
              s.line_on(inter[0], inter[1]) < 0 ||
              !s.line_contains(s.line_on(inter[0], inter[1]), inter[2])) {
            meets = false;
            break;
          }
        }
        if (!meets) break;
      }
      if (meets) {
        partition_pair_found = true;
        t1_idx = partitions[i];
        t2_idx = partitions[j];
        break;
      }
    }
  out.report.add("two_quad_partitions_exist",
                 static_cast<std::uint64_t>(partitions.size()),
                 partition_pair_found,
                 std::to_string(partitions.size()) + " partition(s) of " +
                     std::to_string(big.size()) + " big quads");
  if (!partition_pair_found) return out;

  for (int qi : t1_idx) out.t1.push_back(big[static_cast<size_t>(qi)]);
  for (int qi : t2_idx) out.t2.push_back(big[static_cast<size_t>(qi)]);
  out.report.add("t1_t2_size_9", 2, out.t1.size() == 9 && out.t2.size() == 9);

  // S-tensor: the 81 pairwise intersections, set of lines, forming a spread.
  std::set<int> s_tensor;
  bool inter_lines = true;
  for (const auto& qa : out.t1)
    for (const auto& qb : out.t2) {
      std::vector<int> inter;
      std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                            std::back_inserter(inter));
      if (inter.size() != 3) {
        inter_lines = false;
        continue;
      }
      const int l = s.line_on(inter[0], inter[1]);
      if (l < 0 || !s.line_contains(l, inter[2])) {
        inter_lines = false;
        continue;
      }
      s_tensor.insert(l);
    }
  out.s_tensor.assign(s_tensor.begin(), s_tensor.end());
  out.report.add("t1_meets_t2_in_lines", 81, inter_lines);
  fgeom::Spread sx{out.s_tensor};
  out.report.add("s_tensor_is_spread_of_81_lines", 81,
                 out.s_tensor.size() == 81 && fgeom::is_spread(s, sx));

  // Each quad inherits a spread from the other partition; it must be regular
  // (hence a spread of symmetry).
  bool quad_spreads_regular = true;
  for (int side = 0; side < 2; ++side) {
    const auto& own = side == 0 ? out.t1 : out.t2;
    const auto& other = side == 0 ? out.t2 : out.t1;
    for (const auto& qa : own) {
      const auto sub = fgeom::induced_subgeometry(s, qa, "quad");
      std::vector<int> to_sub(static_cast<size_t>(n), -1);
      for (size_t k = 0; k < sub.parent_points.size(); ++k)
        to_sub[static_cast<size_t>(sub.parent_points[k])] =
            static_cast<int>(k);
      fgeom::Spread induced;
      for (const auto& qb : other) {
        std::vector<int> inter;
        std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                              std::back_inserter(inter));
        const int l =
            sub.space.line_on(to_sub[static_cast<size_t>(inter[0])],
                              to_sub[static_cast<size_t>(inter[1])]);
        induced.lines.push_back(l);
      }
      try {
        if (!fgeom::is_regular_spread(sub.space, induced).all_passed())
          quad_spreads_regular = false;
      } catch (const Fault&) {
        quad_spreads_regular = false;
      }
    }
  }
  out.report.add("induced_quad_spreads_regular", 18, quad_spreads_regular);

  // Every line outside the S-tensor lies in exactly one quad of T1 or T2.
  bool unique_quad = true;
  std::uint64_t scanned = 0;
  for (int l = 0; l < s.line_count(); ++l) {
    if (s_tensor.count(l)) continue;
    ++scanned;
    int hits = 0;
    for (int side = 0; side < 2; ++side)
      for (const auto& qa : (side == 0 ? out.t1 : out.t2)) {
        bool inside = true;
        for (int p : s.line(l))
          if (!std::binary_search(qa.begin(), qa.end(), p)) inside = false;
        if (inside) ++hits;
      }
    if (hits != 1) unique_quad = false;
  }
  out.report.add("other_lines_in_unique_t1t2_quad", scanned, unique_quad);
  return out;
}

std::vector<int> iso_from_equivalence(const SThetaGeometry& g1,
                                      const SThetaGeometry& g2,
                                      const triples::TripleEquivalence& eq) {
  if (!eq.holds(g1.triple, g2.triple))
    throw Fault("iso_from_equivalence: equivalence does not hold");
  const auto& duad = g1.duad;
  const int n = duad.point_count();

  // Lift alpha to an automorphism phi of Q with phi(L) = alpha(L) setwise on
  // spread lines.
  std::vector<int> sls_of_point(static_cast<size_t>(n), -1);
  for (size_t k = 0; k < g1.spread.lines.size(); ++k)
    for (int p : duad.line(g1.spread.lines[k]))
      sls_of_point[static_cast<size_t>(p)] = static_cast<int>(k);
  auto candidates = [&](int p) {
    const int target =
        eq.alpha[static_cast<size_t>(sls_of_point[static_cast<size_t>(p)])];
    std::vector<int> out;
    for (int q :
         duad.line(g1.spread.lines[static_cast<size_t>(target)]))
      out.push_back(q);
    return out;
  };
  const auto phi_opt = fgeom::find_constrained_automorphism(duad, candidates);
  if (!phi_opt)
    throw Fault("iso_from_equivalence: no automorphism of Q lifts alpha");
  const auto& phi = *phi_opt;

  std::vector<int> image(static_cast<size_t>(g1.space.point_count()), -1);
  for (int p = 0; p < n; ++p) {
    image[static_cast<size_t>(p)] = phi[static_cast<size_t>(p)];
    image[static_cast<size_t>(p + n)] = phi[static_cast<size_t>(p)] + n;
    image[static_cast<size_t>(p + 2 * n)] = phi[static_cast<size_t>(p)] + 2 * n;
  }
  for (size_t k = 0; k < g1.p4_labels.size(); ++k) {
    const auto& lbl = g1.p4_labels[k];
    const Z3 fab =
        eq.f[static_cast<size_t>(sls_of_point[static_cast<size_t>(lbl.a)])];
    Z3 shifted = z3_sub(lbl.i, fab);
    if (eq.beta != 1) shifted = z3_neg(shifted);
    image[81 + k] = g2.p4_point(phi[static_cast<size_t>(lbl.a)],
                                phi[static_cast<size_t>(lbl.b)], shifted);
  }

  for (const auto& ln : g1.space.lines()) {
    const int lm = g2.space.line_on(image[static_cast<size_t>(ln[0])],
                                    image[static_cast<size_t>(ln[1])]);
    if (lm < 0 ||
        !g2.space.line_contains(lm, image[static_cast<size_t>(ln[2])]))
      throw Fault("iso_from_equivalence: induced map is not line-preserving");
  }
  return image;
}

}  // namespace hexarep::stheta
