#include "hexarep/triples.hpp"

#include <algorithm>
#include <set>

namespace hexarep::triples {

SpreadLinearSpace spread_linear_space(const fgeom::PartialLinearSpace& s,
                                      const fgeom::Spread& sp) {
  if (!fgeom::is_spread(s, sp))
    throw Fault("spread_linear_space: line set does not partition the points");
  SpreadLinearSpace out;
  out.spread_lines = sp.lines;
  std::set<std::array<int, 3>> triples;
  const int n = static_cast<int>(sp.lines.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto grid = fgeom::grid_through(s, sp.lines[static_cast<size_t>(i)],
                                            sp.lines[static_cast<size_t>(j)]);
      if (!grid)
        throw Fault("spread_linear_space: pair of spread lines has no grid");
      const auto it =
          std::find(sp.lines.begin(), sp.lines.end(), grid->third_line);
      if (it == sp.lines.end())
        throw Fault("spread_linear_space: third grid line not in the spread");
      std::array<int, 3> triple{i, j,
                                static_cast<int>(it - sp.lines.begin())};
      std::sort(triple.begin(), triple.end());
      triples.insert(triple);
    }
  out.lines.assign(triples.begin(), triples.end());
  return out;
}

namespace {

bool ag23_collinear(const std::array<Z3, 2>& a, const std::array<Z3, 2>& b,
                    const std::array<Z3, 2>& c) {
  // (b-a) and (c-a) parallel over Z3
  const Z3 dx1 = z3_sub(b[0], a[0]), dy1 = z3_sub(b[1], a[1]);
  const Z3 dx2 = z3_sub(c[0], a[0]), dy2 = z3_sub(c[1], a[1]);
  return (dx1 * dy2 + 2 * dx2 * dy1) % 3 == 0;  // dx1 dy2 - dx2 dy1
}

struct LineLookup {
  std::array<std::array<int, 9>, 9> line_of{};  // -1 when not collinear

  explicit LineLookup(const SpreadLinearSpace& ls) {
    for (auto& row : line_of) row.fill(-1);
    for (size_t l = 0; l < ls.lines.size(); ++l) {
      const auto& ln = ls.lines[l];
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (a != b)
            line_of[static_cast<size_t>(ln[static_cast<size_t>(a)])]
                   [static_cast<size_t>(ln[static_cast<size_t>(b)])] =
                       static_cast<int>(l);
    }
  }
};

}  // namespace

std::vector<std::array<Z3, 2>> coordinatize_ag23(const SpreadLinearSpace& ls,
                                                 int origin) {
  if (ls.spread_lines.size() != 9 || ls.lines.size() != 12)
    throw Fault("coordinatize_ag23: not a 9-point 12-line space");
  if (origin < 0 || origin >= 9)
    throw Fault("coordinatize_ag23: origin out of range");

  // All nine coordinates, tried in a fixed order; backtracking with the
  // line correspondence as the pruning test.
  std::array<std::array<Z3, 2>, 9> all{};
  for (int i = 0; i < 9; ++i)
    all[static_cast<size_t>(i)] = {static_cast<Z3>(i % 3),
                                   static_cast<Z3>(i / 3)};
  LineLookup look(ls);

  std::vector<std::array<Z3, 2>> assign(9, {0, 0});
  std::vector<char> assigned(9, 0), used(9, 0);

  auto coord_code = [](const std::array<Z3, 2>& c) {
    return c[0] + 3 * c[1];
  };

  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == 9) {
      // Full check: the twelve space lines are exactly the collinear triples.
      for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
          for (int c = b + 1; c < 9; ++c) {
            const bool aff = ag23_collinear(assign[static_cast<size_t>(a)],
                                            assign[static_cast<size_t>(b)],
                                            assign[static_cast<size_t>(c)]);
            const bool inc =
                look.line_of[static_cast<size_t>(a)][static_cast<size_t>(b)] >=
                    0 &&
                look.line_of[static_cast<size_t>(a)][static_cast<size_t>(b)] ==
                    look.line_of[static_cast<size_t>(a)][static_cast<size_t>(c)];
            if (aff != inc) return false;
          }
      return true;
    }
    const int p = depth == 0 ? origin : (depth <= origin ? depth - 1 : depth);
    for (const auto& c : all) {
      if (depth == 0 && (c[0] != 0 || c[1] != 0)) continue;
      if (used[static_cast<size_t>(coord_code(c))]) continue;
      // prune: triples fully assigned must match
      assign[static_cast<size_t>(p)] = c;
      assigned[static_cast<size_t>(p)] = 1;
      bool ok = true;
      for (int a = 0; a < 9 && ok; ++a) {
        if (!assigned[static_cast<size_t>(a)] || a == p) continue;
        for (int b = 0; b < 9 && ok; ++b) {
          if (!assigned[static_cast<size_t>(b)] || b == p || b == a) continue;
          const int l =
              look.line_of[static_cast<size_t>(a)][static_cast<size_t>(b)];
          const bool aff = ag23_collinear(assign[static_cast<size_t>(a)],
                                          assign[static_cast<size_t>(b)],
                                          assign[static_cast<size_t>(p)]);
          const bool inc =
              l >= 0 &&
              l == look.line_of[static_cast<size_t>(a)][static_cast<size_t>(p)];
          if (aff != inc) ok = false;
        }
      }
      if (ok) {
        used[static_cast<size_t>(coord_code(c))] = 1;
        if (rec(depth + 1)) return true;
        used[static_cast<size_t>(coord_code(c))] = 0;
      }
      assigned[static_cast<size_t>(p)] = 0;
    }
    return false;
  };
  if (!rec(0))
    throw Fault("coordinatize_ag23: no coordinatization exists");
  return assign;
}

Z3 theta_delta(const std::vector<std::array<Z3, 2>>& coords, int l1, int l2) {
  const auto& a = coords[static_cast<size_t>(l1)];
  const auto& b = coords[static_cast<size_t>(l2)];
  return static_cast<Z3>((a[0] * b[1] + 2 * a[1] * b[0]) % 3);
}

AdmissibleTriple delta_triple(const SpreadLinearSpace& ls,
                              const std::vector<std::array<Z3, 2>>& coords) {
  AdmissibleTriple out;
  out.base = ls;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      out.table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          theta_delta(coords, i, j);
  return out;
}

VerificationReport verify_admissible(const AdmissibleTriple& t) {
  VerificationReport rep;
  rep.subject = "admissible triple";
  LineLookup look(t.base);

  bool diag = true, antisym = true;
  for (int i = 0; i < 9; ++i) {
    if (t.theta(i, i) != 0) diag = false;
    for (int j = 0; j < 9; ++j)
      if (t.theta(j, i) != z3_neg(t.theta(i, j))) antisym = false;
  }
  rep.add("zero_diagonal", 9, diag);
  rep.add("antisymmetry", 81, antisym);

  bool iff = true;
  bool grid_additive = true;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        const bool additive =
            z3_add(t.theta(a, b), t.theta(b, c)) == t.theta(a, c);
        bool collinear;
        if (a == b || b == c || a == c) {
          collinear = true;  // degenerate triples behave like collinear ones
        } else {
          const int l =
              look.line_of[static_cast<size_t>(a)][static_cast<size_t>(b)];
          collinear =
              l >= 0 &&
              l == look.line_of[static_cast<size_t>(a)][static_cast<size_t>(c)];
        }
        if (additive != collinear) iff = false;
        if (collinear && !additive) grid_additive = false;
      }
  rep.add("additivity_iff_collinear", 729, iff);
  rep.add("grid_triple_additivity", 729, grid_additive);
  return rep;
}

std::vector<std::array<int, 9>> linear_space_automorphisms(
    const SpreadLinearSpace& ls) {
  LineLookup look(ls);
  std::vector<std::array<int, 9>> out;
  std::array<int, 9> image{};
  std::array<char, 9> used{};
  std::function<void(int)> rec = [&](int p) {
    if (p == 9) {
      out.push_back(image);
      return;
    }
    for (int c = 0; c < 9; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      bool ok = true;
      for (int a = 0; a < 9 && ok; ++a) {
        if (a >= p) continue;
        for (int b = 0; b < 9 && ok; ++b) {
          if (b >= p || b == a) continue;
          const int l =
              look.line_of[static_cast<size_t>(a)][static_cast<size_t>(b)];
          const bool col =
              l >= 0 &&
              l == look.line_of[static_cast<size_t>(a)][static_cast<size_t>(p)];
          const int lm = look.line_of[static_cast<size_t>(
              image[static_cast<size_t>(a)])][static_cast<size_t>(
              image[static_cast<size_t>(b)])];
          const bool colm =
              lm >= 0 && lm == look.line_of[static_cast<size_t>(
                                   image[static_cast<size_t>(a)])][
                                   static_cast<size_t>(c)];
          if (col != colm) ok = false;
        }
      }
      if (!ok) continue;
      image[static_cast<size_t>(p)] = c;
      used[static_cast<size_t>(c)] = 1;
      rec(p + 1);
      used[static_cast<size_t>(c)] = 0;
    }
  };
  rec(0);
  return out;
}

bool TripleEquivalence::holds(const AdmissibleTriple& t1,
                              const AdmissibleTriple& t2) const {
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) {
      const Z3 inner = z3_sub(z3_add(f[static_cast<size_t>(x)], t1.theta(x, y)),
                              f[static_cast<size_t>(y)]);
      const Z3 mapped = beta == 1 ? inner : z3_neg(inner);
      if (t2.theta(alpha[static_cast<size_t>(x)],
                   alpha[static_cast<size_t>(y)]) != mapped)
        return false;
    }
  return true;
}

std::optional<TripleEquivalence> equivalence_search(
    const AdmissibleTriple& t1, const AdmissibleTriple& t2) {
  if (t1.base.spread_lines != t2.base.spread_lines ||
      t1.base.lines != t2.base.lines)
    throw Fault("equivalence_search: triples live on different base spaces");
  if (!verify_admissible(t1).all_passed() ||
      !verify_admissible(t2).all_passed())
    throw Fault("equivalence_search: input triple is not admissible");

  const auto autos = linear_space_automorphisms(t1.base);
  for (const auto& alpha : autos) {
    for (int beta : {1, -1}) {
      TripleEquivalence eq;
      eq.alpha = alpha;
      eq.beta = beta;
      // Propagate f from point 0 with f(0) = 0. Pinning x = 0 in the
      // defining identity and using beta^2 = id gives
      //   f(y) = theta1(0,y) - beta * theta2(alpha 0, alpha y).
      eq.f[0] = 0;
      for (int y = 1; y < 9; ++y) {
        const Z3 t2v = t2.theta(alpha[0], alpha[static_cast<size_t>(y)]);
        const Z3 pulled = beta == 1 ? t2v : z3_neg(t2v);
        eq.f[static_cast<size_t>(y)] = z3_sub(t1.theta(0, y), pulled);
      }
      if (eq.holds(t1, t2)) return eq;
    }
  }
  return std::nullopt;
}

}  // namespace hexarep::triples
