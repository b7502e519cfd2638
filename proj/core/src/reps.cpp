#include "hexarep/reps.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <thread>

namespace hexarep::reps {

using espgroup::GroupDescriptor;
using espgroup::GroupElement;
using triples::Z3;
using triples::z3_add;
using triples::z3_sub;

std::uint32_t bar_vector(std::uint32_t m) {
  const auto& rows = gmodels::elliptic_polarization();
  std::uint32_t out = 0;
  for (int i = 0; i < 6; ++i)
    if (std::popcount(rows[static_cast<size_t>(i)] & m) & 1) out |= 1u << i;
  return out;
}

espgroup::GroupDescriptor rep81_descriptor() {
  std::vector<std::uint32_t> gram(12, 0);
  for (int i = 0; i < 6; ++i) {
    gram[static_cast<size_t>(i)] = 1u << (6 + i);
    gram[static_cast<size_t>(6 + i)] = 1u << i;
  }
  return GroupDescriptor(12, 0, std::move(gram));
}

espgroup::GroupElement doublebar_element(std::uint32_t m,
                                         bool is_quadric_point) {
  if (m == 0) return {0, 0};
  return {m | (bar_vector(m) << 6),
          static_cast<std::uint8_t>(is_quadric_point ? 0 : 1)};
}

Rep81 build_rep_81() {
  auto duad = gmodels::build_duad_q52();
  auto quadric = gmodels::build_quadric_q52();
  auto iso = gmodels::find_isomorphism(duad, quadric.space);
  if (!iso) throw Fault("build_rep_81: duad/quadric isomorphism not found");

  auto geometry = gmodels::build_product_L3(duad);
  const GroupDescriptor desc = rep81_descriptor();
  std::vector<GroupElement> psi(81);
  std::array<std::uint32_t, 27> m{};
  for (int x = 0; x < 27; ++x) {
    m[static_cast<size_t>(x)] =
        quadric.coords[static_cast<size_t>((*iso)[static_cast<size_t>(x)])];
    psi[static_cast<size_t>(x)] = {m[static_cast<size_t>(x)], 0};
    psi[static_cast<size_t>(27 + x)] = {bar_vector(m[static_cast<size_t>(x)])
                                            << 6,
                                        0};
    psi[static_cast<size_t>(54 + x)] =
        doublebar_element(m[static_cast<size_t>(x)], true);
  }
  return Rep81{Representation{desc, std::move(geometry), std::move(psi)},
               std::move(duad), std::move(quadric), std::move(*iso), m};
}

espgroup::GroupDescriptor delta_descriptor() {
  return espgroup::central_product(
      espgroup::central_product(espgroup::d8(), espgroup::d8()),
      espgroup::q8());
}

DeltaTable delta_table(const fgeom::PartialLinearSpace& duad) {
  struct Entry {
    const char* label;
    const char* word;
    int lambda;
  };
  static const Entry table[27] = {
      {"{1,2}", "a", 0},    {"{3,4}", "c", 0},    {"{5,6}", "ac", 0},
      {"{1,4}", "abdi", 0}, {"1", "cdj", 0},      {"4'", "abck", 1},
      {"{2,6}", "abi", 1},  {"2", "acdk", 0},     {"6'", "bcdj", 1},
      {"{1,6}", "b", 0},    {"{2,4}", "bd", 0},   {"{3,5}", "d", 0},
      {"{1,5}", "abci", 0}, {"1'", "cdk", 1},     {"5", "abdj", 0},
      {"{2,3}", "bcdi", 1}, {"2'", "acdj", 1},    {"3", "abk", 0},
      {"{1,3}", "abcd", 1}, {"{2,5}", "bc", 1},   {"{4,6}", "ad", 1},
      {"{3,6}", "acdi", 1}, {"3'", "abj", 1},     {"6", "bcdk", 0},
      {"{4,5}", "cdi", 0},  {"4", "abcj", 0},     {"5'", "abdk", 1},
  };
  DeltaTable out;
  std::array<bool, 27> seen{};
  for (const auto& e : table) {
    const int p = duad.point_index(e.label);
    if (p < 0) throw Fault("delta_table: label missing from the duad model");
    std::uint32_t v = 0;
    for (const char* c = e.word; *c; ++c) {
      switch (*c) {
        case 'a': v |= 1u << 0; break;
        case 'b': v |= 1u << 1; break;
        case 'c': v |= 1u << 2; break;
        case 'd': v |= 1u << 3; break;
        case 'i': v |= 1u << 4; break;
        case 'j': v |= 1u << 5; break;
        // k = ij; the letters of every word appear in generator order, so
        // the word is already a normal form and the bits just accumulate.
        case 'k': v |= (1u << 4) | (1u << 5); break;
        default: throw Fault("delta_table: bad word");
      }
    }
    out.delta[static_cast<size_t>(p)] = {v, static_cast<std::uint8_t>(e.lambda)};
    seen[static_cast<size_t>(p)] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw Fault("delta_table: table does not cover all 27 points");
  return out;
}

VerificationReport verify_delta(const DeltaTable& dt,
                                const fgeom::PartialLinearSpace& duad,
                                const fgeom::Spread& spread) {
  VerificationReport rep;
  rep.subject = "delta table";
  const GroupDescriptor desc = delta_descriptor();

  std::set<std::pair<std::uint32_t, int>> images;
  bool involutions = true;
  for (const auto& g : dt.delta) {
    images.insert({g.v, g.e});
    if (!espgroup::is_involution(desc, g)) involutions = false;
  }
  rep.add("images_are_involutions", 27, involutions);
  rep.add("injective", 27, images.size() == 27);

  bool commute_iff_perp = true;
  for (int x = 0; x < 27; ++x)
    for (int y = x + 1; y < 27; ++y) {
      const bool commute =
          desc.sym(dt.delta[static_cast<size_t>(x)].v,
                   dt.delta[static_cast<size_t>(y)].v) == 0;
      const bool perp = duad.adjacent(x, y);
      if (commute != perp) commute_iff_perp = false;
    }
  rep.add("commuting_iff_perp", 351, commute_iff_perp);

  bool line_products = true;
  for (int l = 0; l < duad.line_count(); ++l) {
    const bool in_spread = std::find(spread.lines.begin(), spread.lines.end(),
                                     l) != spread.lines.end();
    const auto& ln = duad.line(l);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const int x = ln[static_cast<size_t>(a)], y = ln[static_cast<size_t>(b)];
        const int z = fgeom::third_point(duad, l, x, y);
        GroupElement prod = espgroup::mul(desc, dt.delta[static_cast<size_t>(x)],
                                          dt.delta[static_cast<size_t>(y)]);
        if (!in_spread) prod.e ^= 1;
        if (!(prod == dt.delta[static_cast<size_t>(z)])) line_products = false;
      }
  }
  rep.add("line_products_with_lambda_twist", 45 * 6, line_products);

  const auto gen = espgroup::generated_order(
      desc, std::span<const GroupElement>(dt.delta.data(), dt.delta.size()));
  rep.add("generates_full_group", 27,
          gen.order == desc.order() && gen.contains_lambda,
          "order " + std::to_string(gen.order));
  return rep;
}

namespace {

std::vector<int> spread_line_of_points(const fgeom::PartialLinearSpace& duad,
                                       const fgeom::Spread& spread) {
  std::vector<int> out(static_cast<size_t>(duad.point_count()), -1);
  for (size_t k = 0; k < spread.lines.size(); ++k)
    for (int p : duad.line(spread.lines[k]))
      out[static_cast<size_t>(p)] = static_cast<int>(k);
  return out;
}

}  // namespace

EpsilonLabeling build_epsilon(const fgeom::PartialLinearSpace& duad,
                              const fgeom::Spread& spread,
                              const triples::AdmissibleTriple& triple) {
  const auto sls_of = spread_line_of_points(duad, spread);
  EpsilonLabeling out;
  std::array<bool, 27> have{};

  // Base point: lowest-index point of the origin spread line. The triple's
  // coordinatization makes theta(L1, .) identically zero there.
  int x0 = duad.point_count();
  for (int p : duad.line(triple.base.spread_lines[0])) x0 = std::min(x0, p);
  out.eps[static_cast<size_t>(x0)] = 0;
  have[static_cast<size_t>(x0)] = true;

  std::deque<int> queue{x0};
  while (!queue.empty()) {
    const int p = queue.front();
    queue.pop_front();
    for (int q = 0; q < duad.point_count(); ++q) {
      if (!duad.adjacent(p, q)) continue;
      if (sls_of[static_cast<size_t>(p)] == sls_of[static_cast<size_t>(q)])
        continue;
      const Z3 want = z3_add(out.eps[static_cast<size_t>(p)],
                             triple.theta(sls_of[static_cast<size_t>(p)],
                                          sls_of[static_cast<size_t>(q)]));
      if (!have[static_cast<size_t>(q)]) {
        out.eps[static_cast<size_t>(q)] = want;
        have[static_cast<size_t>(q)] = true;
        queue.push_back(q);
      } else if (out.eps[static_cast<size_t>(q)] != want) {
        throw Fault("build_epsilon: inconsistent labeling");
      }
    }
  }
  if (!std::all_of(have.begin(), have.end(), [](bool b) { return b; }))
    throw Fault("build_epsilon: propagation did not reach every point");
  return out;
}

VerificationReport verify_epsilon(const EpsilonLabeling& eps,
                                  const fgeom::PartialLinearSpace& duad,
                                  const fgeom::Spread& spread,
                                  const triples::AdmissibleTriple& triple) {
  VerificationReport rep;
  rep.subject = "epsilon labeling";
  const auto sls_of = spread_line_of_points(duad, spread);

  bool consistent = true;
  std::uint64_t edges = 0;
  for (int p = 0; p < 27; ++p)
    for (int q = 0; q < 27; ++q) {
      if (p == q || !duad.adjacent(p, q)) continue;
      if (sls_of[static_cast<size_t>(p)] == sls_of[static_cast<size_t>(q)])
        continue;
      ++edges;
      if (eps.eps[static_cast<size_t>(q)] !=
          z3_add(eps.eps[static_cast<size_t>(p)],
                 triple.theta(sls_of[static_cast<size_t>(p)],
                              sls_of[static_cast<size_t>(q)])))
        consistent = false;
    }
  rep.add("consistent_on_cross_spread_edges", edges, consistent);

  bool bijective = true;
  for (int l : spread.lines) {
    std::array<int, 3> hit{0, 0, 0};
    for (int p : duad.line(l))
      hit[eps.eps[static_cast<size_t>(p)]] += 1;
    if (hit != std::array<int, 3>{1, 1, 1}) bijective = false;
  }
  rep.add("bijective_per_spread_line", 9, bijective);

  // Full law: for points on distinct spread lines, collinear iff the labels
  // differ by theta.
  bool iff = true;
  std::uint64_t scans = 0;
  for (int l1 = 0; l1 < 9; ++l1)
    for (int l2 = 0; l2 < 9; ++l2) {
      if (l1 == l2) continue;
      for (int p : duad.line(triple.base.spread_lines[static_cast<size_t>(l1)]))
        for (int q :
             duad.line(triple.base.spread_lines[static_cast<size_t>(l2)])) {
          ++scans;
          const bool shift =
              eps.eps[static_cast<size_t>(q)] ==
              z3_add(eps.eps[static_cast<size_t>(p)], triple.theta(l1, l2));
          if (duad.adjacent(p, q) != shift) iff = false;
        }
    }
  rep.add("collinear_iff_label_shift", scans, iff);
  return rep;
}

Representation build_rep_243(const stheta::SThetaGeometry& g,
                             const Rep81& base, const DeltaTable& dt,
                             const EpsilonLabeling& eps) {
  if (g.duad.point_labels() != base.duad.point_labels())
    throw Fault("build_rep_243: geometry and rep81 built from different models");
  const GroupDescriptor desc =
      espgroup::central_product(base.rep.desc, delta_descriptor());
  const auto sls_of = spread_line_of_points(g.duad, g.spread);

  auto embed12 = [](const GroupElement& e) { return e; };  // low 12 bits
  auto embed6 = [](const GroupElement& e) {
    return GroupElement{e.v << 12, e.e};
  };

  std::vector<GroupElement> psi(243);
  for (int p = 0; p < 81; ++p)
    psi[static_cast<size_t>(p)] = embed12(base.rep.psi[static_cast<size_t>(p)]);
  for (size_t k = 0; k < g.p4_labels.size(); ++k) {
    const auto& lbl = g.p4_labels[k];
    // u: the point of the spread line through a,b with eps(u) = i.
    const int sline =
        g.spread.lines[static_cast<size_t>(sls_of[static_cast<size_t>(lbl.a)])];
    int u = -1;
    for (int cand : g.duad.line(sline))
      if (eps.eps[static_cast<size_t>(cand)] == lbl.i) u = cand;
    if (u < 0) throw Fault("build_rep_243: epsilon not bijective on a line");
    const GroupElement phib =
        embed12(base.rep.psi[static_cast<size_t>(lbl.b)]);
    const GroupElement phiabar =
        embed12(base.rep.psi[static_cast<size_t>(27 + lbl.a)]);
    const GroupElement du = embed6(dt.delta[static_cast<size_t>(u)]);
    psi[81 + k] = espgroup::mul(desc, phib, espgroup::mul(desc, phiabar, du));
  }
  return Representation{desc, g.space, std::move(psi)};
}

Representation build_rep_243(const stheta::SThetaGeometry& g) {
  const Rep81 base = build_rep_81();
  const DeltaTable dt = delta_table(g.duad);
  const EpsilonLabeling eps = build_epsilon(g.duad, g.spread, g.triple);
  return build_rep_243(g, base, dt, eps);
}

VerificationReport verify_representation(const Representation& rep, int jobs) {
  VerificationReport out;
  out.subject = rep.geometry.name() + " representation";
  const auto& s = rep.geometry;
  const auto& d = rep.desc;
  const int n = s.point_count();

  bool involutions = true;
  for (const auto& g : rep.psi)
    if (!espgroup::is_involution(d, g)) involutions = false;
  out.add("images_are_involutions", static_cast<std::uint64_t>(n),
          involutions);

  bool faithful = true;
  {
    std::set<std::pair<std::uint32_t, int>> images;
    for (const auto& g : rep.psi) images.insert({g.v, g.e});
    faithful = images.size() == static_cast<size_t>(n);
  }
  out.add("faithful", static_cast<std::uint64_t>(n), faithful);

  bool r2 = true;
  for (int l = 0; l < s.line_count(); ++l) {
    const auto& ln = s.line(l);
    if (rep.psi[static_cast<size_t>(ln[0])] ==
            rep.psi[static_cast<size_t>(ln[1])] ||
        rep.psi[static_cast<size_t>(ln[1])] ==
            rep.psi[static_cast<size_t>(ln[2])] ||
        rep.psi[static_cast<size_t>(ln[0])] ==
            rep.psi[static_cast<size_t>(ln[2])])
      r2 = false;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const int x = ln[static_cast<size_t>(a)],
                  y = ln[static_cast<size_t>(b)];
        const int z = fgeom::third_point(s, l, x, y);
        if (!(espgroup::mul(d, rep.psi[static_cast<size_t>(x)],
                            rep.psi[static_cast<size_t>(y)]) ==
              rep.psi[static_cast<size_t>(z)]))
          r2 = false;
      }
  }
  out.add("r2_line_products",
          static_cast<std::uint64_t>(s.line_count()) * 6, r2);

  const auto gen = espgroup::generated_order(
      d, std::span<const GroupElement>(rep.psi.data(), rep.psi.size()));
  out.add("r1_generates_full_group", static_cast<std::uint64_t>(n),
          gen.order == d.order() && gen.contains_lambda,
          "order " + std::to_string(gen.order) +
              (gen.cross_checked ? ", closure cross-checked" : ""));

  bool nonabelian = false;
  for (int p = 0; p < n && !nonabelian; ++p)
    for (int q = p + 1; q < n; ++q)
      if (d.sym(rep.psi[static_cast<size_t>(p)].v,
                rep.psi[static_cast<size_t>(q)].v)) {
        nonabelian = true;
        break;
      }
  out.add("nonabelian", static_cast<std::uint64_t>(n) *
                            static_cast<std::uint64_t>(n - 1) / 2,
          nonabelian);

  // Distance law, scanned over all unordered pairs (parallelizable).
  const int workers = std::max(1, jobs);
  std::vector<std::uint64_t> bad(static_cast<size_t>(workers), 0);
  auto scan = [&](int w) {
    std::uint64_t local = 0;
    for (int p = w; p < n; p += workers)
      for (int q = p + 1; q < n; ++q) {
        const bool noncommute = d.sym(rep.psi[static_cast<size_t>(p)].v,
                                      rep.psi[static_cast<size_t>(q)].v) != 0;
        const bool far = s.distance_u8(p, q) == 3;
        if (noncommute != far) ++local;
      }
    bad[static_cast<size_t>(w)] = local;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t exceptions = 0;
  for (auto b : bad) exceptions += b;
  out.add("distance_law", static_cast<std::uint64_t>(n) *
                              static_cast<std::uint64_t>(n - 1) / 2,
          exceptions == 0,
          exceptions == 0 ? "no exceptions"
                          : std::to_string(exceptions) + " exception(s)");
  return out;
}

}  // namespace hexarep::reps
