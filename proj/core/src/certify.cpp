#include "hexarep/certify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "hexarep/espgroup.hpp"
#include "hexarep/fgeom.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/reps.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

namespace hexarep::certify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void append_report(Certificate& cert, const VerificationReport& rep,
                   const std::string& prefix) {
  for (const auto& c : rep.checks)
    cert.checks.push_back(
        CheckResult{prefix + c.name, c.universe, c.pass, c.detail});
}

}  // namespace

TheoremRun run_theorem_certificate(const Options& opts) {
  TheoremRun run;
  Certificate& cert = run.certificate;
  cert.artifact = kArtifactName;
  cert.version = kArtifactVersion;
  const auto t_start = Clock::now();
  std::mt19937_64 rng(opts.seed);

  // ---- the 81-point hexagon and its representation ----
  const auto t81 = Clock::now();

  const auto duad = gmodels::build_duad_q52();
  append_report(cert, fgeom::verify_partial_linear(duad), "q52.");
  {
    const auto np = fgeom::verify_near_polygon(duad);
    cert.checks.push_back({"q52.census", 1,
                           duad.point_count() == 27 && duad.line_count() == 45,
                           std::to_string(duad.point_count()) + " points, " +
                               std::to_string(duad.line_count()) + " lines"});
    cert.checks.push_back(
        {"q52.gq_order_2_4", 1,
         np.gq_order.has_value() && *np.gq_order == std::make_pair(2, 4), ""});
  }

  const auto spread = gmodels::canonical_spread(duad);
  cert.checks.push_back(
      {"q52.spread_partitions_points", 9, fgeom::is_spread(duad, spread), ""});
  append_report(cert, fgeom::is_regular_spread(duad, spread),
                "q52.spread_regular.");

  const auto quadric = gmodels::build_quadric_q52();
  cert.checks.push_back({"quadric.census", 64,
                         quadric.space.point_count() == 27 &&
                             quadric.space.line_count() == 45,
                         ""});
  {
    bool perp_iff_near = true;
    for (int x = 0; x < 27; ++x)
      for (int y = x + 1; y < 27; ++y) {
        const bool perp =
            gmodels::elliptic_g(quadric.coords[static_cast<size_t>(x)],
                                quadric.coords[static_cast<size_t>(y)]) == 0;
        if (perp != (quadric.space.distance_u8(x, y) <= 1))
          perp_iff_near = false;
      }
    cert.checks.push_back(
        {"quadric.perp_iff_distance_le_1", 351, perp_iff_near, ""});
  }

  const auto rep81 = reps::build_rep_81();
  cert.checks.push_back({"q52.duad_quadric_isomorphic", 1, true, ""});
  {
    const auto& prod = rep81.rep.geometry;
    const auto np = fgeom::verify_near_polygon(prod);
    cert.checks.push_back(
        {"hex81.census", 1,
         prod.point_count() == 81 && prod.line_count() == 162,
         std::to_string(prod.point_count()) + " points, " +
             std::to_string(prod.line_count()) + " lines"});
    cert.checks.push_back({"hex81.near_hexagon", 0,
                           np.near_polygon && np.dense && np.diameter == 3,
                           ""});
    cert.checks.push_back(
        {"hex81.lines_per_point_6", 81,
         np.regular && np.min_lines_per_point == 6, ""});
  }
  {
    // bar map: commutation against the whole of M, exhaustively
    const auto desc12 = rep81.rep.desc;
    bool bar_ok = true;
    std::uint64_t scans = 0;
    for (std::uint32_t m : quadric.coords)
      for (std::uint32_t mp = 0; mp < 64; ++mp) {
        ++scans;
        const espgroup::GroupElement mbar{reps::bar_vector(m) << 6, 0};
        const espgroup::GroupElement me{mp, 0};
        const bool commute = desc12.sym(mbar.v, me.v) == 0;
        if (commute != (gmodels::elliptic_g(m, mp) == 0)) bar_ok = false;
      }
    cert.checks.push_back({"rep81.bar_commutation", scans, bar_ok, ""});

    bool dbl_ok = true;
    std::uint64_t pairs = 0;
    std::array<bool, 64> singular{};
    for (std::uint32_t v = 1; v < 64; ++v)
      singular[v] = gmodels::elliptic_q(v) == 0;
    for (std::uint32_t m1 = 1; m1 < 64; ++m1)
      for (std::uint32_t m2 = 1; m2 < 64; ++m2) {
        if (m1 == m2) continue;
        ++pairs;
        const auto lhs = espgroup::mul(
            desc12, reps::doublebar_element(m1, singular[m1]),
            reps::doublebar_element(m2, singular[m2]));
        const auto rhs = reps::doublebar_element(m1 ^ m2, singular[m1 ^ m2]);
        if (!(lhs == rhs)) dbl_ok = false;
      }
    cert.checks.push_back({"rep81.doublebar_homomorphism", pairs, dbl_ok, ""});
  }
  append_report(cert, reps::verify_representation(rep81.rep, opts.jobs),
                "hex81.rep.");
  cert.checks.push_back({"hex81.group_order_8192", 1,
                         rep81.rep.desc.order() == 8192,
                         std::to_string(rep81.rep.desc.order())});
  cert.checks.push_back({"hex81.group_sign_plus", 1,
                         espgroup::group_sign(rep81.rep.desc) == '+', ""});
  run.hex81_seconds = seconds_since(t81);

  // ---- the spread linear space, theta and the lemma suites ----
  const auto sls = triples::spread_linear_space(duad, spread);
  {
    bool four = true;
    for (int p = 0; p < 9; ++p) {
      int cnt = 0;
      for (const auto& ln : sls.lines)
        if (std::find(ln.begin(), ln.end(), p) != ln.end()) ++cnt;
      if (cnt != 4) four = false;
    }
    cert.checks.push_back({"triple.sls_shape", 36,
                           sls.spread_lines.size() == 9 &&
                               sls.lines.size() == 12 && four,
                           "9 points, 12 lines, 4 lines per point"});
  }
  const auto coords = triples::coordinatize_ag23(sls, 0);
  cert.checks.push_back(
      {"triple.coordinatization", 1, coords[0] == std::array<triples::Z3, 2>{0, 0},
       "origin L1 -> (0,0)"});
  const auto triple = triples::delta_triple(sls, coords);
  {
    const auto va = triples::verify_admissible(triple);
    append_report(cert, va, "lemma32.");
    bool origin_zero = true;
    for (int l = 0; l < 9; ++l)
      if (triple.theta(0, l) != 0) origin_zero = false;
    cert.checks.push_back({"triple.theta_zero_on_origin_line", 9, origin_zero, ""});
  }
  {
    // mutation battery for the admissibility checker
    int detected = 0;
    const int trials = 10;
    for (int t = 0; t < trials; ++t) {
      auto mutated = triple;
      const int i = static_cast<int>(rng() % 9);
      int j = static_cast<int>(rng() % 9);
      const auto delta = static_cast<triples::Z3>(1 + rng() % 2);
      mutated.table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          triples::z3_add(mutated.theta(i, j), delta);
      if (t % 2 == 0 && i != j)  // keep antisymmetry, break additivity
        mutated.table[static_cast<size_t>(j)][static_cast<size_t>(i)] =
            triples::z3_neg(mutated.theta(i, j));
      if (!triples::verify_admissible(mutated).all_passed()) ++detected;
    }
    cert.checks.push_back({"lemma32.mutations_detected",
                           static_cast<std::uint64_t>(trials),
                           detected == trials,
                           std::to_string(detected) + "/" +
                               std::to_string(trials)});
  }

  const auto dt = reps::delta_table(duad);
  append_report(cert, reps::verify_delta(dt, duad, spread), "lemma52.");
  {
    int detected = 0;
    const int trials = 10;
    for (int t = 0; t < trials; ++t) {
      auto mutated = dt;
      const int p = static_cast<int>(rng() % 27);
      espgroup::GroupElement repl{static_cast<std::uint32_t>(rng() % 64),
                                  static_cast<std::uint8_t>(rng() % 2)};
      if (repl == mutated.delta[static_cast<size_t>(p)]) repl.e ^= 1;
      mutated.delta[static_cast<size_t>(p)] = repl;
      if (!reps::verify_delta(mutated, duad, spread).all_passed()) ++detected;
    }
    cert.checks.push_back({"lemma52.mutations_detected",
                           static_cast<std::uint64_t>(trials),
                           detected == trials,
                           std::to_string(detected) + "/" +
                               std::to_string(trials)});
  }

  const auto eps = reps::build_epsilon(duad, spread, triple);
  append_report(cert, reps::verify_epsilon(eps, duad, spread, triple),
                "lemma51.");

  // ---- the group engine on its own ----
  {
    const auto d8d = espgroup::d8();
    const auto q8d = espgroup::q8();
    const auto d8q8 = espgroup::central_product(d8d, q8d);
    const auto q8q8 = espgroup::central_product(q8d, q8d);
    const auto n6 = reps::delta_descriptor();
    append_report(cert, espgroup::verify_descriptor(d8d, opts.seed), "group.d8.");
    append_report(cert, espgroup::verify_descriptor(q8d, opts.seed), "group.q8.");
    append_report(cert, espgroup::verify_descriptor(d8q8, opts.seed),
                  "group.d8q8.");
    append_report(cert, espgroup::verify_descriptor(q8q8, opts.seed),
                  "group.q8q8.");
    append_report(cert, espgroup::verify_descriptor(n6, opts.seed), "group.n6.");
    append_report(cert,
                  espgroup::verify_descriptor(rep81.rep.desc, opts.seed),
                  "group.n12.");
    const auto n18 = espgroup::central_product(rep81.rep.desc, n6);
    append_report(cert, espgroup::verify_descriptor(n18, opts.seed),
                  "group.n18.");
    cert.checks.push_back({"group.signs", 4,
                           espgroup::group_sign(d8d) == '+' &&
                               espgroup::group_sign(q8d) == '-' &&
                               espgroup::group_sign(d8q8) == '-' &&
                               espgroup::group_sign(q8q8) == '+',
                           "d8:+ q8:- d8q8:- q8q8:+"});
    cert.checks.push_back({"group.n6_sign_minus", 1,
                           espgroup::group_sign(n6) == '-', ""});
  }

  // ---- the 243-point hexagon and its representation ----
  const auto t243 = Clock::now();
  const auto g = stheta::build_stheta(duad, spread, triple);
  {
    std::map<std::string, int> census;
    for (const auto& tag : g.space.line_tags()) census[tag] += 1;
    const std::map<std::string, int> want{
        {"L1", 45}, {"L2", 45}, {"L3", 45}, {"L4", 27}, {"L5", 81},
        {"L6", 81}, {"L7", 81}, {"L8", 108}, {"L9", 216}};
    std::string detail;
    for (const auto& [tag, cnt] : census)
      detail += tag + ":" + std::to_string(cnt) + " ";
    cert.checks.push_back({"hex243.points_243", 1,
                           g.space.point_count() == 243,
                           std::to_string(g.space.point_count())});
    cert.checks.push_back({"hex243.lines_729", 1, g.space.line_count() == 729,
                           std::to_string(g.space.line_count())});
    cert.checks.push_back({"hex243.line_type_census", 9, census == want,
                           detail});
  }
  {
    // L9 on its own: no two points on two distinct L9 lines
    std::vector<int> l9;
    for (int l = 0; l < g.space.line_count(); ++l)
      if (g.space.line_tags()[static_cast<size_t>(l)] == "L9") l9.push_back(l);
    bool ok = true;
    std::uint64_t pairs = 0;
    for (size_t a = 0; a < l9.size(); ++a)
      for (size_t b = a + 1; b < l9.size(); ++b) {
        ++pairs;
        int common = 0;
        for (int p : g.space.line(l9[a]))
          for (int q : g.space.line(l9[b]))
            if (p == q) ++common;
        if (common > 1) ok = false;
      }
    cert.checks.push_back(
        {"hex243.l9_pairwise_at_most_one_common_point", pairs, ok, ""});
  }
  const auto structure = stheta::verify_hexagon_structure(g);
  append_report(cert, structure.report, "hex243.structure.");
  {
    // the copies with their L1-L4 lines are the 81-point hexagon
    std::vector<int> ypoints(81);
    for (int p = 0; p < 81; ++p) ypoints[static_cast<size_t>(p)] = p;
    const auto ysub = fgeom::induced_subgeometry(g.space, ypoints, "Y");
    const auto iso = gmodels::find_isomorphism(ysub.space, rep81.rep.geometry);
    cert.checks.push_back({"hex243.y_subgeometry_is_hex81", 1,
                           iso.has_value(), ""});
  }

  const auto rep243 = reps::build_rep_243(g, rep81, dt, eps);
  append_report(cert, reps::verify_representation(rep243, opts.jobs),
                "hex243.rep.");
  cert.checks.push_back({"hex243.group_order_524288", 1,
                         rep243.desc.order() == 524288,
                         std::to_string(rep243.desc.order())});
  cert.checks.push_back({"hex243.group_sign_minus", 1,
                         espgroup::group_sign(rep243.desc) == '-', ""});
  {
    // lambda-correction on every L9 line: the first component's bar and the
    // second component of any other point sit at distance 3 and their phi
    // images anticommute.
    bool ok = true;
    std::uint64_t scans = 0;
    const auto& prod = rep81.rep.geometry;
    for (int l = 0; l < g.space.line_count(); ++l) {
      if (g.space.line_tags()[static_cast<size_t>(l)] != "L9") continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (a == b) continue;
          const auto& pa =
              g.p4_labels[static_cast<size_t>(g.space.line(l)[a] - 81)];
          const auto& pb =
              g.p4_labels[static_cast<size_t>(g.space.line(l)[b] - 81)];
          ++scans;
          const int abar = 27 + pa.a;
          const int v = pb.b;
          if (prod.distance_u8(abar, v) != 3) ok = false;
          if (rep81.rep.desc.sym(rep81.rep.psi[static_cast<size_t>(abar)].v,
                                 rep81.rep.psi[static_cast<size_t>(v)].v) != 1)
            ok = false;
        }
    }
    cert.checks.push_back({"hex243.l9_lambda_correction", scans, ok, ""});
  }
  run.hex243_seconds = seconds_since(t243);
  run.total_seconds = seconds_since(t_start);
  return run;
}

}  // namespace hexarep::certify
