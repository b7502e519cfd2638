// Acceptance suite: runs the full certification pipeline and evaluates each
// acceptance criterion, printing one pass/fail line per criterion.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hexarep/certify.hpp"

namespace {

using hexarep::Certificate;

int failures = 0;

void criterion(int number, const std::string& title, bool pass,
               const std::string& detail = {}) {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number,
              title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

bool check_passes(const Certificate& c, const std::string& name,
                  std::uint64_t universe = 0) {
  const auto* chk = c.find(name);
  if (!chk || !chk->pass) return false;
  return universe == 0 || chk->universe == universe;
}

}  // namespace

int main() {
  hexarep::certify::Options opts;
  opts.jobs = 2;
  const auto run = hexarep::certify::run_theorem_certificate(opts);
  const Certificate& c = run.certificate;

  // 1: the 81-point hexagon has a non-abelian representation in the
  //    extra-special group of order 8192, sign '+'
  {
    const bool pass =
        check_passes(c, "hex81.group_order_8192") &&
        check_passes(c, "hex81.group_sign_plus") &&
        check_passes(c, "hex81.rep.r1_generates_full_group", 81) &&
        check_passes(c, "hex81.rep.r2_line_products", 972) &&
        check_passes(c, "hex81.rep.images_are_involutions", 81) &&
        check_passes(c, "hex81.rep.faithful", 81) &&
        check_passes(c, "hex81.census") && run.hex81_seconds < 10.0;
    criterion(1, "81-point hexagon represented in 2^(1+12)+, order 8192",
              pass,
              "81 points, 162 lines, " + std::to_string(run.hex81_seconds) +
                  " s");
  }

  // 2: same for the 243-point hexagon, order 524288, sign '-'
  {
    const bool pass =
        check_passes(c, "hex243.group_order_524288") &&
        check_passes(c, "hex243.group_sign_minus") &&
        check_passes(c, "hex243.rep.r1_generates_full_group", 243) &&
        check_passes(c, "hex243.rep.r2_line_products", 4374) &&
        check_passes(c, "hex243.rep.images_are_involutions", 243) &&
        check_passes(c, "hex243.rep.faithful", 243) &&
        run.hex243_seconds < 60.0;
    const auto* r1 = c.find("hex243.rep.r1_generates_full_group");
    const bool closure = r1 && r1->detail.find("cross-checked") !=
                                   std::string::npos;
    criterion(2, "243-point hexagon represented in 2^(1+18)-, order 524288",
              pass && closure,
              "729 lines, lambda closure cross-checked, " +
                  std::to_string(run.hex243_seconds) + " s");
  }

  // 3: distance law over all pairs of both hexagons, zero exceptions
  criterion(3, "distance law: commutator nontrivial iff distance 3",
            check_passes(c, "hex81.rep.distance_law", 3240) &&
                check_passes(c, "hex243.rep.distance_law", 29403),
            "3240 and 29403 pairs");

  // 4: structure census
  criterion(
      4, "structure census",
      check_passes(c, "hex81.census") &&
          check_passes(c, "hex81.lines_per_point_6") &&
          check_passes(c, "hex243.points_243") &&
          check_passes(c, "hex243.lines_729") &&
          check_passes(c, "hex243.line_type_census") &&
          check_passes(c, "hex243.structure.lines_per_point_9") &&
          check_passes(c, "hex243.structure.quads_have_9_or_27_points") &&
          check_passes(c, "hex243.structure.quads_are_grids_or_q52") &&
          check_passes(c, "hex243.structure.t1_t2_size_9") &&
          check_passes(c, "hex243.structure.t1_meets_t2_in_lines", 81) &&
          check_passes(c, "hex243.structure.s_tensor_is_spread_of_81_lines"),
      "45/45/45/27/81/81/81/108/216 line types; |T1|=|T2|=9; |S*|=81");

  // 5: the delta-table suite with mutation battery
  criterion(5, "delta table properties (i)-(iv) plus mutations",
            check_passes(c, "lemma52.injective", 27) &&
                check_passes(c, "lemma52.commuting_iff_perp", 351) &&
                check_passes(c, "lemma52.line_products_with_lambda_twist",
                             270) &&
                check_passes(c, "lemma52.generates_full_group", 27) &&
                check_passes(c, "lemma52.mutations_detected", 10),
            "27 points, 351 pairs, 45 lines, order 128, 10 mutations");

  // 6: the theta-additivity suite
  criterion(6, "theta additivity iff collinearity",
            check_passes(c, "lemma32.additivity_iff_collinear", 729) &&
                check_passes(c, "lemma32.grid_triple_additivity", 729) &&
                check_passes(c, "lemma32.antisymmetry", 81) &&
                check_passes(c, "lemma32.zero_diagonal", 9) &&
                check_passes(c, "lemma32.mutations_detected", 10),
            "729 ordered triples, 81 pairs");

  // 7: the epsilon labeling suite
  criterion(7, "epsilon labeling consistent and bijective",
            check_passes(c, "lemma51.consistent_on_cross_spread_edges", 216) &&
                check_passes(c, "lemma51.bijective_per_spread_line", 9) &&
                check_passes(c, "lemma51.collinear_iff_label_shift", 648),
            "216 cross-spread edges, 9 lines, 648 label pairs");

  // 8: the group engine property suite
  {
    bool pass = check_passes(c, "group.signs", 4) &&
                check_passes(c, "group.n6_sign_minus");
    for (const char* g : {"d8", "q8", "d8q8", "q8q8", "n6"})
      pass = pass &&
             check_passes(c, std::string("group.") + g +
                                 ".associativity_exhaustive") &&
             check_passes(c, std::string("group.") + g + ".center_size_2") &&
             check_passes(c,
                          std::string("group.") + g + ".squares_in_center") &&
             check_passes(
                 c, std::string("group.") + g + ".commutators_in_center") &&
             check_passes(c,
                          std::string("group.") + g + ".exponent_divides_4");
    for (const char* g : {"n12", "n18"})
      pass = pass &&
             check_passes(c, std::string("group.") + g +
                                 ".associativity_sampled",
                          10000) &&
             check_passes(c, std::string("group.") + g + ".center_size_2") &&
             check_passes(c,
                          std::string("group.") + g + ".exponent_divides_4");
    criterion(8, "group engine property suite", pass,
              "exhaustive n<=6, sampled 10^4 for n in {12,18}, signs");
  }

  // 9: partial linearity of the 243-point geometry, L9 exercised
  criterion(
      9, "partial linearity with the L9 family exercised",
      check_passes(
          c, "hex243.structure.partial_linear.two_points_on_at_most_one_line",
          29403) &&
          check_passes(c, "hex243.l9_pairwise_at_most_one_common_point",
                       23220),
      "29403 point pairs, 23220 L9 line pairs");

  // and the certificate as a whole must be green
  if (!c.pass()) {
    std::printf("FAIL certificate: %zu checks contain failures\n",
                c.checks.size());
    ++failures;
  } else {
    std::printf("certificate: all %zu checks passed\n", c.checks.size());
  }

  return failures == 0 ? 0 : 1;
}
