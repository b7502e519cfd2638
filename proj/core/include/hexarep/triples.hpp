#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hexarep/fgeom.hpp"

namespace hexarep::triples {

using Z3 = std::uint8_t;

inline Z3 z3_add(Z3 a, Z3 b) { return static_cast<Z3>((a + b) % 3); }
inline Z3 z3_sub(Z3 a, Z3 b) { return static_cast<Z3>((a + 3 - b) % 3); }
inline Z3 z3_neg(Z3 a) { return static_cast<Z3>((3 - a) % 3); }

// The linear space on the nine spread lines: lines are the twelve triples of
// spread lines lying in a common grid. Isomorphic to AG(2,3).
struct SpreadLinearSpace {
  std::vector<int> spread_lines;            // host line indices, size 9
  std::vector<std::array<int, 3>> lines;    // triples of indices 0..8, size 12
};

// Faults when some pair of spread lines has no grid through it (the spread
// is not regular).
SpreadLinearSpace spread_linear_space(const fgeom::PartialLinearSpace& s,
                                      const fgeom::Spread& sp);

// A bijection to Z3 x Z3 sending `origin` to (0,0) and the space's lines
// exactly onto the affine lines. Faults when none exists.
std::vector<std::array<Z3, 2>> coordinatize_ag23(const SpreadLinearSpace& ls,
                                                 int origin);

// Delta[(x1,y1),(x2,y2)] = x1 y2 - x2 y1 in Z3.
Z3 theta_delta(const std::vector<std::array<Z3, 2>>& coords, int l1, int l2);

struct AdmissibleTriple {
  SpreadLinearSpace base;
  std::array<std::array<Z3, 9>, 9> table{};  // theta(L1, L2)

  Z3 theta(int l1, int l2) const {
    return table[static_cast<size_t>(l1)][static_cast<size_t>(l2)];
  }
};

// The triple obtained from a coordinatization via theta_delta.
AdmissibleTriple delta_triple(const SpreadLinearSpace& ls,
                              const std::vector<std::array<Z3, 2>>& coords);

// Zero diagonal, antisymmetry, and (over all 9^3 ordered triples) additivity
// exactly on collinear triples; triples with repeated entries count as
// collinear. Grid-triple additivity is reported separately.
VerificationReport verify_admissible(const AdmissibleTriple& t);

struct TripleEquivalence {
  std::array<int, 9> alpha{};  // point bijection of the base space
  int beta = 1;                // +1 or -1, the Z3 automorphism
  std::array<Z3, 9> f{};

  // theta2(alpha x, alpha y) == beta * (f(x) + theta1(x,y) - f(y))
  bool holds(const AdmissibleTriple& t1, const AdmissibleTriple& t2) const;
};

// Searches all automorphisms of the base space and both Z3 automorphisms,
// propagating f from a fixed base point. Faults when either triple fails
// verify_admissible or the bases differ.
std::optional<TripleEquivalence> equivalence_search(const AdmissibleTriple& t1,
                                                    const AdmissibleTriple& t2);

// All automorphisms of the spread linear space (point bijections preserving
// its line set). For AG(2,3) there are 432.
std::vector<std::array<int, 9>> linear_space_automorphisms(
    const SpreadLinearSpace& ls);

}  // namespace hexarep::triples
