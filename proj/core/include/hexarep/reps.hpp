#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexarep/espgroup.hpp"
#include "hexarep/fgeom.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

namespace hexarep::reps {

// A group plus a total map from points to involutions.
struct Representation {
  espgroup::GroupDescriptor desc;
  fgeom::PartialLinearSpace geometry;
  std::vector<espgroup::GroupElement> psi;
};

// The bar image of a coordinate vector: B m for the fixed elliptic
// polarization. The corresponding element of the second block commutes with
// exactly the first-block elements orthogonal to m.
std::uint32_t bar_vector(std::uint32_t m);

// n = 12 descriptor realizing M (first six generators) and M-bar (last six):
// square bits zero, cross pairing the identity matrix.
espgroup::GroupDescriptor rep81_descriptor();

// m m-bar, with the center bit recording the quadric-membership case split:
// 0 for m = 0 or m singular, 1 otherwise.
espgroup::GroupElement doublebar_element(std::uint32_t m,
                                         bool is_quadric_point);

struct Rep81 {
  Representation rep;
  fgeom::PartialLinearSpace duad;
  gmodels::QuadricModel quadric;
  std::vector<int> duad_to_quadric;
  std::array<std::uint32_t, 27> m{};  // duad point -> quadric vector
};

// The representation of Q(5,2) x L3 in 2^{1+12}_+: tau on the first copy,
// bar-tau on the second, double-bar-tau on the third. Faults if the
// duad/quadric isomorphism search fails.
Rep81 build_rep_81();

// n = 6 descriptor <a,b> o <c,d> o Q8 used by the delta table.
espgroup::GroupDescriptor delta_descriptor();

struct DeltaTable {
  std::array<espgroup::GroupElement, 27> delta{};
};

// The explicit 27-point table, transcribed onto the duad labels with
// generators a,b,c,d,i,j = 0..5 and k the product of generators 4 and 5.
DeltaTable delta_table(const fgeom::PartialLinearSpace& duad);

// (i) injectivity, (ii) commuting iff perp over the 351 pairs, (iii) the
// line product law with the lambda twist off the spread, (iv) generation of
// the full 128-element group.
VerificationReport verify_delta(const DeltaTable& dt,
                                const fgeom::PartialLinearSpace& duad,
                                const fgeom::Spread& spread);

struct EpsilonLabeling {
  std::array<triples::Z3, 27> eps{};
};

// Z3 labels on the points of Q propagated from a fixed base point of the
// origin spread line via eps(a2) = eps(a1) + theta(L1, L2) on cross-spread
// collinear pairs. Faults on an inconsistent propagation.
EpsilonLabeling build_epsilon(const fgeom::PartialLinearSpace& duad,
                              const fgeom::Spread& spread,
                              const triples::AdmissibleTriple& triple);

// Consistency over every cross-spread collinear pair, bijectivity on each
// spread line, and the full collinear-iff-shift law over 9*8*9 pairs.
VerificationReport verify_epsilon(const EpsilonLabeling& eps,
                                  const fgeom::PartialLinearSpace& duad,
                                  const fgeom::Spread& spread,
                                  const triples::AdmissibleTriple& triple);

// The representation of the 243-point hexagon in 2^{1+18}_-: the rep81
// images on the three copies, and phi(b) phi(a-bar) delta(u) on the
// triple points, u the spread-line point with eps(u) = i.
Representation build_rep_243(const stheta::SThetaGeometry& g,
                             const Rep81& base, const DeltaTable& dt,
                             const EpsilonLabeling& eps);
Representation build_rep_243(const stheta::SThetaGeometry& g);

// Involutions, (R2) on every ordered pair of every line, (R1) via
// generated_order, injectivity, non-abelianness, and the distance law
// (commutator nontrivial iff distance 3) over all point pairs.
VerificationReport verify_representation(const Representation& rep,
                                         int jobs = 1);

}  // namespace hexarep::reps
