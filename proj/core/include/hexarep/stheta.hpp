#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hexarep/fgeom.hpp"
#include "hexarep/triples.hpp"

namespace hexarep::stheta {

struct P4Label {
  int a = -1;  // duad point indices
  int b = -1;
  triples::Z3 i = 0;
};

// The 243-point geometry built from (Q(5,2), S, theta). Points 0..26 are the
// duad model, 27..53 its bar copy, 54..80 the double-bar copy, 81..242 the
// triples (a,b,i) over ordered collinear spread pairs. Lines carry tags
// L1..L9.
struct SThetaGeometry {
  fgeom::PartialLinearSpace space;
  fgeom::PartialLinearSpace duad;
  fgeom::Spread spread;
  triples::AdmissibleTriple triple;
  std::vector<P4Label> p4_labels;  // index by point-81
  std::map<std::tuple<int, int, int>, int> p4_index;

  int p4_point(int a, int b, triples::Z3 i) const {
    return p4_index.at({a, b, static_cast<int>(i)});
  }
};

// Emits the nine line families literally. Faults if the partner line of an
// L9 seed is not unique (a model bug).
SThetaGeometry build_stheta(const fgeom::PartialLinearSpace& duad,
                            const fgeom::Spread& spread,
                            const triples::AdmissibleTriple& triple);

struct HexagonStructure {
  VerificationReport report;
  std::vector<std::vector<int>> t1;  // 9 quads, point sets
  std::vector<std::vector<int>> t2;
  std::vector<int> s_tensor;  // 81 line indices
  int grid_quad_count = 0;
  int big_quad_count = 0;
};

// Near-hexagon axioms, the quad census, the two quad partitions T1/T2, the
// spread S-tensor of their pairwise intersections, regularity of the induced
// quad spreads, and containment of every other line in a unique T1/T2 quad.
HexagonStructure verify_hexagon_structure(const SThetaGeometry& g);

// The point bijection S_theta(t1) -> S_theta(t2) induced by an equivalence
// of admissible triples, lifted through an automorphism phi of Q matching
// alpha on the spread. Faults when no lift exists or the map fails to
// preserve lines.
std::vector<int> iso_from_equivalence(const SThetaGeometry& g1,
                                      const SThetaGeometry& g2,
                                      const triples::TripleEquivalence& eq);

}  // namespace hexarep::stheta
