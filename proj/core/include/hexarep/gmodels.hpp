#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexarep/fgeom.hpp"

namespace hexarep::gmodels {

// Q(5,2) on the duads of {1..6}: points are the 15 duads {i,j}, the six
// symbols 1..6 and the six symbols 1'..6'; lines are the 15 partitions of
// {1..6} into duads and the 30 sets {i, {i,j}, j'}.
fgeom::PartialLinearSpace build_duad_q52();

// The nine pairwise disjoint lines forming the regular spread of the duad
// model, in their fixed order L1..L9. Faults if a listed line is missing
// from the model (a build bug).
fgeom::Spread canonical_spread(const fgeom::PartialLinearSpace& duad);

struct QuadricModel {
  fgeom::PartialLinearSpace space;
  std::vector<std::uint32_t> coords;  // bit i = coordinate x_{i+1}
  std::string form;
};

// The elliptic quadratic form used throughout: x1x2 + x3x4 + x5^2 + x5x6 + x6^2.
std::uint8_t elliptic_q(std::uint32_t v);
// Its polarization g as row masks: g(u,v) = parity(u & B v) with B symmetric.
const std::array<std::uint32_t, 6>& elliptic_polarization();
std::uint8_t elliptic_g(std::uint32_t u, std::uint32_t v);

// Q(5,2) as the 27 nonzero singular vectors of the elliptic form, lines the
// totally singular projective lines.
QuadricModel build_quadric_q52();

// Collinearity-preserving point bijection mapping lines onto lines, or
// nullopt. Point/line count mismatch yields nullopt.
std::optional<std::vector<int>> find_isomorphism(
    const fgeom::PartialLinearSpace& a, const fgeom::PartialLinearSpace& b);

// Three copies of Q joined point-by-point: points x, x~, x~~; lines are the
// three copies of Q's lines plus the 27 cross lines {x, x~, x~~}.
fgeom::PartialLinearSpace build_product_L3(const fgeom::PartialLinearSpace& q);

}  // namespace hexarep::gmodels
