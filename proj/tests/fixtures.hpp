#pragma once

// Lazily built shared instances for the test suites. Everything is
// deterministic, so sharing across test cases is safe.

#include "hexarep/fgeom.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/reps.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

namespace fixtures {

inline const hexarep::fgeom::PartialLinearSpace& duad() {
  static const auto s = hexarep::gmodels::build_duad_q52();
  return s;
}

inline const hexarep::fgeom::Spread& spread() {
  static const auto sp = hexarep::gmodels::canonical_spread(duad());
  return sp;
}

inline const hexarep::fgeom::PartialLinearSpace& product() {
  static const auto s = hexarep::gmodels::build_product_L3(duad());
  return s;
}

inline const hexarep::triples::SpreadLinearSpace& sls() {
  static const auto ls = hexarep::triples::spread_linear_space(duad(), spread());
  return ls;
}

inline const std::vector<std::array<hexarep::triples::Z3, 2>>& coords() {
  static const auto c = hexarep::triples::coordinatize_ag23(sls(), 0);
  return c;
}

inline const hexarep::triples::AdmissibleTriple& triple() {
  static const auto t = hexarep::triples::delta_triple(sls(), coords());
  return t;
}

inline const hexarep::stheta::SThetaGeometry& stheta_geometry() {
  static const auto g =
      hexarep::stheta::build_stheta(duad(), spread(), triple());
  return g;
}

inline const hexarep::reps::Rep81& rep81() {
  static const auto r = hexarep::reps::build_rep_81();
  return r;
}

inline const hexarep::reps::DeltaTable& delta() {
  static const auto dt = hexarep::reps::delta_table(duad());
  return dt;
}

inline const hexarep::reps::EpsilonLabeling& epsilon() {
  static const auto e = hexarep::reps::build_epsilon(duad(), spread(), triple());
  return e;
}

inline const hexarep::reps::Representation& rep243() {
  static const auto r = hexarep::reps::build_rep_243(stheta_geometry(), rep81(),
                                                     delta(), epsilon());
  return r;
}

// 3x3 grid: rows {0,1,2},{3,4,5},{6,7,8}, columns {0,3,6},{1,4,7},{2,5,8}.
inline hexarep::fgeom::PartialLinearSpace make_grid() {
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::array<int, 3>> lines;
  for (int r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (int c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
  return hexarep::fgeom::PartialLinearSpace("3x3 grid", std::move(labels),
                                            std::move(lines));
}

}  // namespace fixtures
