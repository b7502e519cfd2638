#pragma once

#include <string>
#include <vector>

#include "hexarep/espgroup.hpp"
#include "hexarep/fgeom.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/report.hpp"
#include "hexarep/reps.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

// JSON wire formats. Objects are serialized with sorted keys and 2-space
// indentation so that identical inputs give byte-identical files. All
// parsers throw Fault on malformed content.
namespace hexarep::json_io {

std::string geometry_to_json(const fgeom::PartialLinearSpace& s);
fgeom::PartialLinearSpace geometry_from_json(const std::string& text);

// Geometry JSON plus "coords" (6-bit integers) and "form".
std::string quadric_to_json(const gmodels::QuadricModel& qm);

// Geometry JSON plus "line_tags" and the "p4_labels" table
// [point index, a label, b label, i].
std::string stheta_to_json(const stheta::SThetaGeometry& g);

std::string descriptor_to_json(const espgroup::GroupDescriptor& d);
espgroup::GroupDescriptor descriptor_from_json(const std::string& text);

// {"group": descriptor, "psi": [{"e","v"}...]}; v is a hex string of n bits,
// bit i = generator i.
std::string representation_to_json(const reps::Representation& rep);
struct ParsedRepresentation {
  espgroup::GroupDescriptor desc;
  std::vector<espgroup::GroupElement> psi;
};
ParsedRepresentation representation_from_json(const std::string& text);

// {"spread_lines": 9 host line indices, "coords": 9 pairs, "theta": 9x9}.
std::string triple_to_json(const triples::AdmissibleTriple& t,
                           const std::vector<std::array<triples::Z3, 2>>& coords);

std::string certificate_to_json(const Certificate& c);

std::string epsilon_to_json(const reps::EpsilonLabeling& eps,
                            const fgeom::PartialLinearSpace& duad);
std::string delta_to_json(const reps::DeltaTable& dt,
                          const fgeom::PartialLinearSpace& duad);
std::string distances_to_json(const fgeom::PartialLinearSpace& s);

}  // namespace hexarep::json_io
