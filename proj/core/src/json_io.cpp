#include "hexarep/json_io.hpp"

#include <json.hpp>

namespace hexarep::json_io {

using nlohmann::json;

namespace {

std::string hex_bits(std::uint32_t v, int nbits) {
  const int digits = (nbits + 3) / 4;
  std::string out(static_cast<size_t>(digits), '0');
  for (int d = 0; d < digits; ++d) {
    const int nib = static_cast<int>((v >> (4 * (digits - 1 - d))) & 0xf);
    out[static_cast<size_t>(d)] =
        static_cast<char>(nib < 10 ? '0' + nib : 'a' + nib - 10);
  }
  return out;
}

std::uint32_t bits_hex(const std::string& s) {
  std::uint32_t v = 0;
  for (char c : s) {
    int nib;
    if (c >= '0' && c <= '9') nib = c - '0';
    else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
    else throw Fault("bad hex string: " + s);
    v = (v << 4) | static_cast<std::uint32_t>(nib);
  }
  return v;
}

json geometry_json(const fgeom::PartialLinearSpace& s) {
  json j;
  j["name"] = s.name();
  j["points"] = s.point_labels();
  json lines = json::array();
  for (const auto& ln : s.lines()) lines.push_back({ln[0], ln[1], ln[2]});
  j["lines"] = std::move(lines);
  if (!s.line_tags().empty()) j["line_tags"] = s.line_tags();
  return j;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Fault("malformed JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json element_json(const espgroup::GroupElement& g, int n) {
  return json{{"e", static_cast<int>(g.e)}, {"v", hex_bits(g.v, n)}};
}

espgroup::GroupElement element_from(const json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("v"))
    throw Fault("element JSON needs e and v");
  espgroup::GroupElement g;
  const int e = j.at("e").get<int>();
  if (e != 0 && e != 1) throw Fault("element center bit must be 0 or 1");
  g.e = static_cast<std::uint8_t>(e);
  g.v = bits_hex(j.at("v").get<std::string>());
  return g;
}

json descriptor_json(const espgroup::GroupDescriptor& d) {
  json rows = json::array();
  for (int i = 0; i < d.n(); ++i)
    rows.push_back(hex_bits(d.gram_row(i), d.n()));
  return json{{"n", d.n()},
              {"square_bits", hex_bits(d.square_bits(), d.n())},
              {"gram", std::move(rows)}};
}

espgroup::GroupDescriptor descriptor_from(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("square_bits") ||
      !j.contains("gram"))
    throw Fault("descriptor JSON needs n, square_bits, gram");
  const int n = j.at("n").get<int>();
  std::vector<std::uint32_t> gram;
  for (const auto& row : j.at("gram"))
    gram.push_back(bits_hex(row.get<std::string>()));
  try {
    return espgroup::GroupDescriptor(
        n, bits_hex(j.at("square_bits").get<std::string>()), std::move(gram));
  } catch (const Fault& f) {
    throw Fault(std::string("descriptor JSON invalid: ") + f.what());
  }
}

}  // namespace

std::string geometry_to_json(const fgeom::PartialLinearSpace& s) {
  return dump(geometry_json(s));
}

fgeom::PartialLinearSpace geometry_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("name") || !j.contains("points") ||
      !j.contains("lines"))
    throw Fault("geometry JSON needs name, points, lines");
  std::vector<std::string> points;
  for (const auto& p : j.at("points")) points.push_back(p.get<std::string>());
  std::vector<std::array<int, 3>> lines;
  for (const auto& ln : j.at("lines")) {
    if (!ln.is_array() || ln.size() != 3)
      throw Fault("geometry JSON line is not a 3-element array");
    lines.push_back({ln[0].get<int>(), ln[1].get<int>(), ln[2].get<int>()});
  }
  std::vector<std::string> tags;
  if (j.contains("line_tags"))
    for (const auto& t : j.at("line_tags")) tags.push_back(t.get<std::string>());
  try {
    return fgeom::PartialLinearSpace(j.at("name").get<std::string>(),
                                     std::move(points), std::move(lines),
                                     std::move(tags));
  } catch (const Fault& f) {
    throw Fault(std::string("geometry JSON invalid: ") + f.what());
  }
}

std::string quadric_to_json(const gmodels::QuadricModel& qm) {
  json j = geometry_json(qm.space);
  j["coords"] = qm.coords;
  j["form"] = qm.form;
  return dump(j);
}

std::string stheta_to_json(const stheta::SThetaGeometry& g) {
  json j = geometry_json(g.space);
  json p4 = json::array();
  for (size_t k = 0; k < g.p4_labels.size(); ++k) {
    const auto& lbl = g.p4_labels[k];
    p4.push_back({static_cast<int>(81 + k), g.duad.label(lbl.a),
                  g.duad.label(lbl.b), static_cast<int>(lbl.i)});
  }
  j["p4_labels"] = std::move(p4);
  return dump(j);
}

std::string descriptor_to_json(const espgroup::GroupDescriptor& d) {
  return dump(descriptor_json(d));
}

espgroup::GroupDescriptor descriptor_from_json(const std::string& text) {
  return descriptor_from(parse(text));
}

std::string representation_to_json(const reps::Representation& rep) {
  json j;
  j["group"] = descriptor_json(rep.desc);
  json psi = json::array();
  for (const auto& g : rep.psi) psi.push_back(element_json(g, rep.desc.n()));
  j["psi"] = std::move(psi);
  return dump(j);
}

ParsedRepresentation representation_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("psi"))
    throw Fault("representation JSON needs group and psi");
  ParsedRepresentation out{descriptor_from(j.at("group")), {}};
  for (const auto& e : j.at("psi")) out.psi.push_back(element_from(e));
  return out;
}

std::string triple_to_json(
    const triples::AdmissibleTriple& t,
    const std::vector<std::array<triples::Z3, 2>>& coords) {
  json j;
  j["spread_lines"] = t.base.spread_lines;
  json cj = json::array();
  for (const auto& c : coords)
    cj.push_back({static_cast<int>(c[0]), static_cast<int>(c[1])});
  j["coords"] = std::move(cj);
  json rows = json::array();
  for (int a = 0; a < 9; ++a) {
    json row = json::array();
    for (int b = 0; b < 9; ++b) row.push_back(static_cast<int>(t.theta(a, b)));
    rows.push_back(std::move(row));
  }
  j["theta"] = std::move(rows);
  return dump(j);
}

std::string certificate_to_json(const Certificate& c) {
  json j;
  j["artifact"] = c.artifact;
  j["version"] = c.version;
  json checks = json::array();
  for (const auto& chk : c.checks) {
    json cj{{"name", chk.name},
            {"universe", chk.universe},
            {"pass", chk.pass}};
    if (!chk.detail.empty()) cj["detail"] = chk.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = c.pass() ? "pass" : "fail";
  return dump(j);
}

std::string epsilon_to_json(const reps::EpsilonLabeling& eps,
                            const fgeom::PartialLinearSpace& duad) {
  json j;
  j["points"] = duad.point_labels();
  json vals = json::array();
  for (const auto& v : eps.eps) vals.push_back(static_cast<int>(v));
  j["epsilon"] = std::move(vals);
  return dump(j);
}

std::string delta_to_json(const reps::DeltaTable& dt,
                          const fgeom::PartialLinearSpace& duad) {
  const auto desc = reps::delta_descriptor();
  json j;
  j["group"] = descriptor_json(desc);
  j["points"] = duad.point_labels();
  json vals = json::array();
  for (const auto& g : dt.delta) vals.push_back(element_json(g, desc.n()));
  j["delta"] = std::move(vals);
  return dump(j);
}

std::string distances_to_json(const fgeom::PartialLinearSpace& s) {
  json j;
  j["geometry"] = s.name();
  json rows = json::array();
  for (int p = 0; p < s.point_count(); ++p) {
    json row = json::array();
    for (int q = 0; q < s.point_count(); ++q)
      row.push_back(static_cast<int>(s.distance_u8(p, q)));
    rows.push_back(std::move(row));
  }
  j["distances"] = std::move(rows);
  return dump(j);
}

}  // namespace hexarep::json_io
