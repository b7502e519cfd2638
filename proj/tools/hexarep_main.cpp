// Command-line frontend: build the geometries, run verification suites,
// export tables and write the theorem certificate.
//
// Exit codes: 0 pass, 1 verification failure, 2 construction/parse fault,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hexarep/certify.hpp"
#include "hexarep/espgroup.hpp"
#include "hexarep/fgeom.hpp"
#include "hexarep/gmodels.hpp"
#include "hexarep/json_io.hpp"
#include "hexarep/reps.hpp"
#include "hexarep/stheta.hpp"
#include "hexarep/triples.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitFault = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HEXAREP_SEED"))
    return std::strtoull(env, nullptr, 10);
  return hexarep::certify::kDefaultSeed;
}

void print_report(const hexarep::VerificationReport& rep, bool as_json) {
  if (as_json) {
    hexarep::Certificate c{"hexarep", hexarep::certify::kArtifactVersion,
                           rep.checks};
    std::cout << hexarep::json_io::certificate_to_json(c);
    return;
  }
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name << " [" << c.universe
              << "]" << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
}

hexarep::stheta::SThetaGeometry build_stheta_canonical() {
  const auto duad = hexarep::gmodels::build_duad_q52();
  const auto spread = hexarep::gmodels::canonical_spread(duad);
  const auto sls = hexarep::triples::spread_linear_space(duad, spread);
  const auto coords = hexarep::triples::coordinatize_ag23(sls, 0);
  const auto triple = hexarep::triples::delta_triple(sls, coords);
  return hexarep::stheta::build_stheta(duad, spread, triple);
}

int cmd_build(const std::string& target, const std::string& out_path) {
  std::string payload;
  if (target == "q52-duad") {
    payload = hexarep::json_io::geometry_to_json(hexarep::gmodels::build_duad_q52());
  } else if (target == "q52-quadric") {
    payload = hexarep::json_io::quadric_to_json(hexarep::gmodels::build_quadric_q52());
  } else if (target == "q52xL3") {
    payload = hexarep::json_io::geometry_to_json(
        hexarep::gmodels::build_product_L3(hexarep::gmodels::build_duad_q52()));
  } else if (target == "stheta") {
    payload = hexarep::json_io::stheta_to_json(build_stheta_canonical());
  } else {
    throw hexarep::Fault("unknown build target: " + target);
  }
  write_file(out_path, payload);
  std::cout << "wrote " << out_path << "\n";
  return kExitPass;
}

int cmd_verify_geometry(const std::string& path, bool as_json) {
  const auto space = hexarep::json_io::geometry_from_json(read_file(path));
  auto rep = hexarep::fgeom::verify_partial_linear(space);
  if (space.connected()) {
    const auto np = hexarep::fgeom::verify_near_polygon(space);
    rep.append(np.report, "near_polygon.");
    rep.add("diameter", 1, true, std::to_string(np.diameter));
  } else {
    rep.add("connected", 1, false, "collinearity graph is disconnected");
  }
  print_report(rep, as_json);
  return rep.all_passed() ? kExitPass : kExitVerifyFail;
}

int cmd_verify_representation(const std::string& geo_path,
                              const std::string& rep_path, bool as_json,
                              int jobs) {
  const auto space = hexarep::json_io::geometry_from_json(read_file(geo_path));
  auto parsed = hexarep::json_io::representation_from_json(read_file(rep_path));
  if (parsed.psi.size() != static_cast<size_t>(space.point_count()))
    throw hexarep::Fault("psi size does not match the geometry point count");
  hexarep::reps::Representation rep{std::move(parsed.desc), space,
                                    std::move(parsed.psi)};
  const auto report = hexarep::reps::verify_representation(rep, jobs);
  print_report(report, as_json);
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.pass) {
        std::cout << "failing check: " << c.name << "\n";
        break;
      }
    return kExitVerifyFail;
  }
  return kExitPass;
}

int cmd_verify_theorem(const std::optional<std::string>& out_path,
                       std::uint64_t seed, int jobs, bool as_json) {
  hexarep::certify::Options opts;
  opts.seed = seed;
  opts.jobs = jobs;
  const auto run = hexarep::certify::run_theorem_certificate(opts);
  const auto& cert = run.certificate;
  if (as_json) {
    std::cout << hexarep::json_io::certificate_to_json(cert);
  } else {
    int passed = 0;
    for (const auto& c : cert.checks) {
      if (!c.pass)
        std::cout << "  FAIL " << c.name << " [" << c.universe << "]"
                  << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
      else
        ++passed;
    }
    std::cout << passed << "/" << cert.checks.size() << " checks passed\n";
    std::cout << "81-point hexagon:  " << run.hex81_seconds << " s\n";
    std::cout << "243-point hexagon: " << run.hex243_seconds << " s\n";
    std::cout << "verdict: " << (cert.pass() ? "pass" : "fail") << "\n";
  }
  if (out_path)
    write_file(*out_path, hexarep::json_io::certificate_to_json(cert));
  return cert.pass() ? kExitPass : kExitVerifyFail;
}

int cmd_export(const std::string& what, const std::string& out_path,
               const std::string& target) {
  const auto duad = hexarep::gmodels::build_duad_q52();
  const auto spread = hexarep::gmodels::canonical_spread(duad);
  std::string payload;
  if (what == "theta") {
    const auto sls = hexarep::triples::spread_linear_space(duad, spread);
    const auto coords = hexarep::triples::coordinatize_ag23(sls, 0);
    const auto triple = hexarep::triples::delta_triple(sls, coords);
    payload = hexarep::json_io::triple_to_json(triple, coords);
  } else if (what == "epsilon") {
    const auto sls = hexarep::triples::spread_linear_space(duad, spread);
    const auto coords = hexarep::triples::coordinatize_ag23(sls, 0);
    const auto triple = hexarep::triples::delta_triple(sls, coords);
    const auto eps = hexarep::reps::build_epsilon(duad, spread, triple);
    payload = hexarep::json_io::epsilon_to_json(eps, duad);
  } else if (what == "delta") {
    payload = hexarep::json_io::delta_to_json(hexarep::reps::delta_table(duad),
                                              duad);
  } else if (what == "distances") {
    if (target == "q52-duad") {
      payload = hexarep::json_io::distances_to_json(duad);
    } else if (target == "q52xL3") {
      payload = hexarep::json_io::distances_to_json(
          hexarep::gmodels::build_product_L3(duad));
    } else if (target == "stheta") {
      payload =
          hexarep::json_io::distances_to_json(build_stheta_canonical().space);
    } else {
      throw hexarep::Fault("unknown distances target: " + target);
    }
  } else {
    throw hexarep::Fault("unknown export table: " + what);
  }
  write_file(out_path, payload);
  std::cout << "wrote " << out_path << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"near-hexagon representation verification toolkit"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  int jobs = 1;
  std::string format = "text";
  app.add_option("--seed", seed_flag,
                 "seed for sampled checks (env HEXAREP_SEED)");
  app.add_option("--jobs", jobs, "worker threads for verification scans");
  app.add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* build = app.add_subcommand("build", "construct a geometry, write JSON");
  std::string build_target, build_out;
  build->add_option("target", build_target, "what to build")
      ->required()
      ->check(CLI::IsMember({"q52-duad", "q52-quadric", "q52xL3", "stheta"}));
  build->add_option("--out", build_out, "output path")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_kind;
  std::vector<std::string> verify_inputs;
  std::optional<std::string> verify_out;
  verify->add_option("kind", verify_kind, "geometry|representation|theorem")
      ->required()
      ->check(CLI::IsMember({"geometry", "representation", "theorem"}));
  verify->add_option("inputs", verify_inputs, "input files");
  verify->add_option("--out", verify_out, "certificate output path");

  auto* exp = app.add_subcommand("export", "write a named table as JSON");
  std::string export_what, export_out, export_target = "q52xL3";
  exp->add_option("what", export_what, "theta|epsilon|delta|distances")
      ->required()
      ->check(CLI::IsMember({"theta", "epsilon", "delta", "distances"}));
  exp->add_option("--out", export_out, "output path")->required();
  exp->add_option("--target", export_target,
                  "geometry for distance export")
      ->check(CLI::IsMember({"q52-duad", "q52xL3", "stheta"}));

  CLI11_PARSE(app, argc, argv);
  const bool as_json = format == "json";

  try {
    if (build->parsed()) return cmd_build(build_target, build_out);
    if (verify->parsed()) {
      if (verify_kind == "geometry") {
        if (verify_inputs.size() != 1)
          throw hexarep::Fault("verify geometry expects one input file");
        return cmd_verify_geometry(verify_inputs[0], as_json);
      }
      if (verify_kind == "representation") {
        if (verify_inputs.size() != 2)
          throw hexarep::Fault(
              "verify representation expects GEOMETRY.json REP.json");
        return cmd_verify_representation(verify_inputs[0], verify_inputs[1],
                                         as_json, jobs);
      }
      return cmd_verify_theorem(verify_out, resolve_seed(seed_flag), jobs,
                                as_json);
    }
    if (exp->parsed()) return cmd_export(export_what, export_out, export_target);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hexarep::Fault& e) {
    std::cerr << "fault: " << e.what() << "\n";
    return kExitFault;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFault;
  }
  return kExitFault;
}
