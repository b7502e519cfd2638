#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hexarep {

// One verified statement: the name of the check, how many objects were
// scanned to establish it, and whether it held.
struct CheckResult {
  std::string name;
  std::uint64_t universe = 0;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;

  CheckResult& add(std::string name, std::uint64_t universe, bool pass,
                   std::string detail = {});
  void append(const VerificationReport& other, const std::string& prefix = {});
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Structured evidence emitted by the theorem pipeline; overall verdict is
// pass only when every recorded check passes.
struct Certificate {
  std::string artifact;
  std::string version;
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

}  // namespace hexarep
