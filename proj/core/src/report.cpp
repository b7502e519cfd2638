#include "hexarep/report.hpp"

#include <algorithm>
#include <utility>

namespace hexarep {

CheckResult& VerificationReport::add(std::string name, std::uint64_t universe,
                                     bool pass, std::string detail) {
  checks.push_back(
      CheckResult{std::move(name), universe, pass, std::move(detail)});
  return checks.back();
}

void VerificationReport::append(const VerificationReport& other,
                                const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back(CheckResult{prefix.empty() ? c.name : prefix + c.name,
                                 c.universe, c.pass, c.detail});
  }
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Certificate::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace hexarep
