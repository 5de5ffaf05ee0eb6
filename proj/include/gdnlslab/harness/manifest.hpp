#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdnlslab/field.hpp"

namespace gdnls::harness {

inline constexpr const char* kCodeVersion = "gdnlslab 1.0.0";

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

// Structured record of a run: config echo, the mu* determination, the
// derived class quantities, per-check pass/fail and timing.  Written as
// a preliminary manifest before the run and finalized afterwards.
struct RunManifest {
  std::map<std::string, std::string> config_echo;
  std::string code_version = kCodeVersion;
  std::string experiment;
  bool mu_star_known = false;
  cplx mu_star{};
  std::map<std::string, double> derived;  // m, k, s, lambda, nu, ...
  std::vector<Check> checks;
  double wall_clock_seconds = 0.0;
  std::string status = "incomplete";

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void write(const std::string& path) const;
};

}  // namespace gdnls::harness
