#include "gdnlslab/harness/manifest.hpp"

#include <json.hpp>

#include <fstream>

namespace gdnls::harness {

void RunManifest::write(const std::string& path) const {
  nlohmann::ordered_json j;
  j["code_version"] = code_version;
  j["experiment"] = experiment;
  j["status"] = status;
  j["config"] = config_echo;
  if (mu_star_known) j["mu_star"] = {{"re", mu_star.real()}, {"im", mu_star.imag()}};
  j["derived"] = derived;
  auto& checks_j = j["checks"];
  checks_j = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    checks_j.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value},
                        {"threshold", c.threshold}});
  j["wall_clock_seconds"] = wall_clock_seconds;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace gdnls::harness
