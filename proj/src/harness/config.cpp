#include "gdnlslab/harness/config.hpp"

#include <fstream>
#include <sstream>

#include "gdnlslab/random_fields.hpp"

namespace gdnls::harness {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for '" + key + "': " + v);
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  const int i = static_cast<int>(d);
  if (i != d) throw ConfigError("config: expected integer for '" + key + "', got " + v);
  return i;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ConfigError("config: bad boolean for '" + key + "': " + v);
}

cplx parse_mu(const std::string& v) {
  if (v == "+1" || v == "1") return {1, 0};
  if (v == "-1") return {-1, 0};
  if (v == "+i" || v == "i") return {0, 1};
  if (v == "-i") return {0, -1};
  throw ConfigError("config: equation.mu must be one of auto, +1, -1, +i, -i");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::map<std::string, std::string> kv;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key = value, got: " + line);
    const std::string key = (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
    kv[key] = trim(line.substr(eq + 1));
  }
  cfg.raw = kv;

  bool m_auto = true, k_auto = true;
  for (const auto& [key, v] : kv) {
    if (key == "experiment.name") cfg.experiment = v;
    else if (key == "grid.L") cfg.L = to_double(key, v);
    else if (key == "grid.N") cfg.N = to_int(key, v);
    else if (key == "time.T") cfg.T = to_double(key, v);
    else if (key == "time.dt") cfg.dt = to_double(key, v);
    else if (key == "stepper.kind") {
      if (v == "strang") cfg.stepper = Stepper::strang;
      else if (v == "ifrk4") cfg.stepper = Stepper::ifrk4;
      else throw ConfigError("config: stepper.kind must be strang or ifrk4");
    } else if (key == "equation.mu") {
      if (v == "auto") cfg.mu_auto = true;
      else { cfg.mu_auto = false; cfg.eq.mu = parse_mu(v); }
    } else if (key == "equation.alpha") cfg.eq.alpha = to_double(key, v);
    else if (key == "equation.form") {
      if (v == "gdnls") cfg.eq.form = NonlinearForm::gdnls;
      else if (v == "divergence") cfg.eq.form = NonlinearForm::divergence;
      else throw ConfigError("config: equation.form must be gdnls or divergence");
    } else if (key == "equation.epsilon") cfg.eq.epsilon = to_double(key, v);
    else if (key == "equation.dealias") cfg.eq.dealias = to_bool(key, v);
    else if (key == "class.m") { if (v != "auto") { cfg.cls.m = to_int(key, v); m_auto = false; } }
    else if (key == "class.M") cfg.cls.M = to_int(key, v);
    else if (key == "class.k") { if (v != "auto") { cfg.cls.k = to_int(key, v); k_auto = false; } }
    else if (key == "class.lambda") {
      if (v != "auto") { cfg.cls.lambda = to_double(key, v); cfg.lambda_override = true; }
    } else if (key == "data.kind") {
      if (v == "solitary") cfg.data = DataKind::solitary;
      else if (v == "decay") cfg.data = DataKind::decay;
      else if (v == "file") cfg.data = DataKind::file;
      else throw ConfigError("config: data.kind must be solitary, decay or file");
    } else if (key == "data.omega") cfg.omega = to_double(key, v);
    else if (key == "data.c") cfg.c = to_double(key, v);
    else if (key == "data.c0") cfg.c0 = cplx(to_double(key, v), 0.0);
    else if (key == "data.m") cfg.decay_m = to_int(key, v);
    else if (key == "data.periodized") cfg.decay_periodized = to_bool(key, v);
    else if (key == "data.path") cfg.data_path = v;
    else if (key == "run.seed") cfg.seed = static_cast<std::uint64_t>(to_double(key, v));
    else if (key == "run.out") cfg.out_dir = v;
    else if (key == "run.workers") cfg.workers = to_int(key, v);
    else if (key == "sweep.omega") for (auto& t : split(v, ',')) cfg.sweep_omega.push_back(to_double(key, t));
    else if (key == "sweep.c") for (auto& t : split(v, ',')) cfg.sweep_c.push_back(to_double(key, t));
    else if (key == "sweep.alpha") for (auto& t : split(v, ',')) cfg.sweep_alpha.push_back(to_double(key, t));
    else if (key == "sweep.T") for (auto& t : split(v, ',')) cfg.sweep_T.push_back(to_double(key, t));
    else if (key == "sweep.N") for (auto& t : split(v, ',')) cfg.sweep_N.push_back(to_int(key, t));
    else throw ConfigError("config: unknown key '" + key + "'");
  }

  // class exponents follow alpha unless pinned explicitly
  cfg.cls.alpha = cfg.eq.alpha;
  if (m_auto) cfg.cls.m = ClassParams::default_m(cfg.eq.alpha);
  if (k_auto) cfg.cls.k = cfg.cls.m + cfg.cls.M + 1;
  cfg.cls.s = cfg.cls.k + 0.5;
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Field make_data(const RunConfig& cfg, GridPtr grid) {
  switch (cfg.data) {
    case DataKind::solitary: {
      WaveParams p{cfg.omega, cfg.c, cfg.eq.alpha, Branch::generic};
      if (cfg.omega == 0.25 * cfg.c * cfg.c) p.branch = Branch::degenerate;
      return solitary_wave(p, std::move(grid), 0.0);
    }
    case DataKind::decay:
      return cfg.decay_periodized
                 ? decay_profile_periodized(cfg.c0, cfg.decay_m, std::move(grid))
                 : decay_profile(cfg.c0, cfg.decay_m, std::move(grid));
    case DataKind::file: {
      std::ifstream in(cfg.data_path);
      if (!in) throw ConfigError("data.path: cannot open " + cfg.data_path);
      Field f(grid);
      for (int i = 0; i < f.size(); ++i) {
        double re, im;
        if (!(in >> re >> im)) throw ConfigError("data.path: need N lines of 're im'");
        f.v[i] = cplx(re, im);
      }
      return f;
    }
  }
  throw ConfigError("make_data: unreachable data kind");
}

}  // namespace gdnls::harness
