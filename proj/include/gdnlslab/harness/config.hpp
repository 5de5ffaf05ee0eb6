#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gdnlslab/evolution.hpp"
#include "gdnlslab/profiles.hpp"

namespace gdnls::harness {

enum class DataKind { solitary, decay, file };

// Flat key-value configuration with [sections]; see docs/config.md.
struct RunConfig {
  std::string experiment;

  double L = 40.0;
  int N = 4096;
  double T = 1.0;
  double dt = 1e-4;
  Stepper stepper = Stepper::ifrk4;

  EquationSpec eq;
  bool mu_auto = true;  // mu = "auto": use the cached mu* determination

  ClassParams cls = ClassParams::defaults(1.0);
  bool lambda_override = false;

  DataKind data = DataKind::decay;
  double omega = 1.0;
  double c = 0.0;
  cplx c0{0.5, 0.0};
  int decay_m = 3;
  bool decay_periodized = false;
  std::string data_path;

  std::uint64_t seed = 1;
  std::string out_dir = "out";
  int workers = 1;

  // sweep axes (empty = not swept)
  std::vector<double> sweep_omega, sweep_c, sweep_alpha, sweep_T;
  std::vector<int> sweep_N;

  // raw key-values, echoed into the manifest
  std::map<std::string, std::string> raw;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Builds the initial datum described by the config on the given grid.
Field make_data(const RunConfig& cfg, GridPtr grid);

}  // namespace gdnls::harness
