#include "gdnlslab/harness/sweep.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "gdnlslab/harness/csv.hpp"
#include "gdnlslab/harness/experiments.hpp"

namespace fs = std::filesystem;

namespace gdnls::harness {

namespace {

struct Cell {
  RunConfig cfg;
  double omega, c, alpha, T;
  int N;
  int exit_code = -1;
  std::string status = "not_run";
  bool all_pass = false;
};

template <typename V>
std::vector<V> axis(const std::vector<V>& sweep, V base) {
  return sweep.empty() ? std::vector<V>{base} : sweep;
}

void run_cell(Cell& cell) {
  cell.exit_code = run_experiment(cell.cfg);
  const fs::path mpath = fs::path(cell.cfg.out_dir) / "manifest.json";
  if (fs::exists(mpath)) {
    std::ifstream in(mpath);
    nlohmann::json j;
    in >> j;
    cell.status = j.value("status", "unknown");
    cell.all_pass = true;
    for (const auto& c : j.value("checks", nlohmann::json::array()))
      if (!c.value("pass", false)) cell.all_pass = false;
  } else {
    cell.status = "no_manifest";
  }
}

}  // namespace

int run_sweep(const RunConfig& cfg) {
  const fs::path root = cfg.out_dir;
  fs::create_directories(root);

  std::vector<Cell> cells;
  for (double omega : axis(cfg.sweep_omega, cfg.omega))
    for (double c : axis(cfg.sweep_c, cfg.c))
      for (double alpha : axis(cfg.sweep_alpha, cfg.eq.alpha))
        for (double T : axis(cfg.sweep_T, cfg.T))
          for (int N : axis(cfg.sweep_N, cfg.N)) {
            Cell cell{cfg, omega, c, alpha, T, N};
            cell.cfg.omega = omega;
            cell.cfg.c = c;
            cell.cfg.eq.alpha = alpha;
            cell.cfg.T = T;
            cell.cfg.N = N;
            cell.cfg.cls = ClassParams::defaults(alpha);
            cell.cfg.lambda_override = false;
            char name[32];
            std::snprintf(name, sizeof(name), "cell_%03d", int(cells.size()));
            cell.cfg.out_dir = (root / name).string();
            cell.cfg.sweep_omega.clear();
            cell.cfg.sweep_c.clear();
            cell.cfg.sweep_alpha.clear();
            cell.cfg.sweep_T.clear();
            cell.cfg.sweep_N.clear();
            cells.push_back(std::move(cell));
          }

  const int workers = std::max(1, cfg.workers);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      try {
        run_cell(cells[i]);
      } catch (const std::exception& e) {
        cells[i].exit_code = kExitNumerical;
        cells[i].status = std::string("exception: ") + e.what();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CsvWriter index((root / "index.csv").string(),
                  {"cell", "omega", "c", "alpha", "T", "N", "m", "exit_code", "status",
                   "all_pass"});
  bool ok = true;
  for (size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    index.row({(long long)i, cell.omega, cell.c, cell.alpha, cell.T, (long long)cell.N,
               (long long)ClassParams::default_m(cell.alpha), (long long)cell.exit_code,
               cell.status, std::string(cell.all_pass ? "yes" : "no")});
    if (cell.exit_code != kExitOk) ok = false;
  }
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace gdnls::harness
