// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "gaugedd/averaging.hpp"
#include "gaugedd/drive.hpp"
#include "gaugedd/model.hpp"
#include "gaugedd/ops.hpp"
#include "gaugedd/spectra.hpp"

using namespace gaugedd;

namespace {

const cplx kI(0.0, 1.0);

struct Outcome {
  bool passed = false;
  std::string detail;
};

ModelParams reference_params() { return ModelParams::from_ratios(1.0, 0.9, 1.1, {0.5, 1.5, 3.5}, 0.5); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

LatticeConfig lattice(int n, Boundary b) { return LatticeConfig{n, b}; }

// max_{a,b} |[X_a, X_b] - sign i eps_abc X_c|
template <typename Get>
double algebra_residual(Get get, double sign) {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      DenseMatrix c = get(a) * get(b) - get(b) * get(a);
      for (int k = 1; k <= 3; ++k) {
        const int e = levi_civita(a, b, k);
        if (e != 0) c -= (sign * e * kI) * get(k);
      }
      worst = std::max(worst, max_abs(c));
    }
  }
  return worst;
}

Outcome algebra_suite() {
  auto r = [](int a) { return DenseMatrix(local::right_field(a)); };
  auto l = [](int a) { return DenseMatrix(local::left_field(a)); };
  const auto fb = build_fermion_basis(lattice(2, Boundary::open), 2);
  auto q = [&](int a) { return DenseMatrix(charge_factor(fb, 0, a)); };
  double lr = 0.0;
  DenseMatrix rr = DenseMatrix::Zero(kLinkDim, kLinkDim), ll = rr;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) lr = std::max(lr, max_abs(DenseMatrix(l(a) * r(b) - r(b) * l(a))));
    rr += r(a) * r(a);
    ll += l(a) * l(a);
  }
  const double worst = std::max({algebra_residual(r, 1.0), algebra_residual(l, -1.0), lr,
                                 algebra_residual(q, 1.0), max_abs(DenseMatrix(rr - ll))});
  return {worst < 1e-12, "max residual " + sci(worst)};
}

Outcome gauge_invariance() {
  const auto p = reference_params();
  double worst_h = 0.0, worst_g = 0.0;
  for (int sites : {2, 3}) {
    for (Boundary b : {Boundary::open, Boundary::periodic}) {
      const auto basis = build_half_filled_basis(lattice(sites, b));
      const auto h = h_lgt(basis, p);
      const double scale = h.max_abs();
      std::vector<std::array<SparseOperator, 3>> g(static_cast<std::size_t>(sites));
      for (int x = 0; x < sites; ++x)
        for (int a = 1; a <= 3; ++a) g[static_cast<std::size_t>(x)][static_cast<std::size_t>(a - 1)] = gauss(basis, x, a);
      for (int x = 0; x < sites; ++x) {
        for (int a = 1; a <= 3; ++a) {
          const auto& ga = g[static_cast<std::size_t>(x)][static_cast<std::size_t>(a - 1)];
          worst_h = std::max(worst_h, commutator(ga, h).max_abs() / scale);
          for (int y = 0; y < sites; ++y) {
            for (int bb = 1; bb <= 3; ++bb) {
              SparseOperator c = commutator(ga, g[static_cast<std::size_t>(y)][static_cast<std::size_t>(bb - 1)]);
              if (x == y) {
                for (int k = 1; k <= 3; ++k) {
                  const int e = levi_civita(a, bb, k);
                  if (e != 0) c += g[static_cast<std::size_t>(x)][static_cast<std::size_t>(k - 1)] * (static_cast<double>(e) * kI);
                }
              }
              worst_g = std::max(worst_g, c.max_abs() / scale);
            }
          }
        }
      }
    }
  }
  return {worst_h < 1e-12 && worst_g < 1e-12,
          "max |[G,H]|/|H| " + sci(worst_h) + ", Gauss algebra " + sci(worst_g) + " (relative)"};
}

Outcome tunneling_cancellation() {
  const auto p = reference_params();
  const auto basis = build_half_filled_basis(lattice(2, Boundary::periodic));
  const GaugeTransformer gauge(basis);
  const auto o = perturbation_tunneling(basis, p);
  double worst = 0.0;
  for (int n : {3, 4, 5, 8}) {
    for (GridScheme s : {GridScheme::cube_uniform, GridScheme::haar_exact}) {
      for (AveragingMode m : {AveragingMode::per_vertex, AveragingMode::staggered}) {
        worst = std::max(worst, group_average_lattice(gauge, o, EulerGrid(n, s), m).max_abs());
      }
    }
  }
  return {worst < 1e-13, "max entry " + sci(worst) + " over N in {3,4,5,8}, both schemes and modes"};
}

Outcome spectrum_convergence() {
  const auto p = reference_params();
  std::string detail;
  bool any = false;
  for (Boundary b : {Boundary::periodic, Boundary::open}) {
    for (GridScheme s : {GridScheme::haar_exact, GridScheme::cube_uniform}) {
      ConvergenceOptions opt;
      opt.n_list = {2, 10};
      opt.scheme = s;
      const auto t = convergence_study(lattice(2, b), p, opt);
      bool ok = t.reference.size() >= 3;
      double worst10 = 0.0;
      for (std::size_t level = 0; level < 3; ++level) {
        double e2 = -1.0, e10 = -1.0;
        for (const auto& r : t.rows) {
          if (r.level_index != level) continue;
          if (r.n == 2) e2 = r.rel_error;
          if (r.n == 10) e10 = r.rel_error;
        }
        ok = ok && e10 >= 0.0 && e10 < 0.02 && e10 < e2;
        worst10 = std::max(worst10, e10);
      }
      if (!detail.empty()) detail += "; ";
      detail += to_string(b) + "/" + to_string(s) + (ok ? " ok" : " fail") + " (N=10 max rel err " + sci(worst10) + ")";
      any = any || ok;
    }
  }
  return {any, detail};
}

Outcome averaging_identity() {
  const auto p = reference_params();
  double worst_sched = 0.0, worst_modes = 0.0;
  for (auto [sites, b] : {std::pair{2, Boundary::open}, std::pair{2, Boundary::periodic}, std::pair{3, Boundary::open}}) {
    const auto basis = build_half_filled_basis(lattice(sites, b));
    const GaugeTransformer gauge(basis);
    const EulerGrid grid(2, GridScheme::haar_exact);
    const auto h = h_lgt(basis, p);
    for (Perturbation kind : {Perturbation::charge, Perturbation::tunneling}) {
      const auto h0 = (h + perturbation(basis, p, kind)).as_hermitian();
      for (AveragingMode m : {AveragingMode::per_vertex, AveragingMode::staggered}) {
        const auto sched = build_schedule(gauge, grid, drive_mode_for(m), 1.0);
        const auto avg = group_average_lattice(gauge, h0, grid, m);
        worst_sched = std::max(worst_sched, (effective_hamiltonian(h0, sched) - avg).max_abs());
      }
      const auto a = group_average_lattice(gauge, h0, grid, AveragingMode::per_vertex);
      const auto s = group_average_lattice(gauge, h0, grid, AveragingMode::staggered);
      worst_modes = std::max(worst_modes, (a - s).max_abs());
    }
  }
  return {worst_sched < 1e-12 && worst_modes < 1e-12,
          "schedule vs average " + sci(worst_sched) + ", staggered vs per-vertex " + sci(worst_modes) +
              " (N_L=2 both boundaries, N_L=3 open, N=2)"};
}

Outcome magnus_scaling_check() {
  const auto p = reference_params();
  const auto basis = build_half_filled_basis(lattice(2, Boundary::periodic));
  const GaugeTransformer gauge(basis);
  const auto h0 = (h_lgt(basis, p) + perturbation_charge(basis, p)).as_hermitian();
  const auto rows = magnus_scaling(gauge, h0, EulerGrid(2, GridScheme::haar_exact), DriveMode::staggered, 0.5, 2);
  bool ok = rows.size() == 3;
  std::string detail = "errors";
  for (const auto& r : rows) detail += " " + sci(r.error);
  detail += ", ratios";
  for (std::size_t k = 1; k < rows.size(); ++k) {
    ok = ok && rows[k].ratio >= 3.2 && rows[k].ratio <= 4.8;
    detail += " " + sci(rows[k].ratio);
  }
  return {ok, detail};
}

Outcome haar_decay() {
  const auto p = reference_params();
  const auto basis = build_half_filled_basis(lattice(2, Boundary::periodic));
  const GaugeTransformer gauge(basis);
  const auto hp = perturbation_charge(basis, p);
  const auto h = h_lgt(basis, p) + hp;
  auto avg = [&](const SparseOperator& o, int n) {
    return group_average_lattice(gauge, o, EulerGrid(n, GridScheme::haar_exact), AveragingMode::per_vertex);
  };
  const double q2 = avg(hp, 2).max_abs(), q10 = avg(hp, 10).max_abs();

  std::mt19937_64 rng(20240417);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const EulerAngles g{2.0 * std::numbers::pi * u(rng), std::numbers::pi * u(rng), 4.0 * std::numbers::pi * u(rng)};
  const auto v = gauge.vertex_unitary(0, g);
  auto defect = [&](int n) {
    const auto a = avg(h, n);
    return (a * v - v * a).max_abs();
  };
  const double c2 = defect(2), c10 = defect(10);
  const bool ok = q10 * 5.0 <= q2 && c10 < c2;
  return {ok, "|Pi(H_P)| N=2 " + sci(q2) + " N=10 " + sci(q10) + "; |[Pi(H),V]| N=2 " + sci(c2) + " N=10 " + sci(c10)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("gaugedd_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string outputs[2];
  for (int k = 0; k < 2; ++k) {
    const fs::path out = dir / ("converge_" + std::to_string(k) + ".csv");
    const std::string cmd = std::string("\"") + GAUGEDD_CLI_PATH + "\" converge --out \"" + out.string() + "\"";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "converge run failed"};
    outputs[k] = slurp(out);
  }
  fs::remove_all(dir);
  const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
  return {same, std::to_string(outputs[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // runtime budget, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "link and vertex algebra", 1.0, algebra_suite},
      {2, "gauge invariance of H_LGT", 10.0, gauge_invariance},
      {3, "exact tunneling cancellation", 10.0, tunneling_cancellation},
      {4, "averaged spectrum converges to H_LGT", 120.0, spectrum_convergence},
      {5, "averaging identities", 60.0, averaging_identity},
      {6, "first-order Magnus scaling", 60.0, magnus_scaling_check},
      {7, "Haar-averaging decay", 60.0, haar_decay},
      {8, "deterministic converge output", 0.0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0.0 || secs < c.limit_s;
    const bool pass = o.passed && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " - " << o.detail << " ["
              << sci(secs) << " s" << (in_time ? "" : ", over budget") << "]" << std::endl;
  }
  return all ? 0 : 1;
}
