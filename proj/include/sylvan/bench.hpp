#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylvan/contour_solver.hpp"
#include "sylvan/generators.hpp"
#include "sylvan/json_io.hpp"

namespace sylvan {

/// One benchmark case: a matrix family at a size with a seed. The same grid
/// backs the CLI `bench` command and the acceptance checks, so they exercise
/// identical instances.
struct BenchCase {
  std::string family;  // "diagonal", "hermitian_banded", "circulant"
  Index n = 4;
  std::uint64_t seed = 0;
};

/// 3 families x sizes {4, 8, 12, 24} x 5 seeds = 60 instances. Shifts are
/// fixed per family so the spectral separation is >= 0.5 by construction:
/// entry boxes, Gershgorin discs, and symbol bounds respectively.
std::vector<BenchCase> bench_grid();

struct BenchInstance {
  CMatrix a;
  CMatrix b;
  CMatrix q;
};

BenchInstance make_instance(const BenchCase& c);

struct BenchRow {
  std::string family;
  Index n = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  int order_used = 0;
  bool converged = false;
  bool cert_pass = false;
  double residual = 0.0;
  double rel_err_kron = -1.0;  // < 0 when the oracle cross-check was not run
  double solve_ms = 0.0;
};

struct BenchSummary {
  std::vector<BenchRow> rows;
  double total_ms = 0.0;
  bool all_converged = true;
  double max_rel_err = 0.0;
  double max_residual_scaled = 0.0;  // max residual / (1 + ||Q||_F)
};

/// Runs every grid case through the contour solver; `with_oracle` adds the
/// Kronecker-solve cross-check per instance.
BenchSummary run_bench(const SolveOptions& opts, bool with_oracle);

/// Timing/accuracy table. `deterministic` drops the wall-clock columns so two
/// identical runs serialize to identical bytes.
Json bench_to_json(const BenchSummary& summary, bool deterministic);

}  // namespace sylvan
