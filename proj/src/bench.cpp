#include "sylvan/bench.hpp"

#include <algorithm>
#include <chrono>

#include "sylvan/error.hpp"
#include "sylvan/oracle.hpp"

namespace sylvan {

std::vector<BenchCase> bench_grid() {
  std::vector<BenchCase> grid;
  for (const char* family : {"diagonal", "hermitian_banded", "circulant"})
    for (Index n : {4, 8, 12, 24})
      for (std::uint64_t seed = 1; seed <= 5; ++seed) grid.push_back({family, n, seed});
  return grid;
}

BenchInstance make_instance(const BenchCase& c) {
  GenSpec gs;
  gs.n = c.n;
  gs.seed = c.seed;
  const CMatrix q = random_dense(c.n, c.n, c.seed + 424242);
  if (c.family == "diagonal") {
    // Entries live in the [-1,1] box, so a real shift of 2.5 leaves a real-part
    // gap of at least 0.5 between the two spectra.
    gs.family = GenFamily::Diagonal;
    CMatrix a = generate(gs);
    GenSpec gsb = gs;
    gsb.seed = c.seed + 7777;
    CMatrix b = shifted_copy(generate(gsb), Complex(2.5, 0.0));
    return {std::move(a), std::move(b), q};
  }
  if (c.family == "hermitian_banded") {
    // Gershgorin keeps the (real) spectrum inside [-2.1, 2.1]; shifting a copy
    // by 5 separates the spectra by at least 0.8.
    gs.family = GenFamily::HermitianBanded;
    gs.band = 2;
    gs.decay_alpha = 1.0;
    CMatrix a = generate(gs);
    CMatrix b = shifted_copy(a, Complex(5.0, 0.0));
    return {std::move(a), std::move(b), q};
  }
  if (c.family == "circulant") {
    // The symbol is bounded by the absolute sum of the damped coefficients
    // (about 3.1), so shifting an independent circulant by 7 keeps a gap.
    gs.family = GenFamily::Circulant;
    gs.decay_alpha = 1.0;
    CMatrix a = generate(gs);
    GenSpec gsb = gs;
    gsb.seed = c.seed + 7777;
    CMatrix b = shifted_copy(generate(gsb), Complex(7.0, 0.0));
    return {std::move(a), std::move(b), q};
  }
  raise(ErrorCode::InvalidSpec, "unknown bench family: " + c.family);
}

BenchSummary run_bench(const SolveOptions& opts, bool with_oracle) {
  BenchSummary summary;
  const auto grid = bench_grid();
  summary.rows.reserve(grid.size());
  for (const BenchCase& c : grid) {
    const BenchInstance inst = make_instance(c);
    const auto t0 = std::chrono::steady_clock::now();
    const SolveReport rep = solve_sylvester(inst.a, inst.b, inst.q, opts);
    const auto t1 = std::chrono::steady_clock::now();

    BenchRow row;
    row.family = c.family;
    row.n = c.n;
    row.seed = c.seed;
    row.delta = rep.sep.delta_cheb;
    row.order_used = rep.order_used;
    row.converged = rep.converged;
    row.cert_pass = rep.certified && rep.certificate.pass;
    row.residual = rep.residual_fro;
    row.solve_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (with_oracle) {
      const CMatrix x_ref = kron_solve(inst.a, inst.b, inst.q);
      row.rel_err_kron = (rep.x.mat() - x_ref.mat()).norm() / x_ref.mat().norm();
    }

    summary.total_ms += row.solve_ms;
    summary.all_converged = summary.all_converged && row.converged;
    if (row.rel_err_kron >= 0.0) summary.max_rel_err = std::max(summary.max_rel_err, row.rel_err_kron);
    summary.max_residual_scaled =
        std::max(summary.max_residual_scaled, row.residual / (1.0 + inst.q.frobenius()));
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

Json bench_to_json(const BenchSummary& summary, bool deterministic) {
  Json rows = Json::array();
  for (const BenchRow& row : summary.rows) {
    Json r;
    r["family"] = row.family;
    r["n"] = row.n;
    r["seed"] = row.seed;
    r["delta"] = row.delta;
    r["order_used"] = row.order_used;
    r["converged"] = row.converged;
    r["cert_pass"] = row.cert_pass;
    r["residual"] = row.residual;
    if (row.rel_err_kron >= 0.0) r["rel_err_kron"] = row.rel_err_kron;
    if (!deterministic) r["solve_ms"] = row.solve_ms;
    rows.push_back(std::move(r));
  }
  Json j;
  j["kind"] = "bench_report";
  j["rows"] = std::move(rows);
  j["instances"] = summary.rows.size();
  j["all_converged"] = summary.all_converged;
  j["max_rel_err_kron"] = summary.max_rel_err;
  j["max_residual_scaled"] = summary.max_residual_scaled;
  if (!deterministic) j["total_ms"] = summary.total_ms;
  return j;
}

}  // namespace sylvan
