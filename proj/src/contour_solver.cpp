#include "sylvan/contour_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "sylvan/error.hpp"
#include "sylvan/oracle.hpp"

namespace sylvan {

NormControlFn NormControlFn::identity() {
  NormControlFn fn;
  fn.h = [](double s, double) { return s; };
  fn.monotone_declared = true;
  return fn;
}

double monotonize(const NormControlFn& fn, double s, double t, int grid) {
  if (!fn.h) raise(ErrorCode::InvalidSpec, "norm-control function is empty");
  if (!(s >= 0.0) || !(t >= 0.0) || !std::isfinite(s) || !std::isfinite(t))
    raise(ErrorCode::InvalidSpec, "monotonize needs finite s, t >= 0");
  if (grid < 2) raise(ErrorCode::InvalidSpec, "monotonize lattice needs >= 2 points per axis");
  if (fn.monotone_declared) {
    const double v = fn.h(s, t);
    if (!std::isfinite(v)) raise(ErrorCode::NonFiniteH, "norm-control function returned a non-finite value");
    return v;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double u = s * static_cast<double>(i) / static_cast<double>(grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double v = t * static_cast<double>(j) / static_cast<double>(grid - 1);
      const double w = fn.h(u, v);
      if (!std::isfinite(w)) raise(ErrorCode::NonFiniteH, "norm-control function returned a non-finite value");
      best = std::max(best, w);
    }
  }
  return best;
}

namespace {

bool commonly_indexed(const CMatrix& a, const CMatrix& b, const CMatrix& q) {
  return a.is_section() && b.is_section() && q.is_section() && a.nrows() == b.nrows() &&
         q.nrows() == a.nrows() && a.row_offset() == b.row_offset() &&
         a.row_offset() == q.row_offset();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SYLVAN_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) return static_cast<int>(std::min(parsed, 256L));
  }
  return 1;
}

// A zero (or relatively negligible) pivot means the shifted matrix was
// singular at this node, i.e. z landed on the spectrum.
void check_pivots(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu) {
  const auto diag = lu.matrixLU().diagonal();
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    const double v = std::abs(diag(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo > hi * 1e-15) || hi == 0.0)
    raise(ErrorCode::ResolventSingular, "resolvent factorization numerically singular at a quadrature node");
}

}  // namespace

CMatrix contour_apply(const CMatrix& a, const CMatrix& b, const CMatrix& q,
                      const ContourQuadrature& quad, int threads) {
  require_sylvester_shapes(a, b, q);
  if (quad.nodes.empty()) raise(ErrorCode::InvalidSpec, "empty quadrature");

  const Eigen::MatrixXcd& am = a.mat();
  const Eigen::MatrixXcd& bm = b.mat();
  const Eigen::MatrixXcd& qm = q.mat();
  const std::size_t node_count = quad.nodes.size();

  auto eval_node = [&](std::size_t j) -> Eigen::MatrixXcd {
    const Complex z = quad.nodes[j];
    Eigen::MatrixXcd bz = bm;
    bz.diagonal().array() -= z;  // B - zI
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu_b(bz);
    check_pivots(lu_b);
    const Eigen::MatrixXcd y = lu_b.solve(qm);

    Eigen::MatrixXcd za = -am;
    za.diagonal().array() += z;  // zI - A
    // Right division Y (zI - A)^{-1} via the transposed system.
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu_a(za.transpose().eval());
    check_pivots(lu_a);
    const Eigen::MatrixXcd term = quad.weights[j] * lu_a.solve(y.transpose()).transpose();
    if (!term.allFinite())
      raise(ErrorCode::ResolventSingular, "resolvent produced non-finite values at a quadrature node");
    return term;
  };

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(qm.rows(), qm.cols());
  const int nthreads = std::max(1, std::min<int>(resolve_threads(threads),
                                                 static_cast<int>(std::min<std::size_t>(node_count, 64))));
  // Terms are buffered per batch and reduced strictly in node-index order, so
  // the result is bit-identical for any thread count.
  const std::size_t batch = 512;
  std::vector<Eigen::MatrixXcd> buffer;
  for (std::size_t start = 0; start < node_count; start += batch) {
    const std::size_t stop = std::min(node_count, start + batch);
    buffer.assign(stop - start, Eigen::MatrixXcd());
    if (nthreads == 1) {
      for (std::size_t j = start; j < stop; ++j) buffer[j - start] = eval_node(j);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
          try {
            for (std::size_t j = start + static_cast<std::size_t>(t); j < stop;
                 j += static_cast<std::size_t>(nthreads))
              buffer[j - start] = eval_node(j);
          } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
          }
        });
      }
      for (std::thread& th : pool) th.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const Eigen::MatrixXcd& term : buffer) acc += term;
  }
  acc /= Complex(0.0, 2.0 * std::numbers::pi);
  return CMatrix(std::move(acc), q.row_offset(), q.col_offset());
}

NormCertificate certify(const CMatrix& a, const CMatrix& b, const CMatrix& q, const CMatrix& x,
                        const AlgebraSpec& spec, const NormControlFn& h, const Separation& sep) {
  require_sylvester_shapes(a, b, q);
  if (!commonly_indexed(a, b, q))
    raise(ErrorCode::DimensionMismatch, "certificate needs square, commonly indexed A, B, Q");
  if (x.nrows() != q.nrows() || x.ncols() != q.ncols() || x.row_offset() != q.row_offset() ||
      x.col_offset() != q.col_offset())
    raise(ErrorCode::DimensionMismatch, "X must share Q's shape and offsets");
  if (!is_normal(a)) raise(ErrorCode::NotNormal, "A is not normal; certificate refused");
  if (!is_normal(b)) raise(ErrorCode::NotNormal, "B is not normal; certificate refused");
  if (!(sep.delta_cheb > 0.0) || !std::isfinite(sep.delta_cheb))
    raise(ErrorCode::InvalidSpec, "separation delta must be positive and finite");

  NormCertificate cert;
  cert.spec = spec;
  cert.norm_q_a = algebra_norm(q, spec);
  cert.norm_a_a = algebra_norm(a, spec);
  cert.norm_b_a = algebra_norm(b, spec);
  cert.norm_x_a = algebra_norm(x, spec);
  cert.op_norm_a = operator_norm(a);
  cert.delta = sep.delta_cheb;
  cert.norm_i_a = algebra_norm(CMatrix::identity(a.nrows(), a.row_offset()), spec);
  cert.h_arg_s = 3.0 / cert.delta;
  cert.h_arg_t = std::max(cert.norm_a_a, cert.norm_b_a) + (cert.op_norm_a + cert.delta) * cert.norm_i_a;
  cert.h_tilde = monotonize(h, cert.h_arg_s, cert.h_arg_t);
  const double reach = cert.op_norm_a + cert.delta;
  cert.g_value = (24.0 / std::numbers::pi) * cert.norm_q_a * reach * reach / cert.delta *
                 (cert.h_tilde * cert.h_tilde);
  cert.pass = cert.norm_x_a <= cert.g_value;
  return cert;
}

SolveReport solve_sylvester(const CMatrix& a, const CMatrix& b, const CMatrix& q,
                            const SolveOptions& opts) {
  require_sylvester_shapes(a, b, q);
  if (!(opts.tol > 0.0) || !std::isfinite(opts.tol)) raise(ErrorCode::InvalidSpec, "tol must be positive");
  if (opts.q0 < 1) raise(ErrorCode::InvalidSpec, "q0 must be >= 1");
  if (opts.q_max < opts.q0) raise(ErrorCode::InvalidSpec, "q_max must be >= q0");

  SolveReport rep;
  rep.spectrum_a = spectrum(a);
  rep.spectrum_b = spectrum(b);
  const double op_a = operator_norm(a);
  rep.sep = separation(rep.spectrum_a, rep.spectrum_b, op_a);
  rep.domain = build_domain(rep.spectrum_a, rep.sep);
  rep.checks = verify_domain(rep.domain, rep.spectrum_a, rep.spectrum_b, op_a, rep.sep);

  const bool normal = rep.spectrum_a.is_normal && rep.spectrum_b.is_normal;
  if (!normal) {
    rep.checks.clearance_checked = false;
    rep.warnings.push_back(
        "inputs not normal: boundary clearance no longer bounds the resolvent norm");
  }

  for (const Complex& alpha : rep.spectrum_a.values)
    if (winding_number(rep.domain.loops, alpha) != 1)
      raise(ErrorCode::DomainInvalid, "boundary does not wind once about an eigenvalue of A");
  for (const Complex& beta : rep.spectrum_b.values)
    if (winding_number(rep.domain.loops, beta) != 0)
      raise(ErrorCode::DomainInvalid, "boundary winds about an eigenvalue of B");

  int order = opts.q0;
  ContourQuadrature quad = build_quadrature(rep.domain, order);
  CMatrix x = contour_apply(a, b, q, quad, opts.threads);
  bool converged = false;
  while (2 * order <= opts.q_max) {
    const int next = 2 * order;
    ContourQuadrature quad_next = build_quadrature(rep.domain, next);
    CMatrix x_next = contour_apply(a, b, q, quad_next, opts.threads);
    const double diff = (x_next.mat() - x.mat()).norm();
    const double res = sylvester_residual(a, b, q, x_next);
    const bool ok = diff <= opts.tol * (1.0 + x.frobenius()) && res <= opts.tol * (1.0 + q.frobenius());
    x = std::move(x_next);
    quad = std::move(quad_next);
    order = next;
    if (ok) {
      converged = true;
      break;
    }
  }

  rep.residual_fro = sylvester_residual(a, b, q, x);
  rep.x = std::move(x);
  rep.order_used = order;
  rep.converged = converged;
  rep.node_count = quad.nodes.size();
  if (!converged)
    rep.warnings.push_back("quadrature did not converge by q_max; report carries the best attempt");

  for (const Complex& alpha : rep.spectrum_a.values)
    rep.max_winding_dev_a =
        std::max(rep.max_winding_dev_a, std::abs(winding_selfcheck(quad, alpha) - Complex(1.0)));
  for (const Complex& beta : rep.spectrum_b.values)
    rep.max_winding_dev_b = std::max(rep.max_winding_dev_b, std::abs(winding_selfcheck(quad, beta)));

  if (opts.certify) {
    if (!normal) {
      rep.warnings.push_back("certificate skipped: inputs not normal");
    } else if (!commonly_indexed(a, b, q)) {
      rep.warnings.push_back("certificate skipped: needs square, commonly indexed inputs");
    } else {
      rep.certificate = certify(a, b, q, rep.x, opts.spec, opts.h, rep.sep);
      rep.certified = true;
    }
  }
  return rep;
}

SolveReport solve_lyapunov(const CMatrix& a, const CMatrix& q, const SolveOptions& opts) {
  if (!a.square()) raise(ErrorCode::NonSquare, "Lyapunov needs a square A");
  const CMatrix b = scale(transpose(a), Complex(-1.0, 0.0));
  return solve_sylvester(a, b, q, opts);
}

}  // namespace sylvan
