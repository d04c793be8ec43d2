#include "sylvan/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sylvan/bench.hpp"
#include "sylvan/contour_solver.hpp"
#include "sylvan/error.hpp"
#include "sylvan/generators.hpp"
#include "sylvan/oracle.hpp"
#include "sylvan/report.hpp"
#include "sylvan/svg.hpp"

namespace sylvan {
namespace {

AlgebraSpec parse_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  const AlgebraKind kind = algebra_kind_from_name(parts[0]);
  if (kind == AlgebraKind::OperatorL2) {
    if (parts.size() > 1) raise(ErrorCode::InvalidSpec, "op takes no parameters");
    return AlgebraSpec::operator_l2();
  }
  if (parts.size() != 3) raise(ErrorCode::InvalidSpec, "expected kind:p:alpha, e.g. gs:2:1.5");
  double p;
  if (parts[1] == "inf") {
    p = kInfinity;
  } else {
    try {
      p = std::stod(parts[1]);
    } catch (const std::exception&) {
      raise(ErrorCode::InvalidSpec, "p must be a number >= 1 or 'inf'");
    }
  }
  double alpha;
  try {
    alpha = std::stod(parts[2]);
  } catch (const std::exception&) {
    raise(ErrorCode::InvalidSpec, "alpha must be a number >= 0");
  }
  return AlgebraSpec::make(kind, p, alpha);
}

GenFamily parse_family(const std::string& name) {
  if (name == "diagonal") return GenFamily::Diagonal;
  if (name == "hermitian_banded") return GenFamily::HermitianBanded;
  if (name == "circulant") return GenFamily::Circulant;
  if (name == "shifted_copy") return GenFamily::ShiftedCopy;
  raise(ErrorCode::InvalidSpec, "unknown family: " + name);
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  out << content;
  if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

void emit_json(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out_path);
}

struct CommonSolveFlags {
  double tol = 1e-9;
  int q0 = 2;
  int q_max = 64;
  int threads = 0;
  std::string spec_text = "op";
  std::string h_name = "identity";
  bool no_certify = false;
  bool deterministic = false;
  bool oracle = false;
  std::string out_path;
  std::string svg_path;
};

void add_solve_flags(CLI::App* cmd, CommonSolveFlags& f) {
  cmd->add_option("--tol", f.tol, "convergence tolerance (default 1e-9)");
  cmd->add_option("--q0", f.q0, "initial Gauss-Legendre order per edge");
  cmd->add_option("--qmax", f.q_max, "order cap for adaptive doubling");
  cmd->add_option("--threads", f.threads, "parallel node evaluations (default: SYLVAN_THREADS or 1)");
  cmd->add_option("--spec", f.spec_text, "algebra norm: op or kind:p:alpha (gs, bgs, beurling)");
  cmd->add_option("--control", f.h_name, "norm-control function (only 'identity')");
  cmd->add_flag("--no-certify", f.no_certify, "skip the norm certificate");
  cmd->add_flag("--deterministic", f.deterministic, "omit timings for byte-identical reports");
  cmd->add_flag("--oracle", f.oracle, "cross-check against the Kronecker reference solve");
  cmd->add_option("--out", f.out_path, "write the JSON report here (default: stdout)");
  cmd->add_option("--svg", f.svg_path, "write a contour/domain SVG here");
}

SolveOptions make_options(const CommonSolveFlags& f) {
  if (f.h_name != "identity")
    raise(ErrorCode::InvalidSpec, "only the identity norm-control function is built in");
  SolveOptions opts;
  opts.tol = f.tol;
  opts.q0 = f.q0;
  opts.q_max = f.q_max;
  opts.threads = f.threads;
  opts.certify = !f.no_certify;
  opts.spec = parse_spec(f.spec_text);
  opts.h = NormControlFn::identity();
  return opts;
}

int finish_solve(const SolveReport& rep, const CommonSolveFlags& f, const CMatrix* a,
                 const CMatrix* b, const CMatrix* q, double ms) {
  Json j = report_to_json(rep, f.deterministic, ms);
  if (f.oracle && a && b && q) {
    const CMatrix x_ref = kron_solve(*a, *b, *q);
    Json o;
    o["rel_err_kron"] = (rep.x.mat() - x_ref.mat()).norm() / x_ref.mat().norm();
    j["oracle"] = std::move(o);
  }
  if (!f.svg_path.empty())
    write_text(f.svg_path, domain_svg(rep.domain, rep.spectrum_a, rep.spectrum_b, rep.sep.delta_cheb));
  emit_json(j, f.out_path);
  if (!rep.converged) {
    std::cerr << "QuadratureNotConverged: no convergence by q_max = " << f.q_max << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Sylvester/Lyapunov solver with contour quadrature and norm certificates"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a structured test matrix as JSON");
  std::string gen_family = "diagonal", gen_base = "diagonal", gen_out;
  GenSpec gen_spec;
  double gen_shift_re = 0.0, gen_shift_im = 0.0;
  gen->add_option("--family", gen_family, "diagonal | hermitian_banded | circulant | shifted_copy");
  gen->add_option("--n", gen_spec.n, "matrix size");
  gen->add_option("--seed", gen_spec.seed, "random seed");
  gen->add_option("--band", gen_spec.band, "half-bandwidth (hermitian_banded)");
  gen->add_option("--alpha", gen_spec.decay_alpha, "off-diagonal decay exponent");
  gen->add_option("--spread", gen_spec.spread, "entry scale");
  gen->add_option("--shift-re", gen_shift_re, "real part of the shift (shifted_copy)");
  gen->add_option("--shift-im", gen_shift_im, "imaginary part of the shift (shifted_copy)");
  gen->add_option("--base", gen_base, "base family for shifted_copy");
  gen->add_option("--out", gen_out, "output path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "solve BX - XA = Q by contour quadrature");
  std::string solve_a, solve_b, solve_q;
  CommonSolveFlags solve_flags;
  solve->add_option("--A", solve_a, "matrix A (JSON)")->required();
  solve->add_option("--B", solve_b, "matrix B (JSON)")->required();
  solve->add_option("--Q", solve_q, "right-hand side Q (JSON)")->required();
  add_solve_flags(solve, solve_flags);

  // lyapunov
  auto* lyap = app.add_subcommand("lyapunov", "solve A^T X + X A + Q = 0 via B := -A^T");
  std::string lyap_a, lyap_q;
  CommonSolveFlags lyap_flags;
  lyap->add_option("--A", lyap_a, "matrix A (JSON)")->required();
  lyap->add_option("--Q", lyap_q, "matrix Q (JSON)")->required();
  add_solve_flags(lyap, lyap_flags);

  // norms
  auto* norms = app.add_subcommand("norms", "evaluate localized matrix norms and the inclusion chain");
  std::string norms_a, norms_spec, norms_out;
  double norms_p = kInfinity, norms_alpha = 0.0;
  norms->add_option("--A", norms_a, "matrix (JSON)")->required();
  norms->add_option("--p", norms_p, "exponent for the inclusion chain (1 <= p, or inf)");
  norms->add_option("--alpha", norms_alpha, "weight exponent");
  norms->add_option("--spec", norms_spec, "evaluate one algebra norm instead: op or kind:p:alpha");
  norms->add_option("--out", norms_out, "write the JSON report here (default: stdout)");

  // domain
  auto* domain = app.add_subcommand("domain", "build and verify the grid Cauchy domain");
  std::string dom_a, dom_b, dom_out, dom_svg;
  domain->add_option("--A", dom_a, "matrix A (JSON)")->required();
  domain->add_option("--B", dom_b, "matrix B (JSON)")->required();
  domain->add_option("--out", dom_out, "write the JSON record here (default: stdout)");
  domain->add_option("--svg", dom_svg, "write the domain SVG here");

  // certify
  auto* cert = app.add_subcommand("certify", "solve and evaluate the norm certificate");
  std::string cert_a, cert_b, cert_q, cert_x;
  CommonSolveFlags cert_flags;
  cert->add_option("--A", cert_a, "matrix A (JSON)")->required();
  cert->add_option("--B", cert_b, "matrix B (JSON)")->required();
  cert->add_option("--Q", cert_q, "right-hand side Q (JSON)")->required();
  cert->add_option("--X", cert_x, "candidate solution X (JSON); omitted: solve first");
  add_solve_flags(cert, cert_flags);

  // bench
  auto* bench = app.add_subcommand("bench", "run the generator+solver grid; timing/accuracy table");
  CommonSolveFlags bench_flags;
  add_solve_flags(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      gen_spec.family = parse_family(gen_family);
      gen_spec.base = parse_family(gen_base);
      gen_spec.shift = Complex(gen_shift_re, gen_shift_im);
      save_matrix(generate(gen_spec), gen_out);
      return 0;
    }
    if (*solve) {
      const CMatrix a = load_matrix(solve_a), b = load_matrix(solve_b), q = load_matrix(solve_q);
      const SolveOptions opts = make_options(solve_flags);
      const auto t0 = std::chrono::steady_clock::now();
      const SolveReport rep = solve_sylvester(a, b, q, opts);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return finish_solve(rep, solve_flags, &a, &b, &q, ms);
    }
    if (*lyap) {
      const CMatrix a = load_matrix(lyap_a), q = load_matrix(lyap_q);
      const SolveOptions opts = make_options(lyap_flags);
      const auto t0 = std::chrono::steady_clock::now();
      const SolveReport rep = solve_lyapunov(a, q, opts);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const CMatrix b = scale(transpose(a), Complex(-1.0, 0.0));
      return finish_solve(rep, lyap_flags, &a, &b, &q, ms);
    }
    if (*norms) {
      const CMatrix a = load_matrix(norms_a);
      Json j;
      j["kind"] = "norms_report";
      j["op_norm"] = operator_norm(a);
      if (!norms_spec.empty()) {
        const AlgebraSpec spec = parse_spec(norms_spec);
        j["spec"] = spec_to_json(spec);
        j["norm"] = algebra_norm(a, spec);
      } else {
        const InclusionCheck chain = inclusion_check(a, norms_p, norms_alpha);
        j["p"] = norms_p == kInfinity ? Json("inf") : Json(norms_p);
        j["alpha"] = norms_alpha;
        j["gs"] = chain.gs;
        j["bgs"] = chain.bgs;
        j["beurling"] = chain.beurling;
        j["ordered"] = chain.ordered;
      }
      emit_json(j, norms_out);
      return 0;
    }
    if (*domain) {
      const CMatrix a = load_matrix(dom_a), b = load_matrix(dom_b);
      const SpectrumSet sa = spectrum(a), sb = spectrum(b);
      const double op_a = operator_norm(a);
      const Separation sep = separation(sa, sb, op_a);
      const GridDomain dom = build_domain(sa, sep);
      const DomainChecks checks = inspect_domain(dom, sa, sb, op_a, sep);
      Json j;
      j["kind"] = "domain_report";
      j["spectrum_a"] = spectrum_to_json(sa);
      j["spectrum_b"] = spectrum_to_json(sb);
      j["separation"] = separation_to_json(sep);
      j["domain"] = domain_summary_json(dom, checks);
      if (!dom_svg.empty()) write_text(dom_svg, domain_svg(dom, sa, sb, sep.delta_cheb));
      emit_json(j, dom_out);
      return checks.pass ? 0 : 1;
    }
    if (*cert) {
      const CMatrix a = load_matrix(cert_a), b = load_matrix(cert_b), q = load_matrix(cert_q);
      const SolveOptions opts = make_options(cert_flags);
      Json j;
      j["kind"] = "certificate_report";
      if (!cert_x.empty()) {
        const CMatrix x = load_matrix(cert_x);
        const Separation sep = separation(spectrum(a), spectrum(b), operator_norm(a));
        const NormCertificate certificate = certify(a, b, q, x, opts.spec, opts.h, sep);
        j["certificate"] = certificate_to_json(certificate);
        emit_json(j, cert_flags.out_path);
        return 0;
      }
      const SolveReport rep = solve_sylvester(a, b, q, opts);
      if (!rep.certified)
        raise(ErrorCode::NotNormal, "solve finished but certification was skipped; see warnings");
      j["certificate"] = certificate_to_json(rep.certificate);
      j["converged"] = rep.converged;
      j["residual_fro"] = rep.residual_fro;
      emit_json(j, cert_flags.out_path);
      return rep.converged ? 0 : 3;
    }
    if (*bench) {
      const SolveOptions opts = make_options(bench_flags);
      const BenchSummary summary = run_bench(opts, bench_flags.oracle);
      emit_json(bench_to_json(summary, bench_flags.deterministic), bench_flags.out_path);
      return summary.all_converged ? 0 : 3;
    }
  } catch (const Error& err) {
    std::cerr << err.what() << "\n";
    switch (err.code()) {
      case ErrorCode::SpectraOverlap:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sylvan
