#include "sylvan/report.hpp"

namespace sylvan {

Json certificate_to_json(const NormCertificate& cert) {
  Json j;
  j["spec"] = spec_to_json(cert.spec);
  j["norm_q_a"] = cert.norm_q_a;
  j["norm_a_a"] = cert.norm_a_a;
  j["norm_b_a"] = cert.norm_b_a;
  j["op_norm_a"] = cert.op_norm_a;
  j["delta"] = cert.delta;
  j["norm_i_a"] = cert.norm_i_a;
  j["h_arg_s"] = cert.h_arg_s;
  j["h_arg_t"] = cert.h_arg_t;
  j["h_tilde"] = cert.h_tilde;
  j["g_value"] = cert.g_value;
  j["norm_x_a"] = cert.norm_x_a;
  j["pass"] = cert.pass;
  return j;
}

Json separation_to_json(const Separation& sep) {
  Json j;
  j["delta_cheb"] = sep.delta_cheb;
  j["delta_eucl"] = sep.delta_eucl;
  j["delta_prime"] = sep.delta_prime;
  j["n0"] = sep.n0;
  return j;
}

Json spectrum_to_json(const SpectrumSet& s) {
  Json vals = Json::array();
  for (const Complex& v : s.values) vals.push_back(Json::array({v.real(), v.imag()}));
  Json j;
  j["values"] = std::move(vals);
  j["normality_residual"] = s.normality_residual;
  j["is_normal"] = s.is_normal;
  return j;
}

Json domain_summary_json(const GridDomain& dom, const DomainChecks& checks) {
  Json j;
  j["side"] = dom.side;
  j["d1_cells"] = dom.d1.size();
  j["d2_cells"] = dom.d2.size();
  j["d3_cells"] = dom.d3.size();
  j["loop_count"] = dom.loops.size();
  j["boundary_length"] = dom.boundary_length;
  Json c;
  c["a_in_d1"] = checks.a_in_d1;
  c["a_in_window"] = checks.a_in_window;
  c["b_outside_d3"] = checks.b_outside_d3;
  c["boundary_radius_ok"] = checks.boundary_radius_ok;
  c["boundary_length_ok"] = checks.boundary_length_ok;
  c["clearance_ok"] = checks.clearance_ok;
  c["clearance_checked"] = checks.clearance_checked;
  c["max_boundary_abs"] = checks.max_boundary_abs;
  c["radius_bound"] = checks.radius_bound;
  c["length_bound"] = checks.length_bound;
  c["min_clearance_a"] = checks.min_clearance_a;
  c["min_clearance_b"] = checks.min_clearance_b;
  c["pass"] = checks.pass;
  if (!checks.first_violation.empty()) c["first_violation"] = checks.first_violation;
  j["checks"] = std::move(c);
  return j;
}

Json report_to_json(const SolveReport& rep, bool deterministic, double timing_ms) {
  Json j;
  j["kind"] = "solve_report";
  j["converged"] = rep.converged;
  j["order_used"] = rep.order_used;
  j["residual_fro"] = rep.residual_fro;
  j["node_count"] = rep.node_count;
  j["x"] = matrix_to_json(rep.x);
  j["spectrum_a"] = spectrum_to_json(rep.spectrum_a);
  j["spectrum_b"] = spectrum_to_json(rep.spectrum_b);
  j["separation"] = separation_to_json(rep.sep);
  j["domain"] = domain_summary_json(rep.domain, rep.checks);
  Json w;
  w["max_dev_a"] = rep.max_winding_dev_a;
  w["max_dev_b"] = rep.max_winding_dev_b;
  j["winding"] = std::move(w);
  if (rep.certified) j["certificate"] = certificate_to_json(rep.certificate);
  j["warnings"] = rep.warnings;
  if (!deterministic && timing_ms >= 0.0) j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace sylvan
