#pragma once

#include "sylvan/contour_solver.hpp"
#include "sylvan/json_io.hpp"

namespace sylvan {

Json certificate_to_json(const NormCertificate& cert);
Json separation_to_json(const Separation& sep);
Json spectrum_to_json(const SpectrumSet& s);

/// Cell counts, boundary length, loop count, and the verification record.
Json domain_summary_json(const GridDomain& dom, const DomainChecks& checks);

/// Whole-run report: solution, residual, quadrature order, spectra,
/// separation, domain summary, winding deviations, certificate (when
/// present), and warnings. `timing_ms` < 0 or deterministic = true omits the
/// timing field so identical runs serialize to identical bytes.
Json report_to_json(const SolveReport& rep, bool deterministic = false, double timing_ms = -1.0);

}  // namespace sylvan
