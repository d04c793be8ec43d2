#pragma once

namespace sylvan {

/// Command-line entry point. Exit codes: 0 success, 1 I/O, parse, or other
/// errors, 2 overlapping spectra, 3 quadrature did not converge by q_max.
int run_cli(int argc, char** argv);

}  // namespace sylvan
