#pragma once

#include <string>
#include <vector>

#include "sylvan/spectra.hpp"

namespace sylvan {

/// Grid cell (k, k'): the closed square centered at (k + k'i) * side with side
/// length `side`.
struct Cell {
  Index k = 0;
  Index kp = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Closed axis-aligned polygon; edge i runs vertices[i] -> vertices[(i+1) % n].
/// Outer loops are counterclockwise, hole loops clockwise (region on the left).
struct Loop {
  std::vector<Complex> vertices;
  bool counterclockwise = true;
  double length() const;
};

/// The proof's grid-square construction around sigma(A): cell sets
/// d1 (cells meeting the spectrum), d2 and d3 (successive one-ring
/// Chebyshev dilations), and the traced boundary of the union of d2.
struct GridDomain {
  double side = 0.0;  // = delta'
  std::vector<Cell> d1, d2, d3;  // sorted, unique; d1 subseteq d2 subseteq d3
  std::vector<Loop> loops;
  double boundary_length = 0.0;
};

GridDomain build_domain(const SpectrumSet& sa, const Separation& sep);

/// Boundary of the union of closed grid squares, chained into oriented loops.
/// Loops are simple and edge-disjoint; two loops may share a vertex where
/// squares meet only at a corner. Deterministic: cells are visited in
/// lexicographic order.
std::vector<Loop> trace_boundary(const std::vector<Cell>& cells, double side);

/// Sum of signed winding numbers of all loops about z (exact ray casting;
/// z must not lie on the boundary).
int winding_number(const std::vector<Loop>& loops, Complex z);

struct DomainChecks {
  bool a_in_d1 = false;            // every eigenvalue of A in the closed union of d1
  bool a_in_window = false;        // every eigenvalue covered by a d1 cell with |k|,|k'| <= n0
  bool b_outside_d3 = false;       // no eigenvalue of B strictly inside the union of d3
  bool boundary_radius_ok = false; // max |z| over the boundary <= ||A||_op + delta
  bool boundary_length_ok = false; // boundary length <= 48 (||A||_op + delta)^2 / delta
  bool clearance_ok = false;       // Chebyshev distance from boundary to both spectra >= delta'
  bool clearance_checked = true;   // false when skipped (non-normal input)
  double max_boundary_abs = 0.0;
  double radius_bound = 0.0;
  double length_bound = 0.0;
  double min_clearance_a = 0.0;
  double min_clearance_b = 0.0;
  bool pass = false;
  std::string first_violation;  // empty when pass
};

/// Runs the five containment/length checks; throws Error(DomainInvalid)
/// naming the first violated check. The clearance check is skipped (recorded,
/// not failed) when either input is not normal.
DomainChecks verify_domain(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                           double op_norm_a, const Separation& sep);

/// Same checks without the throw; used where the record itself is the output.
DomainChecks inspect_domain(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                            double op_norm_a, const Separation& sep);

}  // namespace sylvan
