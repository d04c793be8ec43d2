#pragma once

#include <string>

#include "sylvan/cauchy_domain.hpp"

namespace sylvan {

/// Self-contained SVG diagnostic: grid cells (d3 lightest, d1 darkest),
/// boundary loops, eigenvalues of A as dots and of B as crosses. The canvas
/// covers the bounding box of everything drawn plus `margin` on each side.
/// Output is built with fixed-precision formatting, so identical inputs give
/// identical bytes.
std::string domain_svg(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                       double margin);

}  // namespace sylvan
