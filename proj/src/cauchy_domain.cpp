#include "sylvan/cauchy_domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>

#include "sylvan/error.hpp"

namespace sylvan {
namespace {

// Direction order: +x, +y, -x, -y. An exposed bottom edge is walked in +x,
// right in +y, top in -x, left in -y, so the cell interior is on the left.
constexpr std::array<std::array<int, 2>, 4> kDir = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// Vertex on the doubled lattice: cell (k, kp) has corners (2k +- 1, 2kp +- 1).
// Integer coordinates make vertex identity exact.
struct Vertex {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct DirectedEdge {
  Vertex from, to;
  int dir = 0;
  bool used = false;
};

bool contains_cell(const std::vector<Cell>& cells, const Cell& c) {
  return std::binary_search(cells.begin(), cells.end(), c);
}

std::vector<DirectedEdge> exposed_edges(const std::vector<Cell>& cells) {
  std::vector<DirectedEdge> edges;
  for (const Cell& c : cells) {
    const std::int64_t x = 2 * c.k, y = 2 * c.kp;
    if (!contains_cell(cells, {c.k, c.kp - 1}))
      edges.push_back({{x - 1, y - 1}, {x + 1, y - 1}, 0});
    if (!contains_cell(cells, {c.k + 1, c.kp}))
      edges.push_back({{x + 1, y - 1}, {x + 1, y + 1}, 1});
    if (!contains_cell(cells, {c.k, c.kp + 1}))
      edges.push_back({{x + 1, y + 1}, {x - 1, y + 1}, 2});
    if (!contains_cell(cells, {c.k - 1, c.kp}))
      edges.push_back({{x - 1, y + 1}, {x - 1, y - 1}, 3});
  }
  return edges;
}

// Splits a closed vertex path into simple cycles by cutting at repeated
// vertices. The input revisits a vertex at most once (4-valent corner where
// two squares touch diagonally), and the start vertex appears only once.
std::vector<std::vector<Vertex>> split_simple(const std::vector<Vertex>& path) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  std::map<Vertex, std::size_t> at;
  for (const Vertex& v : path) {
    auto it = at.find(v);
    if (it != at.end()) {
      const std::size_t i = it->second;
      out.emplace_back(stack.begin() + static_cast<std::ptrdiff_t>(i), stack.end());
      for (std::size_t j = i; j < stack.size(); ++j) at.erase(stack[j]);
      stack.resize(i);
    }
    at.emplace(v, stack.size());
    stack.push_back(v);
  }
  if (!stack.empty()) out.push_back(std::move(stack));
  return out;
}

// Rotate so the loop starts at its lexicographically smallest vertex; gives a
// canonical representation independent of which edge seeded the trace.
void canonicalize(std::vector<Vertex>& loop) {
  auto lo = std::min_element(loop.begin(), loop.end());
  std::rotate(loop.begin(), lo, loop.end());
}

}  // namespace

double Loop::length() const {
  double total = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) total += std::abs(vertices[(i + 1) % n] - vertices[i]);
  return total;
}

std::vector<Loop> trace_boundary(const std::vector<Cell>& cells, double side) {
  if (!(side > 0.0) || !std::isfinite(side)) raise(ErrorCode::DomainInvalid, "grid side must be positive");
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<DirectedEdge> edges = exposed_edges(sorted);
  std::map<Vertex, std::array<int, 2>> outgoing;  // up to two edges leave a vertex
  std::map<Vertex, int> out_count;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& slots = outgoing[edges[i].from];
    int& n = out_count[edges[i].from];
    slots[static_cast<std::size_t>(n++)] = static_cast<int>(i);
  }

  std::vector<Loop> loops;
  for (std::size_t seed = 0; seed < edges.size(); ++seed) {
    if (edges[seed].used) continue;
    std::vector<Vertex> path;
    const Vertex start = edges[seed].from;
    std::size_t cur = seed;
    while (true) {
      edges[cur].used = true;
      path.push_back(edges[cur].from);
      const Vertex next = edges[cur].to;
      if (next == start) break;
      const auto& slots = outgoing[next];
      const int n = out_count[next];
      int chosen = -1;
      // Prefer the left turn at a 4-valent pinch vertex so each lobe closes
      // onto itself instead of weaving a figure eight.
      const int left = (edges[cur].dir + 1) % 4;
      for (int s = 0; s < n; ++s) {
        const int e = slots[static_cast<std::size_t>(s)];
        if (edges[static_cast<std::size_t>(e)].used) continue;
        if (chosen < 0 || edges[static_cast<std::size_t>(e)].dir == left) chosen = e;
      }
      if (chosen < 0) raise(ErrorCode::DomainInvalid, "boundary trace dead-ended; edge set inconsistent");
      cur = static_cast<std::size_t>(chosen);
    }
    for (std::vector<Vertex>& simple : split_simple(path)) {
      canonicalize(simple);
      Loop loop;
      loop.vertices.reserve(simple.size());
      std::int64_t area2 = 0;  // shoelace in exact integer lattice coordinates
      for (std::size_t i = 0; i < simple.size(); ++i) {
        const Vertex& a = simple[i];
        const Vertex& b = simple[(i + 1) % simple.size()];
        area2 += a.x * b.y - b.x * a.y;
        loop.vertices.emplace_back(static_cast<double>(a.x) * (side / 2.0),
                                   static_cast<double>(a.y) * (side / 2.0));
      }
      loop.counterclockwise = area2 > 0;
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

int winding_number(const std::vector<Loop>& loops, Complex z) {
  int w = 0;
  for (const Loop& loop : loops) {
    const std::size_t n = loop.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Complex a = loop.vertices[i];
      const Complex b = loop.vertices[(i + 1) % n];
      if (a.real() != b.real()) continue;  // horizontal edges never cross the +x ray test
      if (!(a.real() > z.real())) continue;
      if (b.imag() > a.imag()) {
        if (z.imag() >= a.imag() && z.imag() < b.imag()) ++w;
      } else {
        if (z.imag() >= b.imag() && z.imag() < a.imag()) --w;
      }
    }
  }
  return w;
}

namespace {

std::vector<Index> axis_cells(double x, double side, double tol) {
  std::vector<Index> ks;
  const auto base = static_cast<Index>(std::llround(x / side));
  for (Index k = base - 1; k <= base + 1; ++k) {
    if (std::abs(x - static_cast<double>(k) * side) <= side / 2.0 + tol) ks.push_back(k);
  }
  return ks;
}

std::vector<Cell> dilate(const std::vector<Cell>& cells) {
  std::vector<Cell> grown;
  grown.reserve(cells.size() * 9);
  for (const Cell& c : cells)
    for (int dk = -1; dk <= 1; ++dk)
      for (int dp = -1; dp <= 1; ++dp) grown.push_back({c.k + dk, c.kp + dp});
  std::sort(grown.begin(), grown.end());
  grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
  return grown;
}

}  // namespace

GridDomain build_domain(const SpectrumSet& sa, const Separation& sep) {
  if (sa.values.empty()) raise(ErrorCode::DegenerateSpectrum, "empty spectrum");
  if (!(sep.delta_prime > 0.0) || !std::isfinite(sep.delta_prime))
    raise(ErrorCode::DomainInvalid, "grid side delta' must be positive and finite");

  GridDomain dom;
  dom.side = sep.delta_prime;
  const double tol = 1e-12 * dom.side;  // an eigenvalue on a shared edge marks both cells
  for (const Complex& lambda : sa.values) {
    for (Index k : axis_cells(lambda.real(), dom.side, tol))
      for (Index kp : axis_cells(lambda.imag(), dom.side, tol)) dom.d1.push_back({k, kp});
  }
  std::sort(dom.d1.begin(), dom.d1.end());
  dom.d1.erase(std::unique(dom.d1.begin(), dom.d1.end()), dom.d1.end());

  dom.d2 = dilate(dom.d1);
  dom.d3 = dilate(dom.d2);
  dom.loops = trace_boundary(dom.d2, dom.side);

  std::size_t edge_count = 0;
  for (const Loop& loop : dom.loops) edge_count += loop.vertices.size();
  dom.boundary_length = static_cast<double>(edge_count) * dom.side;
  return dom;
}

namespace {

// Chebyshev distance from a point to an axis-aligned segment. The coordinate
// along the segment clamps independently, so the max splits cleanly.
double cheb_dist_segment(Complex p, Complex a, Complex b) {
  const double lox = std::min(a.real(), b.real()), hix = std::max(a.real(), b.real());
  const double loy = std::min(a.imag(), b.imag()), hiy = std::max(a.imag(), b.imag());
  const double dx = std::max({lox - p.real(), 0.0, p.real() - hix});
  const double dy = std::max({loy - p.imag(), 0.0, p.imag() - hiy});
  return std::max(dx, dy);
}

bool point_in_cell(Complex p, const Cell& c, double side, double slack) {
  const double dx = std::abs(p.real() - static_cast<double>(c.k) * side);
  const double dy = std::abs(p.imag() - static_cast<double>(c.kp) * side);
  return std::max(dx, dy) <= side / 2.0 + slack;
}

}  // namespace

DomainChecks inspect_domain(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                            double op_norm_a, const Separation& sep) {
  DomainChecks rec;
  const double s = dom.side;
  const double edge_tol = 1e-12 * s;

  rec.a_in_d1 = true;
  rec.a_in_window = true;
  for (const Complex& lambda : sa.values) {
    bool covered = false;
    bool covered_in_window = false;
    for (const Cell& c : dom.d1)
      if (point_in_cell(lambda, c, s, edge_tol)) {
        covered = true;
        if (std::abs(c.k) <= sep.n0 && std::abs(c.kp) <= sep.n0) covered_in_window = true;
      }
    rec.a_in_d1 = rec.a_in_d1 && covered;
    rec.a_in_window = rec.a_in_window && covered_in_window;
  }

  // Strictly inside the union of d3 = covered by the closed union and not on
  // its outer boundary. The per-cell test alone would miss a point sitting on
  // an interior edge shared by two cells.
  rec.b_outside_d3 = true;
  const std::vector<Loop> d3_boundary = trace_boundary(dom.d3, s);
  for (const Complex& mu : sb.values) {
    bool in_closed = false;
    for (const Cell& c : dom.d3)
      if (point_in_cell(mu, c, s, edge_tol)) {
        in_closed = true;
        break;
      }
    if (!in_closed) continue;
    double dist = std::numeric_limits<double>::infinity();
    for (const Loop& loop : d3_boundary) {
      const std::size_t n = loop.vertices.size();
      for (std::size_t i = 0; i < n; ++i)
        dist = std::min(dist, cheb_dist_segment(mu, loop.vertices[i], loop.vertices[(i + 1) % n]));
    }
    if (dist > edge_tol) {  // interior point; boundary contact is tolerated
      rec.b_outside_d3 = false;
      break;
    }
  }

  rec.radius_bound = op_norm_a + sep.delta_cheb;
  for (const Loop& loop : dom.loops)
    for (const Complex& v : loop.vertices) rec.max_boundary_abs = std::max(rec.max_boundary_abs, std::abs(v));
  rec.boundary_radius_ok = rec.max_boundary_abs <= rec.radius_bound * (1.0 + 1e-12);

  rec.length_bound = 48.0 * rec.radius_bound * rec.radius_bound / sep.delta_cheb;
  rec.boundary_length_ok = dom.boundary_length <= rec.length_bound * (1.0 + 1e-12);

  auto min_clearance = [&dom](const std::vector<Complex>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& p : pts) {
      for (const Loop& loop : dom.loops) {
        const std::size_t n = loop.vertices.size();
        for (std::size_t i = 0; i < n; ++i)
          best = std::min(best, cheb_dist_segment(p, loop.vertices[i], loop.vertices[(i + 1) % n]));
      }
    }
    return best;
  };
  rec.min_clearance_a = min_clearance(sa.values);
  rec.min_clearance_b = min_clearance(sb.values);
  // The clearance equals a resolvent bound only for normal inputs; the
  // geometric distances above are still reported either way.
  rec.clearance_checked = sa.is_normal && sb.is_normal;
  const double clear_floor = s * (1.0 - 1e-12);
  rec.clearance_ok = rec.min_clearance_a >= clear_floor && rec.min_clearance_b >= clear_floor;

  if (!rec.a_in_d1)
    rec.first_violation = "an eigenvalue of A escapes the d1 cells";
  else if (!rec.a_in_window)
    rec.first_violation = "an eigenvalue of A has no covering cell inside the |k|,|k'| <= n0 window";
  else if (!rec.b_outside_d3)
    rec.first_violation = "an eigenvalue of B lies inside the d3 cells";
  else if (!rec.boundary_radius_ok)
    rec.first_violation = "boundary exceeds the |z| <= ||A|| + delta disc";
  else if (!rec.boundary_length_ok)
    rec.first_violation = "boundary length exceeds 48 (||A|| + delta)^2 / delta";
  else if (rec.clearance_checked && !rec.clearance_ok)
    rec.first_violation = "boundary comes closer than delta' to a spectrum";
  rec.pass = rec.first_violation.empty();
  return rec;
}

DomainChecks verify_domain(const GridDomain& dom, const SpectrumSet& sa, const SpectrumSet& sb,
                           double op_norm_a, const Separation& sep) {
  DomainChecks rec = inspect_domain(dom, sa, sb, op_norm_a, sep);
  if (!rec.pass) raise(ErrorCode::DomainInvalid, rec.first_violation);
  return rec;
}

}  // namespace sylvan
