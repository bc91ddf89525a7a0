#pragma once

#include <functional>
#include <vector>

namespace isodirac {

// Uniform grid on [x_min, x_max], n nodes including both cuts. The cuts must
// sit strictly inside the open physical domain of whatever family uses the
// grid; that is the caller's contract, checked by the family's default_grid.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;

    void validate() const;  // throws UsageError on n < 200 or empty span
    double spacing() const { return (x_max - x_min) / (n - 1); }
    std::vector<double> points() const;
};

struct SampledFunction {
    GridSpec grid;
    std::vector<double> values;

    void validate() const;  // length matches grid, all values finite
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
};

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 bisection on (a, b). All rule nodes are
// interior, so integrable endpoint singularities are never touched. The
// returned err_est is the sum of accepted panel discrepancies |K15 - G7|,
// kept <= tol by construction. Throws QuadratureError past depth 60.
QuadResult adaptive_quad(const RealFn& f, double a, double b, double tol);

// Same, for (a, inf) via the rational map x = a + t/(1-t).
QuadResult adaptive_quad_to_inf(const RealFn& f, double a, double tol);

// Lowest k eigenvalues of -d^2/dx^2 + V with Dirichlet cuts at the grid ends.
// Second-order central stencil on the interior nodes, Sturm-sequence
// bisection on the symmetric tridiagonal matrix, then Richardson
// extrapolation across spacings h and h/2 (node counts n and 2n-1).
// Throws ConvergenceError when the two resolutions disagree beyond tol
// (relative to max(1, |E|)); that usually means the grid is too coarse.
std::vector<double> fd_eigensolve(const RealFn& V, const GridSpec& grid, int k,
                                  double tol = 5e-2);

// Single-resolution variant, no extrapolation. Exposed so callers can probe
// the O(h^2) convergence order directly.
std::vector<double> fd_eigensolve_raw(const RealFn& V, const GridSpec& grid, int k);

// 5-point central first (order=1) or second (order=2) derivative, O(h^4).
double central_diff(const RealFn& f, double x, int order, double h);

}  // namespace isodirac
