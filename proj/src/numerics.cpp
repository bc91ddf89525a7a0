#include "isodirac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "isodirac/errors.hpp"

namespace isodirac {

void GridSpec::validate() const {
    if (!(x_min < x_max))
        throw UsageError("grid: x_min must be strictly below x_max");
    if (n < 200)
        throw UsageError("grid: need at least 200 nodes");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw UsageError("grid: cuts must be finite");
}

std::vector<double> GridSpec::points() const {
    validate();
    std::vector<double> xs(n);
    const double h = spacing();
    for (int i = 0; i < n; ++i) xs[i] = x_min + i * h;
    xs.back() = x_max;
    return xs;
}

void SampledFunction::validate() const {
    grid.validate();
    if ((int)values.size() != grid.n)
        throw UsageError("sampled function: length does not match grid");
    for (double v : values)
        if (!std::isfinite(v))
            throw NumericalError("sampled function: non-finite value");
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1,1] (QUADPACK dqk15).
// xgk[1], xgk[3], xgk[5] plus the midpoint carry the embedded 7-point
// Gauss rule with weights wg.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double value;
    double err;
};

Panel gk15(const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double lo = f(c - hw * kXgk[i]);
        const double hi = f(c + hw * kXgk[i]);
        resk += kWgk[i] * (lo + hi);
        if (i % 2 == 1) resg += kWg[i / 2] * (lo + hi);
    }
    return {resk * hw, std::abs(resk - resg) * hw};
}

void quad_recurse(const RealFn& f, double a, double b, double tol, int depth,
                  double& value, double& err) {
    const Panel p = gk15(f, a, b);
    if (!std::isfinite(p.value) || !std::isfinite(p.err))
        throw QuadratureError("quadrature: integrand produced a non-finite value");
    if (p.err <= tol) {
        value += p.value;
        err += p.err;
        return;
    }
    if (depth >= 60) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "quadrature: tolerance %.3g not met on [%.17g, %.17g] after depth-60 bisection",
                      tol, a, b);
        throw QuadratureError(buf);
    }
    const double c = 0.5 * (a + b);
    quad_recurse(f, a, c, 0.5 * tol, depth + 1, value, err);
    quad_recurse(f, c, b, 0.5 * tol, depth + 1, value, err);
}

}  // namespace

QuadResult adaptive_quad(const RealFn& f, double a, double b, double tol) {
    if (!(a < b)) throw UsageError("quadrature: need a < b");
    if (!(tol > 0)) throw UsageError("quadrature: tolerance must be positive");
    QuadResult r;
    quad_recurse(f, a, b, tol, 0, r.value, r.err_est);
    return r;
}

QuadResult adaptive_quad_to_inf(const RealFn& f, double a, double tol) {
    // x = a + t/(1-t) pulls (a, inf) onto (0, 1); the Jacobian 1/(1-t)^2 is
    // harmless because the rule never evaluates at t = 1.
    auto g = [&](double t) {
        const double om = 1.0 - t;
        return f(a + t / om) / (om * om);
    };
    return adaptive_quad(g, 0.0, 1.0, tol);
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag d,
// uniform off-diagonal e) strictly below x, by the Sturm sequence of
// leading-principal-minor quotients.
int sturm_count(const std::vector<double>& d, double e2, double x) {
    int count = 0;
    double q = d[0] - x;
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2 / q;
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> tridiag_lowest(const std::vector<double>& d, double e, int k) {
    const double e2 = e * e;
    double lo = d[0], hi = d[0];
    for (double di : d) {
        lo = std::min(lo, di);
        hi = std::max(hi, di);
    }
    lo -= 2.0 * std::abs(e) + 1.0;
    hi += 2.0 * std::abs(e) + 1.0;
    std::vector<double> ev(k);
    for (int j = 1; j <= k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e2, mid) >= j)
                b = mid;
            else
                a = mid;
            if (b - a <= 1e-13 * std::max(1.0, std::abs(b)) + 1e-13) break;
        }
        ev[j - 1] = 0.5 * (a + b);
        lo = a;  // eigenvalues come out in ascending order; keep the bracket
    }
    return ev;
}

}  // namespace

std::vector<double> fd_eigensolve_raw(const RealFn& V, const GridSpec& grid, int k) {
    grid.validate();
    if (k < 1) throw UsageError("eigensolve: need k >= 1");
    if (k > 15) throw UsageError("eigensolve: k is capped at 15");
    const int m = grid.n - 2;  // interior nodes
    if (k > m) throw UsageError("eigensolve: more eigenvalues than interior nodes");
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> d(m);
    for (int i = 0; i < m; ++i) {
        const double vi = V(grid.x_min + (i + 1) * h);
        if (!std::isfinite(vi))
            throw NumericalError("eigensolve: potential non-finite on grid interior");
        d[i] = 2.0 * inv_h2 + vi;
    }
    return tridiag_lowest(d, -inv_h2, k);
}

std::vector<double> fd_eigensolve(const RealFn& V, const GridSpec& grid, int k,
                                  double tol) {
    const std::vector<double> coarse = fd_eigensolve_raw(V, grid, k);
    GridSpec fine{grid.x_min, grid.x_max, 2 * grid.n - 1};  // exact spacing h/2
    const std::vector<double> refined = fd_eigensolve_raw(V, fine, k);
    std::vector<double> ev(k);
    for (int j = 0; j < k; ++j) {
        ev[j] = (4.0 * refined[j] - coarse[j]) / 3.0;
        const double gap = std::abs(refined[j] - coarse[j]);
        const double scale = std::max(1.0, std::abs(ev[j]));
        if (gap > tol * scale) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "eigensolve: level %d moved by %.3g between resolutions; grid too coarse",
                          j, gap);
            throw ConvergenceError(buf, gap / scale, tol);
        }
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

double central_diff(const RealFn& f, double x, int order, double h) {
    if (!(h > 0)) throw UsageError("central_diff: step must be positive");
    const double f1 = f(x + h), fm1 = f(x - h);
    const double f2 = f(x + 2 * h), fm2 = f(x - 2 * h);
    if (order == 1) return (-f2 + 8.0 * f1 - 8.0 * fm1 + fm2) / (12.0 * h);
    if (order == 2) return (-f2 + 16.0 * f1 - 30.0 * f(x) + 16.0 * fm1 - fm2) / (12.0 * h * h);
    throw UsageError("central_diff: order must be 1 or 2");
}

}  // namespace isodirac
