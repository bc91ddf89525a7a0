#include "isodirac/specfun.hpp"

#include <cmath>
#include <limits>

#include "isodirac/errors.hpp"

namespace isodirac::specfun {

namespace {

// binom(x, j) for real x, integer j >= 0, as a plain product. Avoids gamma
// ratios, which blow up at the negative half-integer parameters the
// denominator polynomials use.
double real_binomial(double x, int j) {
    double b = 1.0;
    for (int i = 1; i <= j; ++i) b *= (x - j + i) / i;
    return b;
}

// Explicit series for P_n^{(a,b)}(z). Used directly for small n and as the
// fallback when the recurrence coefficient degenerates.
double jacobi_series(int n, double a, double b, double z) {
    const double zm = 0.5 * (z - 1.0), zp = 0.5 * (z + 1.0);
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        sum += real_binomial(n + a, n - s) * real_binomial(n + b, s)
               * std::pow(zm, s) * std::pow(zp, n - s);
    }
    return sum;
}

}  // namespace

double laguerre(int n, double alpha, double z) {
    if (n < 0) return 0.0;
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - z;
    for (int k = 1; k < n; ++k) {
        double next = ((2.0 * k + 1.0 + alpha - z) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre_deriv(int n, double alpha, double z) {
    if (n <= 0) return 0.0;
    return -laguerre(n - 1, alpha + 1.0, z);
}

double jacobi(int n, double alpha, double beta, double z) {
    if (n < 0) return 0.0;
    if (n == 0) return 1.0;
    const double a = alpha, b = beta;
    double prev = 1.0;
    double cur = 0.5 * (a - b) + (1.0 + 0.5 * (a + b)) * z;
    for (int k = 1; k < n; ++k) {
        // 2(k+1)(k+a+b+1)(2k+a+b) P_{k+1}
        //   = (2k+a+b+1)[(2k+a+b)(2k+a+b+2) z + a^2-b^2] P_k
        //   - 2(k+a)(k+b)(2k+a+b+2) P_{k-1}
        const double s = 2.0 * k + a + b;
        const double lead = 2.0 * (k + 1.0) * (k + a + b + 1.0) * s;
        if (std::abs(k + a + b + 1.0) < 1e-12 || std::abs(s) < 1e-12)
            return jacobi_series(n, a, b, z);
        const double c1 = (s + 1.0) * (s * (s + 2.0) * z + a * a - b * b);
        const double c2 = 2.0 * (k + a) * (k + b) * (s + 2.0);
        double next = (c1 * cur - c2 * prev) / lead;
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_deriv(int n, double alpha, double beta, double z) {
    if (n <= 0) return 0.0;
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, z);
}

double x_laguerre(int n, int m, double alpha, double z) {
    return laguerre(m, alpha, -z) * laguerre(n, alpha - 1.0, z)
         + laguerre(m, alpha - 1.0, -z) * laguerre(n - 1, alpha, z);
}

double x_laguerre_deriv(int n, int m, double alpha, double z) {
    // d/dz L_m^{(a)}(-z) = +L_{m-1}^{(a+1)}(-z); classical part per laguerre_deriv.
    return laguerre(m - 1, alpha + 1.0, -z) * laguerre(n, alpha - 1.0, z)
         - laguerre(m, alpha, -z) * laguerre(n - 1, alpha, z)
         + laguerre(m - 1, alpha, -z) * laguerre(n - 1, alpha, z)
         - laguerre(m, alpha - 1.0, -z) * laguerre(n - 2, alpha + 1.0, z);
}

double x_jacobi(int n, int m, double alpha, double beta, double z) {
    const double a = alpha, b = beta;
    const double den = a + n + 1.0;
    if (std::abs(den) < 1e-12)
        throw DomainError("x_jacobi: degenerate combination alpha + n + 1 = 0");
    const double c1 = (1.0 + a + b + n) / (2.0 * den);
    const double c2 = (1.0 + a - m) / den;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    return sgn * (c1 * (z - 1.0) * jacobi(m, -a - 1.0, b - 1.0, z) * jacobi(n - 1, a + 2.0, b, z)
                + c2 * jacobi(m, -2.0 - a, b, z) * jacobi(n, a + 1.0, b - 1.0, z));
}

double x_jacobi_deriv(int n, int m, double alpha, double beta, double z) {
    const double a = alpha, b = beta;
    const double den = a + n + 1.0;
    if (std::abs(den) < 1e-12)
        throw DomainError("x_jacobi_deriv: degenerate combination alpha + n + 1 = 0");
    const double c1 = (1.0 + a + b + n) / (2.0 * den);
    const double c2 = (1.0 + a - m) / den;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double pm = jacobi(m, -a - 1.0, b - 1.0, z);
    const double pn1 = jacobi(n - 1, a + 2.0, b, z);
    const double t1 = pm * pn1
                    + (z - 1.0) * (jacobi_deriv(m, -a - 1.0, b - 1.0, z) * pn1
                                   + pm * jacobi_deriv(n - 1, a + 2.0, b, z));
    const double t2 = jacobi_deriv(m, -2.0 - a, b, z) * jacobi(n, a + 1.0, b - 1.0, z)
                    + jacobi(m, -2.0 - a, b, z) * jacobi_deriv(n, a + 1.0, b - 1.0, z);
    return sgn * (c1 * t1 + c2 * t2);
}

double erf(double x) {
    if (x < 0.0) return -erf(-x);
    if (x == 0.0) return 0.0;
    constexpr double inv_sqrt_pi = 0.5641895835477562869;
    if (x < 2.0) {
        // erf(x) = 2x e^{-x^2}/sqrt(pi) * sum_k (2x^2)^k / (1*3*...*(2k+1)),
        // all terms positive, no cancellation.
        const double q = 2.0 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= q / (2.0 * k + 1.0);
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return 2.0 * x * inv_sqrt_pi * std::exp(-x * x) * sum;
    }
    // erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
    // evaluated by the modified Lentz algorithm.
    const double tiny = 1e-300;
    double f = x, c = f, d = 0.0;
    for (int k = 1; k < 400; ++k) {
        const double ak = 0.5 * k;
        d = x + ak * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + ak / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const double erfc = std::exp(-x * x) * inv_sqrt_pi / f;
    return 1.0 - erfc;
}

}  // namespace isodirac::specfun
