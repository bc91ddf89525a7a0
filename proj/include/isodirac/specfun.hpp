#pragma once

// Classical and exceptional orthogonal polynomials plus the error function.
// Everything here is a pure function of its arguments. Degree −1 is accepted
// as an explicit zero-polynomial sentinel because the exceptional-polynomial
// assembly at n = 0 needs it in exactly one place.

namespace isodirac::specfun {

// Generalized Laguerre L_n^{(a)}(z). Three-term recurrence in n.
double laguerre(int n, double alpha, double z);

// d/dz L_n^{(a)}(z) = -L_{n-1}^{(a+1)}(z).
double laguerre_deriv(int n, double alpha, double z);

// Jacobi P_n^{(a,b)}(z). Recurrence in n, with a series fallback when a
// recurrence coefficient degenerates (possible at the non-classical
// parameter values used for the denominator polynomials).
double jacobi(int n, double alpha, double beta, double z);

// d/dz P_n^{(a,b)}(z) = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}(z).
double jacobi_deriv(int n, double alpha, double beta, double z);

// X_m exceptional Laguerre value
//   L^(a)_{n+m}(z) = L_m^{(a)}(-z) L_n^{(a-1)}(z) + L_m^{(a-1)}(-z) L_{n-1}^{(a)}(z)
// indexed here by (n, m). n = 0 collapses to L_m^{(a)}(-z).
double x_laguerre(int n, int m, double alpha, double z);

// d/dz of x_laguerre at fixed (n, m, alpha).
double x_laguerre_deriv(int n, int m, double alpha, double z);

// X_m exceptional Jacobi value, assembled from classical Jacobi polynomials:
//   (-1)^m [ (1+a+b+n)/(2(1+a+n)) (z-1) P_m^{(-a-1,b-1)} P_{n-1}^{(a+2,b)}
//          + (1+a-m)/(a+1+n) P_m^{(-2-a,b)} P_n^{(a+1,b-1)} ].
// Throws DomainError when 1+a+n or a+1+n vanishes.
double x_jacobi(int n, int m, double alpha, double beta, double z);

// d/dz of x_jacobi at fixed (n, m, alpha, beta).
double x_jacobi_deriv(int n, int m, double alpha, double beta, double z);

// Error function, |relative error| <= 1e-13 on |x| <= 6. Confluent series for
// small |x|, Lentz continued fraction for the complement beyond.
double erf(double x);

}  // namespace isodirac::specfun
