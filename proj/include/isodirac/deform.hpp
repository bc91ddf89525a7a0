#pragma once

#include <string>
#include <vector>

#include "isodirac/families.hpp"
#include "isodirac/numerics.hpp"

namespace isodirac {

// Which member of the one-parameter potential family to evaluate. The three
// limits are symbolic kinds, never floating lambda values: lambda -> 0 is
// the Pursey potential, lambda -> -1 Abraham-Moses, lambda -> +-inf the
// undeformed potential itself.
struct Deformation {
    enum class Kind { Generic, Pursey, AbrahamMoses, Undeformed };
    Kind kind = Kind::Undeformed;
    double lambda = 0.0;  // meaningful for Generic only

    // Valid generic range is lambda > 0 or lambda < -1; anything in [-1, 0]
    // puts a zero of I(x)+lambda inside the domain and is rejected.
    static Deformation generic(double lambda);
    static Deformation pursey() { return {Kind::Pursey, 0.0}; }
    static Deformation abraham_moses() { return {Kind::AbrahamMoses, 0.0}; }
    static Deformation undeformed() { return {Kind::Undeformed, 0.0}; }

    std::string label() const;
};

// Cumulative probability I(x) of the sector-1 ground state, tabulated once
// per (family, grid) and immutable afterwards. Every node interval carries
// its own Gauss-Kronrod panel integral; prefix sums give I(x_i) and suffix
// sums give 1 - I(x_i) directly, so both ends of the domain keep full
// relative accuracy (the naive 1 - I would be pure cancellation out in the
// tails). Off-node queries integrate the partial panel on the fly; I'(x) is
// always the analytic [psi0]^2, never a table derivative.
//
// The table keeps a pointer to the family; the family must outlive it.
class IntegralTable {
public:
    IntegralTable(const Family& fam, const GridSpec& grid);

    const Family& family() const { return *fam_; }
    const GridSpec& grid() const { return grid_; }
    double err_est() const { return err_est_; }
    static constexpr int interpolation_order() { return 15; }

    double psi0(double x) const;     // the normalized ground state
    double psi0_sq(double x) const;  // I'(x), analytic

    double cdf(double x) const;   // I(x), accumulated from the lower boundary
    double tail(double x) const;  // 1 - I(x), accumulated from the upper boundary

    // Signed denominator of the deformation quotient: I+lambda (Generic),
    // I (Pursey), I-1 (Abraham-Moses), +inf (Undeformed, so correction
    // terms vanish identically). Assembled from cdf or tail, whichever side
    // is cancellation-free. Throws SingularityError (with the location) on
    // a vanishing or non-finite denominator; for Generic also when
    // |I+lambda| < 1e-14, which only tiny admissible lambda can reach.
    double denominator(const Deformation& d, double x) const;

private:
    const Family* fam_;
    GridSpec grid_;
    std::vector<double> nodes_;
    std::vector<double> prefix_;  // I(x_i)
    std::vector<double> suffix_;  // 1 - I(x_i)
    double err_est_ = 0.0;
};

IntegralTable compute_I(const Family& fam, const GridSpec& grid);

// phi(x) + I'/(I + lambda) and its partner-potential counterpart. The
// potential is assembled through the superpotential route
//   V(x,lambda) = V1(x) + 4 phi u + 2 u^2,  u = I'/(I+lambda),
// which follows from I'' = -2 phi I' (zero mode) and needs no differencing.
double phi_lambda(const Family& fam, const Deformation& d, double x,
                  const IntegralTable& table);
double v1_lambda(const Family& fam, const Deformation& d, double x,
                 const IntegralTable& table);

// sqrt(lambda(1+lambda)) psi0 / (I+lambda). Generic only: the Pursey and
// Abraham-Moses limits delete the ground state (the would-be state fails to
// normalize), so they are rejected; Undeformed returns psi0 itself.
double psi0_lambda(const Family& fam, const Deformation& d, double x,
                   const IntegralTable& table);

// The deformed (n+1)-th state psi_{n+1} + (I'/(I+lambda)) (psi' + phi psi)/E_{n+1},
// with the denominator replaced by I or I-1 in the Pursey/AM limits.
double psi_excited_lambda(const Family& fam, const Deformation& d, int n, double x,
                          const IntegralTable& table);

struct Spinor {
    double upper = 0.0;
    double lower = 0.0;
};

// Two-component Dirac eigenspinor of the deformed problem. n = -1 is the
// ground-state sentinel: (psi0_lambda, 0), the lower component exactly zero.
// Excited n >= 0 pairs the deformed upper component with the undeformed
// sector-2 state, which the deformation leaves untouched.
Spinor dirac_spinor_lambda(const Family& fam, const Deformation& d, int n, double x,
                           const IntegralTable& table);

}  // namespace isodirac
