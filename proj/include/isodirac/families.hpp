#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "isodirac/numerics.hpp"

namespace isodirac {

enum class FamilyKind { RadialOscillator, ScarfI, GPT };

// Parameters of the three rationally extended families, plus the extension
// order m (the degree of the polynomial sitting in the denominators).
struct FamilyParams {
    FamilyKind kind = FamilyKind::RadialOscillator;
    int m = 1;
    double omega = 0.0, ell = 0.0;  // radial oscillator
    double A = 0.0, B = 0.0;        // Scarf-I / generalized Poschl-Teller

    static FamilyParams radial_oscillator(double omega, double ell, int m = 1);
    static FamilyParams scarf1(double A, double B, int m = 1);
    static FamilyParams gpt(double A, double B, int m = 1);

    // omega > 0 and ell > 0; 0 < B < A-1 for Scarf-I; B > A+1 > 1 for GPT;
    // m >= 1. Throws DomainError otherwise.
    void validate() const;
    std::string label() const;  // e.g. "radial(omega=3, ell=1, m=1)"
    const char* name() const;   // "radial" | "scarf" | "gpt"
};

struct DomainSpec {
    double lower = 0.0;
    double upper = 0.0;  // +inf for the half-line families
    const char* coordinate = "x";
    bool upper_infinite() const;
};

struct SpectralLine {
    int n = 0;
    double E = 0.0;        // Schrodinger-like eigenvalue, epsilon^2
    double epsilon = 0.0;  // Dirac energy, positive branch
    int sector = 1;        // which partner Hamiltonian
};

// One rationally extended family at fixed parameters: superpotential phi,
// partner potentials phi^2 -+ phi', the bound-state eigenfunctions of both
// sectors, and the analytic spectrum. Everything is evaluated from the
// polynomial layer; derivatives are assembled from the derivative
// identities, never by differencing.
//
// Normalization: the radial oscillator uses its explicit closed-form
// constant; the two Jacobi-type families are normalized by quadrature
// (cached per level, internally synchronized) with the sign fixed so that
// each eigenfunction is positive as x approaches the lower boundary.
class Family {
public:
    explicit Family(const FamilyParams& p);

    const FamilyParams& params() const { return p_; }
    DomainSpec domain() const;

    // Default sampling grid, sized so |psi1(0, x_max)| < 1e-12 * max|psi1(0)|
    // (asserted) and dense enough for the extrapolated eigensolver's 1e-3
    // eigenvalue tolerance.
    GridSpec default_grid() const;

    double phi(double x) const;
    double phi_prime(double x) const;
    double v1(double x) const;  // phi^2 - phi'
    double v2(double x) const;  // phi^2 + phi'

    // Sector-1 eigenfunction and its derivative, normalized. n counts from
    // the zero-energy ground state.
    double psi1(int n, double x) const;
    double psi1_prime(int n, double x) const;

    // Sector-2 eigenfunction via (d/dx + phi) psi1(n+1) / sqrt(E_{n+1});
    // unit-normalized automatically since the intertwiner preserves norms.
    double psi2(int n, double x) const;

    double energy1(int n) const;  // E^(1)_n; E^(1)_0 = 0 exactly
    double energy2(int n) const { return energy1(n + 1); }

    // Number of bound states in sector 1; -1 means infinitely many.
    int bound_count1() const;

    // Analytic spectrum of the requested sector, truncated to the actual
    // bound range (relevant for GPT).
    std::vector<SpectralLine> spectrum(int sector, int count) const;

private:
    void check_bound_index(int n) const;
    double alpha() const;
    double beta() const;
    double norm_factor(int n) const;  // signed; cached for the Jacobi families
    double psi1_raw(int n, double x) const;
    double psi1_raw_prime(int n, double x) const;
    void check_domain(double x) const;

    FamilyParams p_;
    mutable std::mutex norm_mutex_;
    mutable std::map<int, double> norm_cache_;
};

}  // namespace isodirac
