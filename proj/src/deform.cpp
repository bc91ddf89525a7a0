#include "isodirac/deform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "isodirac/errors.hpp"

namespace isodirac {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Deformation Deformation::generic(double lambda) {
    if (!std::isfinite(lambda))
        throw DomainError("deformation: non-finite lambda; use the undeformed kind for the lambda -> inf limit");
    if (!(lambda > 0.0 || lambda < -1.0))
        throw DomainError("deformation: lambda must be > 0 or < -1 (for lambda in [-1, 0] the denominator I(x)+lambda vanishes inside the domain)");
    return {Kind::Generic, lambda};
}

std::string Deformation::label() const {
    switch (kind) {
        case Kind::Pursey: return "pursey";
        case Kind::AbrahamMoses: return "am";
        case Kind::Undeformed: return "undeformed";
        case Kind::Generic: break;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "lambda=%.17g", lambda);
    return buf;
}

IntegralTable::IntegralTable(const Family& fam, const GridSpec& grid)
    : fam_(&fam), grid_(grid), nodes_(grid.points()) {
    const DomainSpec dom = fam.domain();
    if (!(nodes_.front() > dom.lower) || (!dom.upper_infinite() && !(nodes_.back() < dom.upper)))
        throw UsageError("integral table: grid must sit strictly inside the open domain");

    auto density = [this](double x) {
        const double v = fam_->psi1(0, x);
        return v * v;
    };

    const int n = grid_.n;
    // error budget: the cumulative value at any node must be good to 1e-10,
    // so every piece (head, n-1 panels, tail) gets an equal share
    const double tol_piece = 1e-10 / (n + 1);

    std::vector<double> panel(n - 1);
    err_est_ = 0.0;
    const QuadResult head = adaptive_quad(density, dom.lower, nodes_.front(), tol_piece);
    err_est_ += head.err_est;
    for (int i = 0; i + 1 < n; ++i) {
        const QuadResult q = adaptive_quad(density, nodes_[i], nodes_[i + 1], tol_piece);
        panel[i] = std::max(q.value, 0.0);  // the integrand is a square
        err_est_ += q.err_est;
    }
    const QuadResult tail = dom.upper_infinite()
                                ? adaptive_quad_to_inf(density, nodes_.back(), tol_piece)
                                : adaptive_quad(density, nodes_.back(), dom.upper, tol_piece);
    err_est_ += tail.err_est;

    prefix_.resize(n);
    suffix_.resize(n);
    prefix_[0] = std::max(head.value, 0.0);
    for (int i = 1; i < n; ++i) prefix_[i] = prefix_[i - 1] + panel[i - 1];
    suffix_[n - 1] = std::max(tail.value, 0.0);
    for (int i = n - 2; i >= 0; --i) suffix_[i] = suffix_[i + 1] + panel[i];

    const double total = prefix_[n - 1] + suffix_[n - 1];
    if (std::abs(total - 1.0) > 1e-8) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "integral table: whole-domain integral is %.12g, expected 1 within 1e-8", total);
        throw QuadratureError(buf);
    }
}

double IntegralTable::psi0(double x) const { return fam_->psi1(0, x); }

double IntegralTable::psi0_sq(double x) const {
    const double v = fam_->psi1(0, x);
    return v * v;
}

namespace {

// panel index i with nodes[i] <= x < nodes[i+1], clamped to valid range
int locate(const std::vector<double>& nodes, double x) {
    const int n = (int)nodes.size();
    int i = (int)std::floor((x - nodes.front()) / (nodes[1] - nodes.front()));
    return std::clamp(i, 0, n - 2);
}

}  // namespace

double IntegralTable::cdf(double x) const {
    auto density = [this](double v) { return psi0_sq(v); };
    if (x <= nodes_.front()) {
        const double lo = fam_->domain().lower;
        if (x <= lo) return 0.0;
        return adaptive_quad(density, lo, x, 1e-13).value;
    }
    if (x >= nodes_.back()) {
        const double t = tail(x);
        return 1.0 - t;
    }
    const int i = locate(nodes_, x);
    if (x == nodes_[i]) return prefix_[i];
    return prefix_[i] + adaptive_quad(density, nodes_[i], x, 1e-13).value;
}

double IntegralTable::tail(double x) const {
    auto density = [this](double v) { return psi0_sq(v); };
    if (x >= nodes_.back()) {
        const DomainSpec dom = fam_->domain();
        if (!dom.upper_infinite() && x >= dom.upper) return 0.0;
        return dom.upper_infinite() ? adaptive_quad_to_inf(density, x, 1e-13).value
               : (x == dom.upper ? 0.0 : adaptive_quad(density, x, dom.upper, 1e-13).value);
    }
    if (x <= nodes_.front()) return 1.0 - cdf(x);
    const int i = locate(nodes_, x);
    if (x == nodes_[i + 1]) return suffix_[i + 1];
    return suffix_[i + 1] + adaptive_quad(density, x, nodes_[i + 1], 1e-13).value;
}

double IntegralTable::denominator(const Deformation& d, double x) const {
    double den = 0.0;
    switch (d.kind) {
        case Deformation::Kind::Undeformed:
            return kInf;
        case Deformation::Kind::Generic:
            if (d.lambda > 0.0)
                den = cdf(x) + d.lambda;
            else  // lambda < -1: I - 1 + (1 + lambda), both parts negative
                den = -(tail(x) + (-1.0 - d.lambda));
            if (std::abs(den) < 1e-14)
                throw SingularityError("deformation denominator I(x)+lambda vanished", x);
            break;
        case Deformation::Kind::Pursey:
            den = cdf(x);
            break;
        case Deformation::Kind::AbrahamMoses:
            den = -tail(x);
            break;
    }
    if (den == 0.0 || !std::isfinite(den))
        throw SingularityError("deformation denominator vanished", x);
    return den;
}

IntegralTable compute_I(const Family& fam, const GridSpec& grid) {
    return IntegralTable(fam, grid);
}

double phi_lambda(const Family& fam, const Deformation& d, double x,
                  const IntegralTable& table) {
    if (d.kind == Deformation::Kind::Undeformed) return fam.phi(x);
    return fam.phi(x) + table.psi0_sq(x) / table.denominator(d, x);
}

double v1_lambda(const Family& fam, const Deformation& d, double x,
                 const IntegralTable& table) {
    if (d.kind == Deformation::Kind::Undeformed) return fam.v1(x);
    const double u = table.psi0_sq(x) / table.denominator(d, x);
    if (!std::isfinite(u))
        throw SingularityError("deformation quotient I'/(I+lambda) is non-finite", x);
    return fam.v1(x) + 4.0 * fam.phi(x) * u + 2.0 * u * u;
}

double psi0_lambda(const Family& fam, const Deformation& d, double x,
                   const IntegralTable& table) {
    switch (d.kind) {
        case Deformation::Kind::Undeformed:
            return fam.psi1(0, x);
        case Deformation::Kind::Pursey:
        case Deformation::Kind::AbrahamMoses:
            throw UsageError("the Pursey and Abraham-Moses limits have no ground state (it is the deleted level)");
        case Deformation::Kind::Generic:
            break;
    }
    const double norm = std::sqrt(d.lambda * (1.0 + d.lambda));
    return norm * fam.psi1(0, x) / table.denominator(d, x);
}

double psi_excited_lambda(const Family& fam, const Deformation& d, int n, double x,
                          const IntegralTable& table) {
    const double psi = fam.psi1(n + 1, x);
    if (d.kind == Deformation::Kind::Undeformed) return psi;
    const double e = fam.energy1(n + 1);
    const double intertwined = fam.psi1_prime(n + 1, x) + fam.phi(x) * psi;
    const double u = table.psi0_sq(x) / table.denominator(d, x);
    if (!std::isfinite(u))
        throw SingularityError("deformation quotient I'/(I+lambda) is non-finite", x);
    return psi + u * intertwined / e;
}

Spinor dirac_spinor_lambda(const Family& fam, const Deformation& d, int n, double x,
                           const IntegralTable& table) {
    if (n == -1) return {psi0_lambda(fam, d, x, table), 0.0};
    if (n < -1) throw IndexError("spinor index must be >= -1 (-1 denotes the ground state)");
    return {psi_excited_lambda(fam, d, n, x, table), fam.psi2(n, x)};
}

}  // namespace isodirac
