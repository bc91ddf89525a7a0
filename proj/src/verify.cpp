#include "isodirac/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isodirac/errors.hpp"
#include "isodirac/fixtures.hpp"
#include "isodirac/numerics.hpp"
#include "isodirac/version.hpp"

namespace isodirac {

namespace {

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

std::string describe(const GridSpec& g) {
    return strf("[%.17g, %.17g], n=%d", g.x_min, g.x_max, g.n);
}

std::vector<double> window_samples(const GridSpec& g, double lo_frac, double hi_frac, int count) {
    double span = g.x_max - g.x_min;
    double lo = g.x_min + lo_frac * span;
    double hi = g.x_min + hi_frac * span;
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return xs;
}

// An eigensolve that cannot certify its own convergence at the configured
// grid is a failed verification, not a tool malfunction: record the drift it
// measured against the solver's consistency bound (so the report names the
// violated tolerance) and let the remaining checks run.
bool solve_or_flag(VerificationReport& rep, const std::string& name, const char* citation,
                   const std::function<double(double)>& V, const GridSpec& grid, int k,
                   std::vector<double>& ev) {
    try {
        ev = fd_eigensolve(V, grid, k);
        return true;
    } catch (const ConvergenceError& e) {
        rep.add(name, citation, e.moved, e.tolerance, e.what());
        return false;
    }
}

}  // namespace

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, std::string citation, double measured,
                             double tolerance, std::string note) {
    Check c;
    c.name = std::move(name);
    c.citation = std::move(citation);
    c.measured = measured;
    c.tolerance = tolerance;
    c.pass = std::isfinite(measured) && measured <= tolerance;
    c.note = std::move(note);
    checks.push_back(std::move(c));
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
    for (const Check& c : other.checks) {
        checks.push_back(c);
        checks.back().name = prefix + c.name;
    }
}

VerificationReport check_isospectrality(const Family& fam, const GridSpec& grid,
                                        const std::vector<double>& lambdas, int k) {
    VerificationReport rep;
    rep.subject = fam.params().label() + ", isospectrality";
    rep.grid_note = describe(grid);
    if (lambdas.empty()) return rep;  // nothing requested, trivially passing

    const char* base_claim = "computed sector-1 levels match the analytic bound-state energies";
    std::vector<double> base;
    if (solve_or_flag(rep, "spectrum/base", base_claim,
                      [&fam](double x) { return fam.v1(x); }, grid, k, base)) {
        double worst = 0.0;
        for (int i = 0; i < k; ++i) worst = std::max(worst, std::abs(base[i] - fam.energy1(i)));
        rep.add("spectrum/base", base_claim, worst, 2e-3);
    }

    auto table = compute_I(fam, grid);
    const char* iso_claim = "the deformed potential is strictly isospectral to the undeformed one";
    for (double lam : lambdas) {
        Deformation d = Deformation::generic(lam);
        std::vector<double> ev;
        if (!solve_or_flag(rep, strf("spectrum/lambda=%g", lam), iso_claim,
                           [&](double x) { return v1_lambda(fam, d, x, table); }, grid, k, ev))
            continue;
        // compare against the undeformed solve at the same discretization when
        // it converged (common bias cancels), else against the analytic levels
        double diff = 0.0;
        for (int i = 0; i < k; ++i)
            diff = std::max(diff, std::abs(ev[i] - (base.empty() ? fam.energy1(i) : base[i])));
        rep.add(strf("spectrum/lambda=%g", lam), iso_claim, diff, 2e-3);
    }
    return rep;
}

VerificationReport check_state_deletion(const Family& fam, const GridSpec& grid,
                                        Deformation::Kind kind, int k) {
    Deformation d;
    switch (kind) {
        case Deformation::Kind::Pursey:
            d = Deformation::pursey();
            break;
        case Deformation::Kind::AbrahamMoses:
            d = Deformation::abraham_moses();
            break;
        default:
            throw UsageError("state-deletion check applies to the Pursey and Abraham-Moses limits only");
    }

    VerificationReport rep;
    rep.subject = fam.params().label() + ", " + d.label() + " limit";
    rep.grid_note = describe(grid);

    auto table = compute_I(fam, grid);
    const char* del_claim =
        "the limiting potential carries the undeformed spectrum with the ground level removed";
    std::vector<double> ev;
    if (!solve_or_flag(rep, "deleted-spectrum", del_claim,
                       [&](double x) { return v1_lambda(fam, d, x, table); }, grid, k, ev))
        return rep;
    for (double e : ev)
        if (e < -1e-2)
            throw NumericalError(strf(
                "state-deletion eigensolve for %s found a spurious level E=%.6g below zero; "
                "the grid does not resolve the deformed potential",
                d.label().c_str(), e));

    double worst = 0.0;
    for (int i = 0; i < k; ++i) worst = std::max(worst, std::abs(ev[i] - fam.energy2(i)));
    rep.add("deleted-spectrum", del_claim, worst, 2e-3);

    // If the E=0 level survived the limit it would show up as the lowest
    // eigenvalue, far below the expected sector-2 ground level.
    double below = std::max(0.0, fam.energy2(0) - ev[0]);
    rep.add("no-level-near-zero", "no eigenvalue survives near the deleted zero-energy level",
            below, 2e-3);
    return rep;
}

VerificationReport check_susy_relations(const Family& fam, const GridSpec& grid, int n_max) {
    VerificationReport rep;
    rep.subject = fam.params().label() + ", partnership identities";
    rep.grid_note = describe(grid);

    // Sample an interior window: the outer 10-15% is where the hard walls
    // live, and the finite-difference stencils would only probe roundoff
    // against potentials of order 1/eps^2 there.
    const auto xs = window_samples(grid, 0.10, 0.85, 60);
    const double scale = std::max(1.0, (grid.x_max - grid.x_min) / 8.0);
    const double h1 = 1e-5 * scale;  // first derivatives
    const double h2 = 1e-3 * scale;  // second derivatives, larger to tame roundoff

    const int bound1 = fam.bound_count1();
    auto top_index = [bound1, n_max](int consumed_offset) {
        if (bound1 < 0) return n_max;
        return std::min(n_max, bound1 - 1 - consumed_offset);
    };

    {
        double worst = 0.0, wx = xs.front();
        for (double x : xs) {
            double dlog = central_diff([&fam](double t) { return std::log(fam.psi1(0, t)); }, x,
                                       1, h1);
            double r = std::abs(fam.phi(x) + dlog);
            if (r > worst) { worst = r; wx = x; }
        }
        rep.add("zero-mode",
                "the superpotential equals minus the log-derivative of the nodeless zero mode",
                worst, 1e-8, strf("worst at x=%.6g", wx));
    }

    for (int n = 0; n <= top_index(1); ++n) {
        double se = std::sqrt(fam.energy1(n + 1));
        double worst = 0.0, wx = xs.front();
        for (double x : xs) {
            double dpsi = central_diff([&fam, n](double t) { return fam.psi1(n + 1, t); }, x, 1,
                                       h1);
            double r = std::abs(dpsi + fam.phi(x) * fam.psi1(n + 1, x) - se * fam.psi2(n, x));
            if (r > worst) { worst = r; wx = x; }
        }
        rep.add(strf("intertwine/n=%d", n),
                "the first-order intertwiner maps sector-1 state n+1 onto sqrt(E) times "
                "sector-2 state n",
                worst, 1e-6, strf("worst at x=%.6g", wx));
    }

    auto residual = [&](int n, int sector) {
        double e = sector == 1 ? fam.energy1(n) : fam.energy2(n);
        double peak = 0.0;
        for (double x : xs)
            peak = std::max(peak, std::abs(sector == 1 ? fam.psi1(n, x) : fam.psi2(n, x)));
        double worst = 0.0, wx = xs.front();
        for (double x : xs) {
            auto f = [&](double t) { return sector == 1 ? fam.psi1(n, t) : fam.psi2(n, t); };
            double v = sector == 1 ? fam.v1(x) : fam.v2(x);
            double r = std::abs(-central_diff(f, x, 2, h2) + (v - e) * f(x)) / peak;
            if (r > worst) { worst = r; wx = x; }
        }
        rep.add(strf("schrodinger/sector%d/n=%d", sector, n),
                sector == 1 ? "sector-1 eigenfunctions satisfy their wave equation pointwise"
                            : "sector-2 eigenfunctions satisfy their wave equation pointwise",
                worst, 1e-6, strf("worst at x=%.6g", wx));
    };
    for (int n = 0; n <= top_index(0); ++n) residual(n, 1);
    for (int n = 0; n <= top_index(1); ++n) residual(n, 2);

    const auto nodes = grid.points();
    for (int n = 0; n <= top_index(0); ++n) {
        int count = 0, prev = 0;
        for (double x : nodes) {
            double v = fam.psi1(n, x);
            int s = (v > 0.0) - (v < 0.0);
            if (s != 0 && prev != 0 && s != prev) ++count;
            if (s != 0) prev = s;
        }
        rep.add(strf("nodes/n=%d", n), "bound state n has exactly n interior sign changes",
                std::abs(count - n), 0.5);
    }
    return rep;
}

namespace {

struct FixtureRange {
    double lo, hi;
};

void fixture_scan(VerificationReport& rep, const std::string& name, const char* citation,
                  FixtureRange rng, const std::function<double(double)>& engine,
                  const std::function<double(double)>& fixture, double tol) {
    const int n = 200;
    double worst = 0.0, wx = rng.lo;
    for (int i = 0; i < n; ++i) {
        double x = rng.lo + (rng.hi - rng.lo) * static_cast<double>(i) / (n - 1);
        double d = std::abs(engine(x) - fixture(x));
        if (d > worst) { worst = d; wx = x; }
    }
    rep.add(name, citation, worst, tol, strf("worst at x=%.6g", wx));
}

// Independent route to the deformed potential: square the deformed
// superpotential and differentiate it numerically. If this agrees with the
// engine while a fixture above disagrees, the fixture transcription is the
// suspect, not the machinery.
bool two_route_probe(VerificationReport& rep, const std::string& name, const Family& fam,
                     const IntegralTable& table, FixtureRange rng) {
    Deformation d = Deformation::generic(1.0);
    const double h = 1e-5 * std::max(1.0, (rng.hi - rng.lo) / 8.0);
    const int n = 40;
    double worst = 0.0, wx = rng.lo;
    for (int i = 0; i < n; ++i) {
        double x = rng.lo + (rng.hi - rng.lo) * static_cast<double>(i) / (n - 1);
        double v = v1_lambda(fam, d, x, table);
        double w = phi_lambda(fam, d, x, table);
        double wp = central_diff([&](double t) { return phi_lambda(fam, d, t, table); }, x, 1, h);
        double r = std::abs(v - (w * w - wp)) / std::max(1.0, std::abs(v));
        if (r > worst) { worst = r; wx = x; }
    }
    rep.add(name,
            "the deformed potential assembled from superpotential identities matches direct "
            "differentiation",
            worst, 1e-6, strf("worst at x=%.6g", wx));
    return rep.checks.back().pass;
}

void flag_transcription_suspects(VerificationReport& rep, size_t begin, size_t end,
                                 bool self_ok) {
    if (!self_ok) return;
    for (size_t i = begin; i < end; ++i) {
        if (rep.checks[i].pass) continue;
        if (!rep.checks[i].note.empty()) rep.checks[i].note += "; ";
        rep.checks[i].note +=
            "engine self-check passes, suspect a transcription slip in this closed form";
    }
}

void closed_forms_radial(VerificationReport& rep) {
    Family fam(FamilyParams::radial_oscillator(3.0, 1.0, 1));
    auto table = compute_I(fam, fam.default_grid());
    Deformation lam1 = Deformation::generic(1.0);
    Deformation pur = Deformation::pursey();
    Deformation am = Deformation::abraham_moses();

    size_t begin = rep.checks.size();
    fixture_scan(rep, "radial/superpotential",
                 "the worked-example superpotential agrees with the general construction",
                 {0.05, 6.0}, [&](double r) { return fam.phi(r); },
                 fixtures::radial_superpotential, 1e-9);
    fixture_scan(rep, "radial/ground-cdf",
                 "the accumulated zero-mode probability matches its closed form", {0.05, 6.0},
                 [&](double r) { return table.cdf(r); }, fixtures::radial_ground_cdf, 1e-8);
    fixture_scan(rep, "radial/family(lambda=1)",
                 "the lambda-family superpotential matches its closed form", {0.1, 6.0},
                 [&](double r) { return phi_lambda(fam, lam1, r, table); },
                 [](double r) { return fixtures::radial_superpotential_family(r, 1.0); }, 1e-7);
    fixture_scan(rep, "radial/pursey",
                 "the Pursey-limit superpotential matches its closed form", {0.1, 6.0},
                 [&](double r) { return phi_lambda(fam, pur, r, table); },
                 fixtures::radial_superpotential_pursey, 1e-6);
    // The printed Abraham-Moses form subtracts 1 from an error function, so
    // past r ~ 3.5 it has no correct digits left in double precision. Stop
    // the comparison before the fixture itself degrades.
    fixture_scan(rep, "radial/abraham-moses",
                 "the Abraham-Moses-limit superpotential matches its closed form", {0.1, 3.0},
                 [&](double r) { return phi_lambda(fam, am, r, table); },
                 fixtures::radial_superpotential_am, 1e-6);
    size_t end = rep.checks.size();
    bool ok = two_route_probe(rep, "radial/two-route-potential", fam, table, {0.1, 6.0});
    flag_transcription_suspects(rep, begin, end, ok);
}

void closed_forms_scarf(VerificationReport& rep) {
    Family fam(FamilyParams::scarf1(4.0, 2.0, 1));
    auto table = compute_I(fam, fam.default_grid());
    Deformation lam1 = Deformation::generic(1.0);
    Deformation pur = Deformation::pursey();
    Deformation am = Deformation::abraham_moses();

    size_t begin = rep.checks.size();
    fixture_scan(rep, "scarf/superpotential",
                 "the worked-example superpotential agrees with the general construction",
                 {-1.45, 1.45}, [&](double x) { return fam.phi(x); },
                 fixtures::scarf_superpotential, 1e-9);
    fixture_scan(rep, "scarf/ground-cdf",
                 "the accumulated zero-mode probability matches its closed form", {-1.45, 1.45},
                 [&](double x) { return table.cdf(x); }, fixtures::scarf_ground_cdf, 1e-8);
    fixture_scan(rep, "scarf/family(lambda=1)",
                 "the lambda-family superpotential matches its closed form", {-1.4, 1.4},
                 [&](double x) { return phi_lambda(fam, lam1, x, table); },
                 [](double x) { return fixtures::scarf_superpotential_family(x, 1.0); }, 1e-6);
    // Near the left wall the printed Pursey denominator cancels terms of size
    // ~1e5 down to I(x), which is ~1e-13 at x = -1.4, so in double precision
    // the closed form keeps no digits there. Start the comparison where it
    // still carries eight or so (the construction itself has no trouble: the
    // two-route probe below covers the full window).
    fixture_scan(rep, "scarf/pursey",
                 "the Pursey-limit superpotential matches its closed form", {-1.1, 1.4},
                 [&](double x) { return phi_lambda(fam, pur, x, table); },
                 fixtures::scarf_superpotential_pursey, 1e-6);
    fixture_scan(rep, "scarf/abraham-moses",
                 "the Abraham-Moses-limit superpotential matches its closed form", {-1.4, 1.4},
                 [&](double x) { return phi_lambda(fam, am, x, table); },
                 fixtures::scarf_superpotential_am, 1e-6);
    size_t end = rep.checks.size();
    bool ok = two_route_probe(rep, "scarf/two-route-potential", fam, table, {-1.4, 1.4});
    flag_transcription_suspects(rep, begin, end, ok);
}

void closed_forms_gpt(VerificationReport& rep) {
    Family fam(FamilyParams::gpt(2.0, 5.0, 1));
    auto table = compute_I(fam, fam.default_grid());
    Deformation lam1 = Deformation::generic(1.0);
    Deformation pur = Deformation::pursey();
    Deformation am = Deformation::abraham_moses();

    size_t begin = rep.checks.size();
    fixture_scan(rep, "gpt/superpotential",
                 "the worked-example superpotential agrees with the general construction",
                 {0.2, 10.0}, [&](double r) { return fam.phi(r); }, fixtures::gpt_superpotential,
                 1e-9);
    fixture_scan(rep, "gpt/ground-cdf",
                 "the accumulated zero-mode probability matches its closed form", {0.2, 10.0},
                 [&](double r) { return table.cdf(r); }, fixtures::gpt_ground_cdf, 1e-8);
    fixture_scan(rep, "gpt/family(lambda=1)",
                 "the lambda-family superpotential matches its closed form", {0.2, 10.0},
                 [&](double r) { return phi_lambda(fam, lam1, r, table); },
                 [](double r) { return fixtures::gpt_superpotential_family(r, 1.0); }, 1e-6);
    fixture_scan(rep, "gpt/pursey",
                 "the Pursey-limit superpotential matches its closed form", {0.2, 10.0},
                 [&](double r) { return phi_lambda(fam, pur, r, table); },
                 fixtures::gpt_superpotential_pursey, 1e-6);
    // The two leading terms of the printed Abraham-Moses denominator cancel
    // to relative size exp(-4r), so in double precision the fixture is
    // meaningless past r ~ 7. Compare where it still carries digits.
    fixture_scan(rep, "gpt/abraham-moses",
                 "the Abraham-Moses-limit superpotential matches its closed form", {0.2, 6.0},
                 [&](double r) { return phi_lambda(fam, am, r, table); },
                 fixtures::gpt_superpotential_am, 1e-6);
    size_t end = rep.checks.size();
    bool ok = two_route_probe(rep, "gpt/two-route-potential", fam, table, {0.2, 10.0});
    flag_transcription_suspects(rep, begin, end, ok);
}

bool matches_pinned_example(const FamilyParams& p) {
    if (p.m != 1) return false;
    switch (p.kind) {
        case FamilyKind::RadialOscillator:
            return p.omega == 3.0 && p.ell == 1.0;
        case FamilyKind::ScarfI:
            return p.A == 4.0 && p.B == 2.0;
        case FamilyKind::GPT:
            return p.A == 2.0 && p.B == 5.0;
    }
    return false;
}

}  // namespace

VerificationReport check_closed_forms() {
    VerificationReport rep;
    rep.subject = "worked-example closed forms, m=1";
    rep.grid_note = "family default grids";
    closed_forms_radial(rep);
    closed_forms_scarf(rep);
    closed_forms_gpt(rep);
    return rep;
}

VerificationReport verify_family(const FamilyParams& params, const GridSpec& grid,
                                 const std::vector<double>& lambdas) {
    Family fam(params);
    VerificationReport rep;
    rep.subject = params.label();
    rep.grid_note = describe(grid);

    // Level counts chosen so that a deliberately coarse grid is caught: the
    // top level of each set has enough curvature that its Richardson error
    // blows through 2e-3 well before n drops to the validation floor.
    int k = 0;
    switch (params.kind) {
        case FamilyKind::RadialOscillator: k = 5; break;
        case FamilyKind::ScarfI:           k = 3; break;
        case FamilyKind::GPT:              k = 2; break;
    }
    const int bound1 = fam.bound_count1();
    if (bound1 >= 0) k = std::min(k, bound1);
    int kdel = std::max(1, k - 1);
    if (bound1 >= 0) kdel = std::min(kdel, bound1 - 1);

    rep.append(check_isospectrality(fam, grid, lambdas, k), "isospectrality/");
    rep.append(check_state_deletion(fam, grid, Deformation::Kind::Pursey, kdel), "pursey/");
    rep.append(check_state_deletion(fam, grid, Deformation::Kind::AbrahamMoses, kdel),
               "abraham-moses/");
    rep.append(check_susy_relations(fam, grid, 3), "susy/");

    if (matches_pinned_example(params)) {
        VerificationReport cf;
        switch (params.kind) {
            case FamilyKind::RadialOscillator: closed_forms_radial(cf); break;
            case FamilyKind::ScarfI:           closed_forms_scarf(cf); break;
            case FamilyKind::GPT:              closed_forms_gpt(cf); break;
        }
        rep.append(cf, "closed-forms/");
    }
    return rep;
}

std::string to_text(const VerificationReport& r) {
    std::string out;
    out += "verification report\n";
    out += "subject: " + r.subject + "\n";
    out += "grid: " + r.grid_note + "\n";
    out += strf("tool: isodirac %s\n\n", kVersion);
    int npass = 0;
    for (const Check& c : r.checks) {
        out += strf("[%s] %s\n", c.pass ? "pass" : "FAIL", c.name.c_str());
        out += "       claim: " + c.citation + "\n";
        out += strf("       measured: %.9e  tolerance: %g\n", c.measured, c.tolerance);
        if (!c.note.empty()) out += "       note: " + c.note + "\n";
        npass += c.pass ? 1 : 0;
    }
    out += strf("\noverall: %s (%d/%zu checks)\n", r.overall() ? "PASS" : "FAIL", npass,
                r.checks.size());
    return out;
}

std::string to_tree(const VerificationReport& r) {
    nlohmann::json j;
    j["report"] = "verification";
    j["subject"] = r.subject;
    j["grid"] = r.grid_note;
    j["tool"]["name"] = "isodirac";
    j["tool"]["version"] = kVersion;
    j["overall"] = r.overall();
    auto arr = nlohmann::json::array();
    for (const Check& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["citation"] = c.citation;
        jc["measured"] = c.measured;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace isodirac
