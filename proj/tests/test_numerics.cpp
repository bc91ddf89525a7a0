#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "isodirac/errors.hpp"
#include "isodirac/numerics.hpp"
#include "oracle_constants.hpp"

using namespace isodirac;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("grid validation") {
    GridSpec g{0.0, 1.0, 200};
    CHECK_NOTHROW(g.validate());
    CHECK(g.points().size() == 200);
    CHECK(g.points().front() == 0.0);
    CHECK(g.points().back() == 1.0);

    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 199}.validate()), UsageError);
    CHECK_THROWS_AS((GridSpec{1.0, 1.0, 400}.validate()), UsageError);
    CHECK_THROWS_AS((GridSpec{2.0, 1.0, 400}.validate()), UsageError);
    double nan = std::nan("");
    CHECK_THROWS_AS((GridSpec{nan, 1.0, 400}.validate()), UsageError);
}

TEST_CASE("adaptive quadrature on smooth integrands") {
    auto r1 = adaptive_quad([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(r1.value - 1.0 / 3.0) <= 1e-14);
    CHECK(r1.err_est <= 1e-12);

    auto r2 = adaptive_quad([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(std::abs(r2.value - 2.0) <= 1e-13);

    auto r3 = adaptive_quad([](double x) { return std::sin(x); }, 0.0, 2.0 * kPi, 1e-12);
    CHECK(std::abs(r3.value) <= 1e-12);
}

TEST_CASE("gaussian tail integral to infinity") {
    auto r = adaptive_quad_to_inf([](double x) { return std::exp(-x * x); }, 0.0, 1e-13);
    double exact = std::sqrt(kPi) / 2.0;
    CHECK(std::abs(r.value - exact) <= 1e-12);
    CHECK(std::abs(r.value - exact) <= std::max(r.err_est, 1e-15));

    // from a shifted start the same integral is the erf complement
    auto r2 = adaptive_quad_to_inf([](double x) { return std::exp(-x * x); }, 2.0, 1e-13);
    double exact2 = std::sqrt(kPi) / 2.0 * (1.0 - oracle::kErf_2);
    CHECK(std::abs(r2.value - exact2) <= 1e-13);

    auto r3 = adaptive_quad_to_inf([](double x) { return std::exp(-x); }, 0.0, 1e-12);
    CHECK(std::abs(r3.value - 1.0) <= 1e-11);
}

TEST_CASE("quadrature failure modes") {
    // endpoint singularity: the error estimate shrinks slower than the
    // halving tolerance, so subdivision bottoms out
    CHECK_THROWS_AS(adaptive_quad([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10),
                    QuadratureError);
    // non-finite samples are rejected outright
    CHECK_THROWS_AS(adaptive_quad([](double) { return std::nan(""); }, 0.0, 1.0, 1e-8),
                    QuadratureError);
    CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 1.0, 0.0, 1e-8), UsageError);
    CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 0.0, 1.0, 0.0), UsageError);
}

TEST_CASE("finite-difference eigenvalues of the harmonic well") {
    GridSpec g{-8.0, 8.0, 1200};
    auto ev = fd_eigensolve([](double x) { return x * x; }, g, 3);
    REQUIRE(ev.size() == 3);
    CHECK(std::abs(ev[0] - 1.0) <= 1e-4);
    CHECK(std::abs(ev[1] - 3.0) <= 1e-4);
    CHECK(std::abs(ev[2] - 5.0) <= 1e-4);

    CHECK_THROWS_AS(fd_eigensolve([](double x) { return x * x; }, g, 16), UsageError);
    CHECK_THROWS_AS(fd_eigensolve([](double x) { return x * x; }, g, 0), UsageError);
    GridSpec bad{-8.0, 8.0, 900};
    CHECK_THROWS_AS(
        fd_eigensolve([](double x) { return std::abs(x) < 0.005 ? std::nan("") : x * x; }, bad,
                      1),
        NumericalError);
}

TEST_CASE("raw eigensolver converges at second order") {
    GridSpec coarse{-8.0, 8.0, 500};
    GridSpec fine{-8.0, 8.0, 999};  // exactly half the spacing
    auto e1 = fd_eigensolve_raw([](double x) { return x * x; }, coarse, 1);
    auto e2 = fd_eigensolve_raw([](double x) { return x * x; }, fine, 1);
    double err1 = std::abs(e1[0] - 1.0);
    double err2 = std::abs(e2[0] - 1.0);
    double ratio = err1 / err2;
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("central differences") {
    double d1 = central_diff([](double x) { return std::sin(x); }, 0.7, 1, 1e-3);
    CHECK(std::abs(d1 - std::cos(0.7)) <= 1e-10);
    double d2 = central_diff([](double x) { return std::sin(x); }, 0.7, 2, 1e-3);
    CHECK(std::abs(d2 + std::sin(0.7)) <= 1e-8);
    CHECK_THROWS_AS(central_diff([](double x) { return x; }, 0.0, 3, 1e-3), UsageError);
}
