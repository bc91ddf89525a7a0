#include "isodirac/fixtures.hpp"

#include <cmath>

#include "isodirac/specfun.hpp"

namespace isodirac::fixtures {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

// ---------------------------------------------------------------- radial --

double radial_superpotential(double r) {
    // omega r/2 - (ell+1)/r + 4 omega r / ((1+2ell+omega r^2)(3+2ell+omega r^2))
    return 1.5 * r - 2.0 / r + 12.0 * r / ((3.0 + 3.0 * r * r) * (5.0 + 3.0 * r * r));
}

double radial_ground_cdf(double r) {
    const double r2 = r * r;
    return -std::exp(-1.5 * r2) * std::sqrt(6.0 / kPi) * r * (5.0 + 10.0 * r2 + 3.0 * r2 * r2)
               / (5.0 * (1.0 + r2))
           + specfun::erf(std::sqrt(1.5) * r);
}

namespace {

// the four polynomial-times-exponential pieces of the deformed radial form
double zeta(double r) {
    const double r2 = r * r;
    return std::sqrt(6.0 / kPi) * r
           * (100.0 + 145.0 * r2 + 195.0 * r2 * r2 + 117.0 * r2 * r2 * r2
              + 27.0 * r2 * r2 * r2 * r2);
}
double xi(double r) {
    const double r2 = r * r;
    return 5.0 * std::exp(1.5 * r2)
           * (-20.0 - 9.0 * r2 + 12.0 * r2 * r2 + 9.0 * r2 * r2 * r2);
}
double vartheta(double r) {
    const double r2 = r * r;
    return std::sqrt(6.0 / kPi) * r * (5.0 + 3.0 * r2) * (5.0 + 10.0 * r2 + 3.0 * r2 * r2);
}
double upsilon(double r) {
    const double r2 = r * r;
    return 5.0 * std::exp(1.5 * r2) * (5.0 + 8.0 * r2 + 3.0 * r2 * r2);
}

double radial_family_at(double r, double shifted) {
    // shifted = lambda + erf(sqrt(3/2) r), or its Pursey/AM specialization
    return -(zeta(r) + xi(r) * shifted)
           / (2.0 * r * (vartheta(r) - upsilon(r) * shifted));
}

}  // namespace

double radial_superpotential_family(double r, double lambda) {
    return radial_family_at(r, lambda + specfun::erf(std::sqrt(1.5) * r));
}

double radial_superpotential_pursey(double r) {
    return radial_family_at(r, specfun::erf(std::sqrt(1.5) * r));
}

double radial_superpotential_am(double r) {
    return radial_family_at(r, -1.0 + specfun::erf(std::sqrt(1.5) * r));
}

// ---------------------------------------------------------------- Scarf-I --

double scarf_superpotential(double x) {
    return 4.0 * std::tan(x) - 2.0 / std::cos(x)
           + 8.0 * std::cos(x) / (-71.0 + 8.0 * std::cos(2.0 * x) + 64.0 * std::sin(x));
}

double scarf_ground_cdf(double x) {
    return (1.0 / (32760.0 * kPi * (-7.0 + 4.0 * std::sin(x))))
           * (-114660.0 * (kPi + 2.0 * x) + 244608.0 * std::cos(x)
              + 59696.0 * std::cos(3.0 * x) + 11984.0 * std::cos(5.0 * x)
              - 854.0 * std::cos(7.0 * x) - 42.0 * std::cos(9.0 * x)
              + 65520.0 * (kPi + 2.0 * x) * std::sin(x) - 125216.0 * std::sin(2.0 * x)
              + 3416.0 * std::sin(4.0 * x) + 5984.0 * std::sin(6.0 * x)
              + 141.0 * std::sin(8.0 * x));
}

namespace {

// helper combinations shared by the three deformed Scarf rows
double sc_M(double x) {
    return -5000996.0 * std::cos(x) + 780528.0 * std::cos(3.0 * x)
           + 50540.0 * std::cos(5.0 * x) + 29003.0 * std::cos(7.0 * x)
           + 2345.0 * std::cos(9.0 * x) + 84.0 * std::cos(11.0 * x)
           + 3122840.0 * std::sin(2.0 * x);
}
double sc_S(double x) {
    return -35.0 * std::cos(2.0 * x) - 107.0 * std::sin(x) + 4.0 * std::sin(3.0 * x);
}
double sc_G(double x) {
    return -208840.0 * std::sin(4.0 * x) - 49335.0 * std::sin(6.0 * x)
           + 685.0 * std::sin(8.0 * x) + 177.0 * std::sin(10.0 * x);
}
double sc_H(double x) {
    return 59696.0 * std::cos(3.0 * x) + 11984.0 * std::cos(5.0 * x)
           - 854.0 * std::cos(7.0 * x) - 42.0 * std::cos(9.0 * x)
           + 3416.0 * std::sin(4.0 * x) + 5984.0 * std::sin(6.0 * x)
           + 141.0 * std::sin(8.0 * x);
}
double sc_D(double x) {
    return 168.0 - 172.0 * std::sin(x) + 45.0 * (kPi + 2.0 * x) * std::tan(x);
}

}  // namespace

double scarf_superpotential_family(double x, double lambda) {
    const double shifted = kPi + 2.0 * x + 2.0 * kPi * lambda;
    return -2.0 * (sc_G(x) + sc_M(x) + 16380.0 * (137.0 + 2.0 * sc_S(x)) * shifted)
           / std::cos(x)
           / ((-9.0 + 4.0 * std::sin(x))
              * (sc_H(x) - 114660.0 * shifted + 1456.0 * sc_D(x) * std::cos(x)
                 + 131040.0 * kPi * lambda * std::sin(x)));
}

double scarf_superpotential_pursey(double x) {
    return -2.0
           * (sc_G(x) + sc_M(x) + 16380.0 * (137.0 + 2.0 * sc_S(x)) * (kPi + 2.0 * x))
           / std::cos(x)
           / ((sc_H(x) - 114660.0 * (kPi + 2.0 * x) + 1456.0 * sc_D(x) * std::cos(x))
              * (-9.0 + 4.0 * std::sin(x)));
}

double scarf_superpotential_am(double x) {
    return -2.0
           * (sc_G(x) + sc_M(x) - 16380.0 * (137.0 + 2.0 * sc_S(x)) * (kPi - 2.0 * x))
           / std::cos(x)
           / ((-9.0 + 4.0 * std::sin(x))
              * (sc_H(x) + 114660.0 * (kPi - 2.0 * x) + 1456.0 * sc_D(x) * std::cos(x)
                 - 131040.0 * kPi * std::sin(x)));
}

// -------------------------------------------------------------------- GPT --

double gpt_superpotential(double r) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    return 2.0 * ch / sh - 5.0 / sh
           + 10.0 * sh * (1.0 / (10.0 * ch - 5.0) - 1.0 / (10.0 * ch - 3.0));
}

namespace {

double gpt_Q(double r) {
    return 85.0 + 1103.0 * std::cosh(r) + 178.0 * std::cosh(2.0 * r)
           + 19.0 * std::cosh(3.0 * r) + std::cosh(4.0 * r);
}

}  // namespace

double gpt_ground_cdf(double r) {
    const double th = std::tanh(0.5 * r);
    const double sech = 1.0 / std::cosh(0.5 * r);
    const double s2 = sech * sech;
    return gpt_Q(r) * (s2 * s2 * s2) * (th * th * th * th * th * th * th)
           / (-32.0 + 64.0 * std::cosh(r));
}

double gpt_superpotential_family(double r, double lambda) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    const double ch2 = std::cosh(0.5 * r), sh2 = std::sinh(0.5 * r);
    const double sh2_7 = std::pow(sh2, 7);
    const double ch2_13 = std::pow(ch2, 13);
    const double num = 198.0 * (3.0 - 10.0 * ch) * (3.0 - 10.0 * ch) / sh * sh2_7;
    const double den = (-1.0 + 2.0 * ch)
                       * (32.0 * lambda * ch2_13 * (-1.0 + 2.0 * ch) + gpt_Q(r) * sh2_7);
    return 2.0 * ch / sh - 5.0 / sh
           + 4.0 * sh / (3.0 + 4.0 * ch * (-4.0 + 5.0 * ch)) + num / den;
}

double gpt_superpotential_pursey(double r) {
    const double sh = std::sinh(r);
    return 2.0 / std::tanh(0.5 * r) + 10.0 * sh / (3.0 - 10.0 * std::cosh(r))
           - 3.0 * std::tanh(0.5 * r)
           + (1103.0 * sh + 356.0 * std::sinh(2.0 * r) + 57.0 * std::sinh(3.0 * r)
              + 4.0 * std::sinh(4.0 * r))
                 / gpt_Q(r);
}

double gpt_superpotential_am(double r) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    const double ch2 = std::cosh(0.5 * r), sh2 = std::sinh(0.5 * r);
    const double sh2_7 = std::pow(sh2, 7);
    const double ch2_13 = std::pow(ch2, 13);
    const double num = 198.0 * (3.0 - 10.0 * ch) * (3.0 - 10.0 * ch) / sh * sh2_7;
    const double den = (-1.0 + 2.0 * ch)
                       * (-32.0 * ch2_13 * (-1.0 + 2.0 * ch) + gpt_Q(r) * sh2_7);
    return 2.0 * ch / sh - 5.0 / sh
           + 4.0 * sh / (3.0 + 4.0 * ch * (-4.0 + 5.0 * ch)) + num / den;
}

}  // namespace isodirac::fixtures
