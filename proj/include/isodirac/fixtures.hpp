#pragma once

// Reference closed-form expressions for the three m=1 worked examples:
// radial oscillator at (omega=3, ell=1), Scarf-I at (A=4, B=2), and
// generalized Poschl-Teller at (A=2, B=5). Each function is a literal
// transcription of a published closed form, kept deliberately independent
// of the engine code paths so the verify module can cross-check one against
// the other on dense grids. Do not "simplify" these: their value lies in
// being verbatim.

namespace isodirac::fixtures {

// radial oscillator, omega=3, ell=1, m=1
double radial_superpotential(double r);
double radial_ground_cdf(double r);
double radial_superpotential_family(double r, double lambda);
double radial_superpotential_pursey(double r);
double radial_superpotential_am(double r);

// Scarf-I, A=4, B=2, m=1
double scarf_superpotential(double x);
double scarf_ground_cdf(double x);
double scarf_superpotential_family(double x, double lambda);
double scarf_superpotential_pursey(double x);
double scarf_superpotential_am(double x);

// generalized Poschl-Teller, A=2, B=5, m=1
double gpt_superpotential(double r);
double gpt_ground_cdf(double r);
double gpt_superpotential_family(double r, double lambda);
double gpt_superpotential_pursey(double r);
double gpt_superpotential_am(double r);

}  // namespace isodirac::fixtures
