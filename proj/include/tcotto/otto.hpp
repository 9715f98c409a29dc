#pragma once

// Quantum Otto cycle with the two-atom Tavis-Cummings system as working
// substance. The coupling is switched between g1 (hot isochore) and g2 (cold
// isochore); levels are (-lambda, 0, 0, lambda) with
// lambda = alpha^2 sqrt(xi^2 + 4 g^2). Units: k_B = hbar = 1, temperatures
// in energy units.

#include <array>

namespace tcotto {

// Level splitting alpha^2 sqrt(xi^2 + 4 g^2).
double level_splitting(double g, double xi, double alpha_sq);

class OttoCycle {
public:
  // Validates t_hot > t_cold > 0, g1 >= g2 >= 0, xi >= 0, alpha_sq > 0 and
  // not (xi == 0 && g2 == 0). Throws DomainError naming the parameter.
  OttoCycle(double g1, double g2, double xi, double alpha_sq, double t_hot,
            double t_cold);

  double g1() const noexcept { return g1_; }
  double g2() const noexcept { return g2_; }
  double xi() const noexcept { return xi_; }
  double alpha_sq() const noexcept { return alpha_sq_; }
  double t_hot() const noexcept { return t_hot_; }
  double t_cold() const noexcept { return t_cold_; }

  double lambda1() const { return level_splitting(g1_, xi_, alpha_sq_); }
  double lambda2() const { return level_splitting(g2_, xi_, alpha_sq_); }

private:
  double g1_, g2_, xi_, alpha_sq_, t_hot_, t_cold_;
};

struct CycleReport {
  double q_hot = 0.0;   // absorbed from the hot bath
  double q_cold = 0.0;  // released to the cold bath
  double work = 0.0;    // q_hot - q_cold
  double eta = 0.0;     // work / q_hot = 1 - lambda2/lambda1
  double eta_carnot = 0.0;
  // beta_L lambda2 > beta_H lambda1. When false the cycle is not an engine
  // (W <= 0); eta is still reported but has no engine meaning.
  bool positive_work = false;
};

// (-lambda, 0, 0, lambda)
std::array<double, 4> level_spectrum(double lambda);

// Gibbs weights (e^{beta lambda}, 1, 1, e^{-beta lambda}) / Z in the order
// of level_spectrum. Evaluated in scaled form, valid for any beta*lambda.
std::array<double, 4> gibbs_populations(double lambda, double temperature);

// lambda1 (tanh(beta_L lambda2 / 2) - tanh(beta_H lambda1 / 2)).
double heat_hot(const OttoCycle &c);
// (lambda2 / lambda1) heat_hot(c).
double heat_cold(const OttoCycle &c);
// 1 - lambda2/lambda1. Throws DomainError if lambda1 == 0.
double efficiency(const OttoCycle &c);
double efficiency(double lambda1, double lambda2);

CycleReport cycle_report(const OttoCycle &c);

// Energy bookkeeping of the four strokes, recomputed from level_spectrum and
// gibbs_populations. Heats via sum E dP, works via sum P dE (work done on the
// working substance).
struct StrokeLedger {
  double q_ab; // hot isochore, levels lambda1
  double w_bc; // adiabatic lambda1 -> lambda2
  double q_cd; // cold isochore, levels lambda2
  double w_da; // adiabatic lambda2 -> lambda1

  double total() const { return q_ab + w_bc + q_cd + w_da; }
};
StrokeLedger stroke_ledger(const OttoCycle &c);

// delta_g / (g + delta_g), the exact xi = 0 efficiency.
double efficiency_asymptote_small_shift(double g, double dg);
// 2(g1^2 - g2^2)/xi^2 with g1 = g + dg, g2 = g: leading term of the exact
// efficiency for xi >> g.
double efficiency_asymptote_large_shift(double g, double dg, double xi);

} // namespace tcotto
