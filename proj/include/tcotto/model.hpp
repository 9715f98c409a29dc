#pragma once

// Two su(1,1) Tavis-Cummings atoms with dynamical Stark shift, in the
// coherent mean-field picture: parameters, the 4x4 effective Hamiltonian and
// the reduced thermal state.
//
// Basis ordering (Basis::Standard) is the tensor-product order
// (|ee>, |eg>, |ge>, |gg>). Matrices quoted in the literature for this model
// use (|ee>, |gg>, |eg>, |ge>); see Basis::Paired and to_standard().

#include "tcotto/numerics.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace tcotto {

// Physical inputs in units with k_B = hbar = 1. The dimensionless
// combinations are derived on demand, so they can never go stale.
class ModelParams {
public:
  // Validates g >= 0, xi >= 0 (not both zero), alpha_sq > 0, beta >= 0.
  ModelParams(double g, double xi, double alpha_sq, double beta);

  // Temperature form; t = +inf maps to beta = 0.
  static ModelParams from_temperature(double g, double xi, double alpha_sq,
                                      double temperature);
  // The (x, y) plane with the energy gauge a = xi*alpha^2 = 1.
  static ModelParams from_xy(double x, double y);

  double g() const noexcept { return g_; }
  double xi() const noexcept { return xi_; }
  double alpha_sq() const noexcept { return alpha_sq_; }
  double beta() const noexcept { return beta_; }

  double a() const noexcept { return xi_ * alpha_sq_; }
  double b() const noexcept { return g_ * alpha_sq_; }
  // sqrt(a^2 + 4 b^2), the nonzero level magnitude.
  double lambda_big() const noexcept;
  // 2g/xi, +inf when xi = 0.
  double x() const noexcept;
  // beta*a, 0 when beta = 0 or xi = 0.
  double y() const noexcept;

private:
  double g_, xi_, alpha_sq_, beta_;
};

enum class Basis : std::uint8_t {
  Standard, // (|ee>, |eg>, |ge>, |gg>)
  Paired,   // (|ee>, |gg>, |eg>, |ge>)
};

// Reorders a matrix given in Basis::Paired into Basis::Standard.
Mat4 to_standard(const Mat4 &paired);
Mat4 to_paired(const Mat4 &standard);

struct ThermalState {
  Mat4 rho;
  // Natural log of the partition function. Kept in log form so states at
  // beta*Lambda far beyond the double exponent range remain representable.
  double log_z = 0.0;
  Basis basis = Basis::Standard;
  // Principal square root of rho when the constructor can form it directly
  // (exp(-beta H / 2) / sqrt(Z)). Small eigenvalues are then accurate to
  // working precision relative to themselves, unlike sqrt_psd(rho).
  std::optional<Mat4> sqrt_rho;

  // exp(log_z); +inf once the partition function exceeds double range.
  double z() const;
};

// Diagonal (a, 0, 0, -a), b on the |ee>,|gg> <-> |eg>,|ge> couplings.
// Spectrum {Lambda, 0, 0, -Lambda}.
Mat4 effective_hamiltonian(double a, double b);

// exp(-beta H)/Z by numerical diagonalisation. The exponent is referenced to
// the ground level, so it never overflows.
ThermalState thermal_state_oracle(const ModelParams &p);

// Closed-form Gibbs state. The |eg>,|ge> diagonal uses
// (a^2 + 2b^2 + 2b^2 cosh(beta Lambda)) / (Z Lambda^2); the frequently quoted
// a^2 + b^2 numerator does not give unit trace.
ThermalState thermal_state_closed(const ModelParams &p);

// 2(1 + cosh(beta Lambda)). Throws RangeError for beta*Lambda > 700.
double partition_function(const ModelParams &p);
// log of the above, valid for any beta*Lambda.
double log_partition_function(const ModelParams &p);

// g << xi: diag(e^{-beta a}, 1, 1, e^{beta a}) / (2(1 + cosh beta a)).
// Exact when b = 0.
ThermalState limit_state_small_coupling(const ModelParams &p);

// g >> xi: unit diagonal 1/4, |ee><gg| and |eg><ge| entries
// (cosh 2 beta b - 1)/(2Z), the rest -sinh(2 beta b)/(2Z), with
// Z = 2(1 + cosh 2 beta b). Exact when a = 0.
ThermalState limit_state_strong_coupling(const ModelParams &p);

// Poisson weight alpha^{2n} e^{-alpha^2} / n! of the coherent field.
// Throws RangeError for n > 170, DomainError for alpha_sq <= 0.
double coherent_weight(unsigned n, double alpha_sq);

struct KineticEnergyInputs {
  double p_momentum;
  double mass;
  double dipole;
  double omega;
  double n_photons;
  double volume;
  double hbar;
  double eps0;
};

struct KineticEnergyCheck {
  // (P^2/2M) / (d sqrt(hbar omega n / (2 eps0 V)))
  double ratio;
  bool valid; // ratio < threshold
};

inline constexpr double kKineticNeglectThreshold = 0.1;

// Whether the centre-of-mass kinetic energy is negligible next to the
// atom-field coupling. Throws DomainError for any nonpositive input
// (p_momentum may be 0).
KineticEnergyCheck check_kinetic_energy_neglect(
    const KineticEnergyInputs &in,
    double threshold = kKineticNeglectThreshold);

} // namespace tcotto
