#include "tcotto/model.hpp"

#include "tcotto/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace tcotto {

namespace {

std::string describe(double g, double xi, double alpha_sq, double beta) {
  std::ostringstream os;
  os << "(g=" << g << ", xi=" << xi << ", alpha_sq=" << alpha_sq
     << ", beta=" << beta << ")";
  return os.str();
}

// Hyperbolic functions of u >= 0 divided by Z = 2(1 + cosh u), written in
// t = e^{-u} so nothing overflows.
struct ScaledHyperbolics {
  double inv_z;      // 1/Z
  double cosh_z;     // cosh(u)/Z
  double sinh_z;     // sinh(u)/Z
  double cosh_m1_z;  // (cosh(u) - 1)/Z
  double log_z;

  explicit ScaledHyperbolics(double u) {
    const double t = std::exp(-u);
    const double opt = 1.0 + t;
    inv_z = t / (opt * opt);
    cosh_z = (1.0 + t * t) / (2.0 * opt * opt);
    sinh_z = (1.0 - t) / (2.0 * opt);
    cosh_m1_z = (1.0 - t) * (1.0 - t) / (2.0 * opt * opt);
    log_z = u + 2.0 * std::log1p(t);
  }
};

constexpr std::array<std::size_t, 4> kPairedToStandard{0, 3, 1, 2};

} // namespace

ModelParams::ModelParams(double g, double xi, double alpha_sq, double beta)
    : g_(g), xi_(xi), alpha_sq_(alpha_sq), beta_(beta) {
  const auto where = [&] { return describe(g, xi, alpha_sq, beta); };
  if (!std::isfinite(g) || g < 0.0)
    throw DomainError("ModelParams: g must be finite and >= 0 " + where());
  if (!std::isfinite(xi) || xi < 0.0)
    throw DomainError("ModelParams: xi must be finite and >= 0 " + where());
  if (g == 0.0 && xi == 0.0)
    throw DomainError("ModelParams: g and xi cannot both be zero " + where());
  if (!std::isfinite(alpha_sq) || alpha_sq <= 0.0)
    throw DomainError("ModelParams: alpha_sq must be finite and > 0 " + where());
  if (!std::isfinite(beta) || beta < 0.0)
    throw DomainError("ModelParams: beta must be finite and >= 0 " + where());
}

ModelParams ModelParams::from_temperature(double g, double xi, double alpha_sq,
                                          double temperature) {
  if (!(temperature > 0.0))
    throw DomainError("ModelParams: temperature must be > 0, got " +
                      std::to_string(temperature));
  return ModelParams(g, xi, alpha_sq, std::isinf(temperature) ? 0.0 : 1.0 / temperature);
}

ModelParams ModelParams::from_xy(double x, double y) {
  return ModelParams(0.5 * x, 1.0, 1.0, y);
}

double ModelParams::lambda_big() const noexcept {
  return std::hypot(a(), 2.0 * b());
}

double ModelParams::x() const noexcept {
  if (xi_ == 0.0)
    return std::numeric_limits<double>::infinity();
  return 2.0 * g_ / xi_;
}

double ModelParams::y() const noexcept { return beta_ * a(); }

Mat4 to_standard(const Mat4 &paired) {
  Mat4 s;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      s(kPairedToStandard[i], kPairedToStandard[j]) = paired(i, j);
  return s;
}

Mat4 to_paired(const Mat4 &standard) {
  Mat4 p;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      p(i, j) = standard(kPairedToStandard[i], kPairedToStandard[j]);
  return p;
}

double ThermalState::z() const { return std::exp(log_z); }

Mat4 effective_hamiltonian(double a, double b) {
  // clang-format off
  return Mat4::from_rows({
      a, b, b, 0,
      b, 0, 0, b,
      b, 0, 0, b,
      0, b, b, -a});
  // clang-format on
}

ThermalState thermal_state_oracle(const ModelParams &p) {
  const Mat4 h = effective_hamiltonian(p.a(), p.b());
  const double ground = eig_sym(h).values[3];
  const Mat4 shifted = h - ground * Mat4::identity();

  Mat4 boltzmann, half;
  try {
    boltzmann = exp_sym(shifted, -p.beta());
    half = exp_sym(shifted, -0.5 * p.beta());
  } catch (const RangeError &e) {
    throw RangeError(std::string(e.what()) + " at " +
                     describe(p.g(), p.xi(), p.alpha_sq(), p.beta()));
  }
  const double tr = boltzmann.trace();
  ThermalState st;
  st.rho = boltzmann * (1.0 / tr);
  st.sqrt_rho = half * (1.0 / std::sqrt(tr));
  st.log_z = std::log(tr) - p.beta() * ground;
  return st;
}

ThermalState thermal_state_closed(const ModelParams &p) {
  const double a = p.a(), b = p.b();
  const double lam = p.lambda_big();
  const double lam2 = lam * lam;
  const ScaledHyperbolics h(p.beta() * lam);

  const double ee = (2 * b * b * h.inv_z + (a * a + 2 * b * b) * h.cosh_z) / lam2;
  const double stark = a * h.sinh_z / lam;
  const double flip = 2 * b * b * h.cosh_m1_z / lam2;
  const double single = ((a * a + 2 * b * b) * h.inv_z + 2 * b * b * h.cosh_z) / lam2;
  const double mix = a * b * h.cosh_m1_z / lam2;
  const double hop = b * h.sinh_z / lam;

  // Paired ordering (|ee>, |gg>, |eg>, |ge>).
  // clang-format off
  const Mat4 paired = Mat4::from_rows({
      ee - stark, flip,         mix - hop,  mix - hop,
      flip,       ee + stark,  -mix - hop, -mix - hop,
      mix - hop, -mix - hop,    single,     flip,
      mix - hop, -mix - hop,    flip,       single});
  // clang-format on

  ThermalState st;
  st.rho = to_standard(paired);
  st.log_z = h.log_z;
  return st;
}

double partition_function(const ModelParams &p) {
  const double u = p.beta() * p.lambda_big();
  if (u > kMaxExponent) {
    std::ostringstream os;
    os << "partition_function: beta*Lambda = " << u << " exceeds "
       << kMaxExponent << " at " << describe(p.g(), p.xi(), p.alpha_sq(), p.beta())
       << "; use log_partition_function or rescale the temperature units";
    throw RangeError(os.str());
  }
  return 2.0 * (1.0 + std::cosh(u));
}

double log_partition_function(const ModelParams &p) {
  return ScaledHyperbolics(p.beta() * p.lambda_big()).log_z;
}

ThermalState limit_state_small_coupling(const ModelParams &p) {
  const double u = p.beta() * p.a();
  const double t = std::exp(-u);
  const double norm = (1.0 + t) * (1.0 + t);
  ThermalState st;
  st.rho = Mat4::diag(t * t / norm, t / norm, t / norm, 1.0 / norm);
  st.log_z = u + 2.0 * std::log1p(t);
  return st;
}

ThermalState limit_state_strong_coupling(const ModelParams &p) {
  const ScaledHyperbolics h(2.0 * p.beta() * p.b());
  const double a1 = 0.5 * h.cosh_m1_z;
  const double a2 = -0.5 * h.sinh_z;
  // clang-format off
  const Mat4 paired = Mat4::from_rows({
      0.25, a1,   a2,   a2,
      a1,   0.25, a2,   a2,
      a2,   a2,   0.25, a1,
      a2,   a2,   a1,   0.25});
  // clang-format on
  ThermalState st;
  st.rho = to_standard(paired);
  st.log_z = h.log_z;
  return st;
}

double coherent_weight(unsigned n, double alpha_sq) {
  if (n > 170)
    throw RangeError("coherent_weight: n = " + std::to_string(n) +
                     " exceeds 170 (n! overflows)");
  if (!(alpha_sq > 0.0) || !std::isfinite(alpha_sq))
    throw DomainError("coherent_weight: alpha_sq must be finite and > 0, got " +
                      std::to_string(alpha_sq));
  if (n <= 20) {
    double factorial = 1.0;
    for (unsigned k = 2; k <= n; ++k)
      factorial *= k;
    return std::pow(alpha_sq, n) * std::exp(-alpha_sq) / factorial;
  }
  return std::exp(n * std::log(alpha_sq) - alpha_sq - std::lgamma(n + 1.0));
}

KineticEnergyCheck check_kinetic_energy_neglect(const KineticEnergyInputs &in,
                                                double threshold) {
  const auto require_positive = [](double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError(std::string("check_kinetic_energy_neglect: ") + name +
                        " must be finite and > 0, got " + std::to_string(v));
  };
  if (!(in.p_momentum >= 0.0) || !std::isfinite(in.p_momentum))
    throw DomainError("check_kinetic_energy_neglect: p_momentum must be finite "
                      "and >= 0, got " + std::to_string(in.p_momentum));
  require_positive(in.mass, "mass");
  require_positive(in.dipole, "dipole");
  require_positive(in.omega, "omega");
  require_positive(in.n_photons, "n_photons");
  require_positive(in.volume, "volume");
  require_positive(in.hbar, "hbar");
  require_positive(in.eps0, "eps0");
  require_positive(threshold, "threshold");

  const double kinetic = in.p_momentum * in.p_momentum / (2.0 * in.mass);
  const double coupling =
      in.dipole * std::sqrt(in.hbar * in.omega * in.n_photons / (2.0 * in.eps0 * in.volume));
  const double ratio = kinetic / coupling;
  return {ratio, ratio < threshold};
}

} // namespace tcotto
