#include "tcotto/entanglement.hpp"

#include "tcotto/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcotto {

namespace {

// sigma_y x sigma_y in the standard ordering.
const Mat4 &flip_operator() {
  // clang-format off
  static const Mat4 flip = Mat4::from_rows({
       0, 0, 0, -1,
       0, 0, 1,  0,
       0, 1, 0,  0,
      -1, 0, 0,  0});
  // clang-format on
  return flip;
}

} // namespace

Mat4 spin_flip(const Mat4 &rho) { return flip_operator() * rho * flip_operator(); }

Mat4 spin_flip(const ThermalState &state) {
  if (state.basis != Basis::Standard)
    throw ContractError("spin_flip: state must be in the standard "
                        "(|ee>,|eg>,|ge>,|gg>) ordering");
  return spin_flip(state.rho);
}

ConcurrenceReport concurrence(const ThermalState &state) {
  const Mat4 flipped = spin_flip(state);

  ConcurrenceReport rep;
  if (state.sqrt_rho) {
    // S = sqrt(rho) F sqrt(rho) is symmetric and S^2 = sqrt(rho) rho~ sqrt(rho),
    // so the roots are |eig(S)| without squaring and re-rooting.
    const Mat4 &root = *state.sqrt_rho;
    Mat4 s = root * flip_operator() * root;
    s = 0.5 * (s + s.transposed());
    const auto e = eig_sym(s);
    for (std::size_t k = 0; k < 4; ++k)
      rep.roots[k] = std::abs(e.values[k]);
  } else {
    const std::array<double, 4> r = eig_rho_product(state.rho, flipped);
    for (std::size_t k = 0; k < 4; ++k)
      rep.roots[k] = std::sqrt(r[k]);
  }
  std::sort(rep.roots.begin(), rep.roots.end(), std::greater<>());
  rep.c = std::max(0.0, rep.roots[0] - rep.roots[1] - rep.roots[2] - rep.roots[3]);
  return rep;
}

ConcurrenceReport concurrence_xy(double x, double y) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    std::ostringstream os;
    os << "concurrence_xy: x must be finite and > 0, got x=" << x;
    throw DomainError(os.str());
  }
  if (!std::isfinite(y) || !(y >= 0.0)) {
    std::ostringstream os;
    os << "concurrence_xy: y must be finite and >= 0, got y=" << y;
    throw DomainError(os.str());
  }
  ConcurrenceReport rep;
  try {
    rep = concurrence(thermal_state_oracle(ModelParams::from_xy(x, y)));
  } catch (const Error &e) {
    std::ostringstream os;
    os << e.what() << " [at x=" << x << ", y=" << y << "]";
    throw Error(os.str());
  }
  rep.params = XYPoint{x, y};
  return rep;
}

double linear_law(double g_over_xi) {
  return std::max(0.0, (std::sqrt(2.0) - 1.0) * g_over_xi);
}

std::optional<double> sqrt_decay_law(double x, double y) {
  if (!(x > 2.0) || !std::isfinite(x) || !std::isfinite(y))
    return std::nullopt;
  const double big_a = 4.0 * y / x - 1.0;
  if (!(big_a >= 1.0))
    return std::nullopt;
  const double root = std::sqrt(big_a);
  return std::max(0.0, std::sqrt(big_a + root) - std::sqrt(big_a - root));
}

} // namespace tcotto
