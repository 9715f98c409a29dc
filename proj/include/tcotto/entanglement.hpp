#pragma once

// Wootters concurrence of the two-atom thermal state.

#include "tcotto/model.hpp"

#include <array>
#include <optional>

namespace tcotto {

struct XYPoint {
  double x;
  double y;
};

struct ConcurrenceReport {
  double c = 0.0;
  // Square roots of the R-matrix eigenvalues, descending.
  std::array<double, 4> roots{};
  // Set when the report came from concurrence_xy.
  std::optional<XYPoint> params;
};

// (sigma_y x sigma_y) rho* (sigma_y x sigma_y). For a real state in
// Basis::Standard this is conjugation by antidiag(-1, 1, 1, -1).
Mat4 spin_flip(const Mat4 &rho_standard);
// Throws ContractError unless the state is in Basis::Standard.
Mat4 spin_flip(const ThermalState &state);

// c = max(0, r0 - r1 - r2 - r3) over the descending roots.
ConcurrenceReport concurrence(const ThermalState &state);

// Concurrence on the (x = 2g/xi, y = xi alpha^2 / T) plane, gauge a = 1.
// Throws DomainError unless x is finite and > 0 and y is finite and >= 0.
ConcurrenceReport concurrence_xy(double x, double y);

// Weak-coupling law max(0, (sqrt 2 - 1) g/xi).
double linear_law(double g_over_xi);

// Square-root decay law in the strong-coupling regime, with
// A = 4y/x - 1:  max(0, sqrt(A + sqrt A) - sqrt(A - sqrt A)).
// Empty outside its regime (x <= 2, or A < 1). Reproduced as published: it
// reaches sqrt(2) at A = 1, above the concurrence ceiling of 1, so treat it
// as a qualitative trend only.
std::optional<double> sqrt_decay_law(double x, double y);

} // namespace tcotto
