#pragma once

// Dense 4x4 real linear algebra used by the thermal-state and concurrence code.
// Everything here is a pure function on values.

#include <array>
#include <cstddef>
#include <initializer_list>

namespace tcotto {

class Mat4 {
public:
  constexpr Mat4() : m_{} {}

  static Mat4 zero() { return Mat4{}; }
  static Mat4 identity();
  static Mat4 diag(double d0, double d1, double d2, double d3);
  static Mat4 diag(const std::array<double, 4> &d);
  // Row-major list of 16 entries.
  static Mat4 from_rows(std::initializer_list<double> entries);

  double &operator()(std::size_t i, std::size_t j) { return m_[i * 4 + j]; }
  double operator()(std::size_t i, std::size_t j) const { return m_[i * 4 + j]; }

  Mat4 transposed() const;
  double trace() const;
  double max_abs() const;
  double frobenius() const;
  bool all_finite() const;
  // Largest |m_ij - m_ji|.
  double asymmetry() const;

  Mat4 &operator+=(const Mat4 &o);
  Mat4 &operator-=(const Mat4 &o);
  Mat4 &operator*=(double s);

  friend Mat4 operator+(Mat4 a, const Mat4 &b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4 &b) { return a -= b; }
  friend Mat4 operator*(Mat4 a, double s) { return a *= s; }
  friend Mat4 operator*(double s, Mat4 a) { return a *= s; }
  friend Mat4 operator*(const Mat4 &a, const Mat4 &b);
  friend bool operator==(const Mat4 &, const Mat4 &) = default;

private:
  std::array<double, 16> m_;
};

// Largest entrywise |a - b|.
double max_abs_diff(const Mat4 &a, const Mat4 &b);

// Eigenpairs of a symmetric matrix; values sorted descending, eigenvectors in
// the matching columns of `vectors`.
struct SymEig4 {
  std::array<double, 4> values{};
  Mat4 vectors;

  Mat4 reconstruct() const;
};

inline constexpr double kSymmetryTolerance = 1e-12;
// Eigenvalues in [-kPsdClamp, 0) are roundoff and clamp to zero; anything
// lower is a hard error.
inline constexpr double kPsdClamp = 1e-10;
// exp(700) is close to the largest finite double.
inline constexpr double kMaxExponent = 700.0;

// Cyclic Jacobi rotations. Throws PreconditionError naming the worst entry
// pair when |m_ij - m_ji| exceeds kSymmetryTolerance.
SymEig4 eig_sym(const Mat4 &m);

// exp(s*m) via eigendecomposition. Throws RangeError when s*lambda exceeds
// kMaxExponent for some eigenvalue lambda; large negative exponents
// underflow harmlessly to zero.
Mat4 exp_sym(const Mat4 &m, double s);

// Principal square root of a symmetric PSD matrix.
Mat4 sqrt_psd(const Mat4 &m);

// Eigenvalues of rho * rho_tilde, sorted descending and clamped at zero.
// Computed as the spectrum of the symmetric sqrt(rho) rho_tilde sqrt(rho),
// which is similar to the product.
std::array<double, 4> eig_rho_product(const Mat4 &rho, const Mat4 &rho_tilde);

} // namespace tcotto
