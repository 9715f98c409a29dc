#include "tcotto/numerics.hpp"

#include "tcotto/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcotto {

Mat4 Mat4::identity() { return diag(1.0, 1.0, 1.0, 1.0); }

Mat4 Mat4::diag(double d0, double d1, double d2, double d3) {
  Mat4 r;
  r(0, 0) = d0;
  r(1, 1) = d1;
  r(2, 2) = d2;
  r(3, 3) = d3;
  return r;
}

Mat4 Mat4::diag(const std::array<double, 4> &d) {
  return diag(d[0], d[1], d[2], d[3]);
}

Mat4 Mat4::from_rows(std::initializer_list<double> entries) {
  if (entries.size() != 16)
    throw PreconditionError("Mat4::from_rows needs 16 entries, got " +
                            std::to_string(entries.size()));
  Mat4 r;
  std::copy(entries.begin(), entries.end(), r.m_.begin());
  return r;
}

Mat4 Mat4::transposed() const {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      r(j, i) = (*this)(i, j);
  return r;
}

double Mat4::trace() const {
  return m_[0] + m_[5] + m_[10] + m_[15];
}

double Mat4::max_abs() const {
  double r = 0.0;
  for (double v : m_)
    r = std::max(r, std::abs(v));
  return r;
}

double Mat4::frobenius() const {
  double s = 0.0;
  for (double v : m_)
    s += v * v;
  return std::sqrt(s);
}

bool Mat4::all_finite() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](double v) { return std::isfinite(v); });
}

double Mat4::asymmetry() const {
  double r = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      r = std::max(r, std::abs((*this)(i, j) - (*this)(j, i)));
  return r;
}

Mat4 &Mat4::operator+=(const Mat4 &o) {
  for (std::size_t k = 0; k < 16; ++k)
    m_[k] += o.m_[k];
  return *this;
}

Mat4 &Mat4::operator-=(const Mat4 &o) {
  for (std::size_t k = 0; k < 16; ++k)
    m_[k] -= o.m_[k];
  return *this;
}

Mat4 &Mat4::operator*=(double s) {
  for (double &v : m_)
    v *= s;
  return *this;
}

Mat4 operator*(const Mat4 &a, const Mat4 &b) {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < 4; ++j)
        r(i, j) += aik * b(k, j);
    }
  return r;
}

double max_abs_diff(const Mat4 &a, const Mat4 &b) { return (a - b).max_abs(); }

Mat4 SymEig4::reconstruct() const {
  Mat4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 4; ++k)
        s += vectors(i, k) * values[k] * vectors(j, k);
      r(i, j) = s;
    }
  return r;
}

namespace {

void require_symmetric(const Mat4 &m, const char *who) {
  std::size_t bi = 0, bj = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double d = std::abs(m(i, j) - m(j, i));
      if (!(d <= worst)) {
        worst = d;
        bi = i;
        bj = j;
      }
    }
  if (!(worst <= kSymmetryTolerance)) {
    std::ostringstream os;
    os << who << ": matrix not symmetric, |m(" << bi << "," << bj << ") - m("
       << bj << "," << bi << ")| = " << worst;
    throw PreconditionError(os.str());
  }
}

double off_diagonal_norm(const Mat4 &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;
constexpr double kJacobiThreshold = 1e-14;

} // namespace

SymEig4 eig_sym(const Mat4 &m) {
  require_symmetric(m, "eig_sym");
  if (!m.all_finite())
    throw PreconditionError("eig_sym: matrix has non-finite entries");

  // Work on the symmetrized input so roundoff asymmetry cannot bias the result.
  Mat4 a = 0.5 * (m + m.transposed());
  Mat4 v = Mat4::identity();
  const double scale = std::max(a.frobenius(), 1e-300);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiThreshold * scale)
      break;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0)
          continue;
        // Rotation angle from the classic symmetric Schur decomposition.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < 4; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) > a(j, j);
  });

  SymEig4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < 4; ++i)
      out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

namespace {

template <class F> Mat4 apply_spectral(const SymEig4 &e, F &&f) {
  SymEig4 g = e;
  for (double &x : g.values)
    x = f(x);
  return g.reconstruct();
}

} // namespace

Mat4 exp_sym(const Mat4 &m, double s) {
  const SymEig4 e = eig_sym(m);
  for (double lam : e.values) {
    if (s * lam > kMaxExponent) {
      std::ostringstream os;
      os << "exp_sym: exponent s*lambda = " << s * lam << " exceeds "
         << kMaxExponent << " (rescale the energy or temperature units)";
      throw RangeError(os.str());
    }
  }
  return apply_spectral(e, [s](double lam) { return std::exp(s * lam); });
}

Mat4 sqrt_psd(const Mat4 &m) {
  const SymEig4 e = eig_sym(m);
  if (e.values[3] < -kPsdClamp) {
    std::ostringstream os;
    os << "sqrt_psd: matrix not positive semidefinite, eigenvalue "
       << e.values[3];
    throw NotPsdError(os.str(), e.values[3]);
  }
  return apply_spectral(e, [](double lam) { return std::sqrt(std::max(lam, 0.0)); });
}

std::array<double, 4> eig_rho_product(const Mat4 &rho, const Mat4 &rho_tilde) {
  // The flipped state must be PSD as well; sqrt_psd checks rho.
  {
    const SymEig4 et = eig_sym(rho_tilde);
    if (et.values[3] < -kPsdClamp) {
      std::ostringstream os;
      os << "eig_rho_product: rho_tilde not positive semidefinite, eigenvalue "
         << et.values[3];
      throw NotPsdError(os.str(), et.values[3]);
    }
  }
  const Mat4 root = sqrt_psd(rho);
  Mat4 sym = root * rho_tilde * root;
  sym = 0.5 * (sym + sym.transposed());
  const SymEig4 e = eig_sym(sym);
  std::array<double, 4> out = e.values;
  for (double &v : out) {
    if (v < -kPsdClamp) {
      std::ostringstream os;
      os << "eig_rho_product: negative product eigenvalue " << v;
      throw NotPsdError(os.str(), v);
    }
    v = std::max(v, 0.0);
  }
  return out;
}

} // namespace tcotto
