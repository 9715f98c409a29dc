#include "tcotto/otto.hpp"

#include "tcotto/error.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace tcotto {

namespace {

std::string fmt_value(const char *name, double v) {
  std::ostringstream os;
  os << name << "=" << v;
  return os.str();
}

} // namespace

double level_splitting(double g, double xi, double alpha_sq) {
  return alpha_sq * std::hypot(xi, 2.0 * g);
}

OttoCycle::OttoCycle(double g1, double g2, double xi, double alpha_sq,
                     double t_hot, double t_cold)
    : g1_(g1), g2_(g2), xi_(xi), alpha_sq_(alpha_sq), t_hot_(t_hot),
      t_cold_(t_cold) {
  const auto fail = [](const std::string &what) {
    throw DomainError("OttoCycle: " + what);
  };
  for (auto [name, v] : {std::pair{"g1", g1}, {"g2", g2}, {"xi", xi},
                         {"alpha_sq", alpha_sq}, {"t_hot", t_hot}, {"t_cold", t_cold}})
    if (!std::isfinite(v))
      fail(fmt_value(name, v) + " must be finite");
  if (!(t_cold > 0.0))
    fail(fmt_value("t_cold", t_cold) + " must be > 0");
  if (!(t_hot > t_cold))
    fail(fmt_value("t_hot", t_hot) + " must exceed " + fmt_value("t_cold", t_cold));
  if (!(g2 >= 0.0))
    fail(fmt_value("g2", g2) + " must be >= 0");
  if (!(g1 >= g2))
    fail(fmt_value("g1", g1) + " must be >= " + fmt_value("g2", g2));
  if (!(xi >= 0.0))
    fail(fmt_value("xi", xi) + " must be >= 0");
  if (!(alpha_sq > 0.0))
    fail(fmt_value("alpha_sq", alpha_sq) + " must be > 0");
  if (xi == 0.0 && g2 == 0.0)
    fail("xi and g2 cannot both be zero (degenerate cold-stroke spectrum)");
}

std::array<double, 4> level_spectrum(double lambda) {
  return {-lambda, 0.0, 0.0, lambda};
}

std::array<double, 4> gibbs_populations(double lambda, double temperature) {
  if (!(temperature > 0.0))
    throw DomainError("gibbs_populations: " + fmt_value("temperature", temperature) +
                      " must be > 0");
  // Divide through by e^{beta |lambda|}.
  const double u = std::abs(lambda) / temperature;
  const double t = std::exp(-u);
  const double norm = (1.0 + t) * (1.0 + t);
  const double low = 1.0 / norm, mid = t / norm, high = t * t / norm;
  if (lambda >= 0.0)
    return {low, mid, mid, high};
  return {high, mid, mid, low};
}

double heat_hot(const OttoCycle &c) {
  const double l1 = c.lambda1(), l2 = c.lambda2();
  return l1 * (std::tanh(0.5 * l2 / c.t_cold()) - std::tanh(0.5 * l1 / c.t_hot()));
}

double heat_cold(const OttoCycle &c) {
  return c.lambda2() / c.lambda1() * heat_hot(c);
}

double efficiency(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0))
    throw DomainError("efficiency: " + fmt_value("lambda1", lambda1) + " must be > 0");
  return 1.0 - lambda2 / lambda1;
}

double efficiency(const OttoCycle &c) { return efficiency(c.lambda1(), c.lambda2()); }

CycleReport cycle_report(const OttoCycle &c) {
  CycleReport r;
  r.q_hot = heat_hot(c);
  r.q_cold = heat_cold(c);
  r.work = r.q_hot - r.q_cold;
  r.eta = efficiency(c);
  r.eta_carnot = 1.0 - c.t_cold() / c.t_hot();
  r.positive_work = c.lambda2() / c.t_cold() > c.lambda1() / c.t_hot();
  return r;
}

StrokeLedger stroke_ledger(const OttoCycle &c) {
  const auto e1 = level_spectrum(c.lambda1());
  const auto e2 = level_spectrum(c.lambda2());
  const auto p1 = gibbs_populations(c.lambda1(), c.t_hot());
  const auto p2 = gibbs_populations(c.lambda2(), c.t_cold());
  StrokeLedger s{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    s.q_ab += e1[i] * (p1[i] - p2[i]);
    s.w_bc += p1[i] * (e2[i] - e1[i]);
    s.q_cd += e2[i] * (p2[i] - p1[i]);
    s.w_da += p2[i] * (e1[i] - e2[i]);
  }
  return s;
}

double efficiency_asymptote_small_shift(double g, double dg) {
  if (!(g > 0.0))
    throw DomainError("efficiency_asymptote_small_shift: " + fmt_value("g", g) +
                      " must be > 0");
  return dg / (g + dg);
}

double efficiency_asymptote_large_shift(double g, double dg, double xi) {
  if (!(xi > 0.0))
    throw DomainError("efficiency_asymptote_large_shift: " + fmt_value("xi", xi) +
                      " must be > 0");
  return 2.0 * (2.0 * g * dg + dg * dg) / (xi * xi);
}

} // namespace tcotto
