#include "tcotto/error.hpp"
#include "tcotto/otto.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tcotto;

namespace {

// lambda1 = 2, lambda2 = 1
OttoCycle reference_cycle(double t_hot = 4.0, double t_cold = 1.0) {
  return OttoCycle(1.0, 0.5, 0.0, 1.0, t_hot, t_cold);
}

OttoCycle random_cycle(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double g2 = 0.01 + 3 * u(rng);
  const double g1 = g2 + 3 * u(rng);
  const double t_cold = 0.05 + 5 * u(rng);
  return OttoCycle(g1, g2, 5 * u(rng), 0.1 + 5 * u(rng), t_cold * (1.01 + 9 * u(rng)), t_cold);
}

} // namespace

TEST_CASE("cycle validation") {
  CHECK_NOTHROW(OttoCycle(1, 1, 0.5, 1, 2, 1));
  CHECK_THROWS_AS(OttoCycle(1, 2, 0.5, 1, 2, 1), DomainError);   // g1 < g2
  CHECK_THROWS_AS(OttoCycle(1, 0.5, 0.5, 1, 1, 2), DomainError); // t_hot < t_cold
  CHECK_THROWS_AS(OttoCycle(1, 0.5, 0.5, 1, 2, 0), DomainError);
  CHECK_THROWS_AS(OttoCycle(1, 0, 0, 1, 2, 1), DomainError);     // degenerate
  CHECK_THROWS_AS(OttoCycle(1, 0.5, -1, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(OttoCycle(1, 0.5, 1, 0, 2, 1), DomainError);
  try {
    OttoCycle(1, 2, 0.5, 1, 2, 1);
  } catch (const DomainError &e) {
    CHECK(std::string(e.what()).find("g1=1") != std::string::npos);
  }
  const OttoCycle c(2, 1, 0, 1, 4, 1);
  CHECK(c.lambda1() == 4.0);
  CHECK(c.lambda2() == 2.0);
}

TEST_CASE("level spectrum and populations") {
  CHECK(level_spectrum(0.0) == std::array<double, 4>{0, 0, 0, 0});
  CHECK(level_spectrum(level_splitting(2.0, 0.0, 1.0)) == std::array<double, 4>{-4, 0, 0, 4});
  const auto s = level_spectrum(level_splitting(3.0, 8.0, 0.5));
  CHECK(s[0] == -s[3]);

  for (double p : gibbs_populations(0.0, 1.0))
    CHECK(p == 0.25);

  const double z = 2 * (1 + std::cosh(1.0));
  const auto p = gibbs_populations(1.0, 1.0);
  CHECK(p[0] == doctest::Approx(std::exp(1.0) / z).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(1.0 / z).epsilon(1e-15));
  CHECK(p[3] == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-15));
  CHECK(std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) <= 1e-14);

  const auto cold = gibbs_populations(1.0, 0.01); // beta*lambda = 100
  CHECK(std::abs(cold[0] - 1.0) <= std::exp(-100.0) * 3);
  CHECK(cold[3] >= 0.0);
  const auto frozen = gibbs_populations(1.0, 1e-6); // far past exp overflow
  CHECK(frozen[0] == 1.0);

  CHECK_THROWS_AS(gibbs_populations(1.0, 0.0), DomainError);
}

TEST_CASE("heats, work and efficiency of the reference cycle") {
  const auto c = reference_cycle();
  CHECK(heat_hot(c) == doctest::Approx(0.43439698971260125845).epsilon(1e-14));
  CHECK(heat_cold(c) == doctest::Approx(0.21719849485630062922).epsilon(1e-14));
  const auto r = cycle_report(c);
  CHECK(r.work == r.q_hot - r.q_cold);
  CHECK(r.work == doctest::Approx(0.21719849485630062922).epsilon(1e-14));
  CHECK(r.eta == 0.5);
  CHECK(r.eta_carnot == 0.75);
  CHECK(r.positive_work);
}

TEST_CASE("degenerate and boundary cycles") {
  // Equal couplings: no work, equal heats.
  const OttoCycle same(1.0, 1.0, 0.3, 1.0, 3.0, 1.0);
  CHECK(heat_hot(same) == heat_cold(same));
  CHECK(cycle_report(same).work == 0.0);
  CHECK(efficiency(same) == 0.0);

  // T_H/T_L = lambda1/lambda2 exactly: tanh arguments coincide.
  const auto edge = reference_cycle(2.0, 1.0);
  const auto r = cycle_report(edge);
  CHECK(r.q_hot == 0.0);
  CHECK(r.q_cold == 0.0);
  CHECK(r.work == 0.0);
  CHECK_FALSE(r.positive_work);

  // Below the positive-work condition the cycle runs backwards.
  const auto fridge = cycle_report(reference_cycle(1.5, 1.0));
  CHECK_FALSE(fridge.positive_work);
  CHECK(fridge.work < 0.0);
  CHECK(fridge.eta == 0.5);
}

TEST_CASE("efficiency values") {
  CHECK(efficiency(OttoCycle(2, 1, 0, 1, 4, 1)) == 0.5);
  CHECK(efficiency(OttoCycle(2, 1, 2, 1, 4, 1)) == doctest::Approx(0.3675444679663241336).epsilon(1e-14));
  CHECK_THROWS_AS(efficiency(0.0, 0.0), DomainError);
}

TEST_CASE("asymptotes") {
  CHECK(efficiency_asymptote_small_shift(1.0, 0.0) == 0.0);
  CHECK(efficiency_asymptote_small_shift(2.0, 2.0) == 0.5);
  CHECK(efficiency_asymptote_small_shift(1.0, 0.1) == doctest::Approx(1.0 / 11.0).epsilon(1e-15));
  CHECK_THROWS_AS(efficiency_asymptote_small_shift(0.0, 1.0), DomainError);

  CHECK(efficiency_asymptote_large_shift(1.0, 0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(efficiency_asymptote_large_shift(1.0, 0.1, 0.0), DomainError);

  const double g = 1.0, dg = 0.1, xi = 100.0;
  const double exact = efficiency(level_splitting(g + dg, xi, 1.0), level_splitting(g, xi, 1.0));
  const double ratio = exact / efficiency_asymptote_large_shift(g, dg, xi);
  CHECK(ratio >= 0.99);
  CHECK(ratio <= 1.01);

  const auto eta_at = [](double g_, double dg_, double xi_) {
    return efficiency(level_splitting(g_ + dg_, xi_, 1.0), level_splitting(g_, xi_, 1.0));
  };
  CHECK(eta_at(1.0, 0.3, 10.0) < eta_at(1.0, 0.3, 0.1));
}

TEST_CASE("cycle properties over random cycles") {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 10000; ++k) {
    const auto c = random_cycle(rng);
    const auto r = cycle_report(c);

    const double lhs = r.q_cold * c.lambda1(), rhs = r.q_hot * c.lambda2();
    REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
    REQUIRE(r.work == r.q_hot - r.q_cold);
    if (r.positive_work) {
      REQUIRE(r.eta >= 0.0);
      REQUIRE(r.eta <= r.eta_carnot);
      REQUIRE(r.work >= 0.0);
    }

    const auto ledger = stroke_ledger(c);
    REQUIRE(std::abs(ledger.total()) <= 1e-12 * std::max(1.0, c.lambda1()));
    REQUIRE(ledger.q_ab == doctest::Approx(r.q_hot).epsilon(1e-10).scale(c.lambda1()));
    REQUIRE(-ledger.q_cd == doctest::Approx(r.q_cold).epsilon(1e-10).scale(c.lambda1()));
    REQUIRE(-(ledger.w_bc + ledger.w_da) == doctest::Approx(r.work).epsilon(1e-10).scale(c.lambda1()));
  }
}

TEST_CASE("efficiency is a pure spectrum ratio") {
  const double base = efficiency(OttoCycle(1.7, 1.1, 0.8, 1.0, 3.0, 1.0));
  for (double alpha_sq : {0.1, 2.0, 50.0})
    for (auto [th, tl] : {std::pair{10.0, 0.1}, {1.5, 1.4}, {100.0, 20.0}})
      CHECK(efficiency(OttoCycle(1.7, 1.1, 0.8, alpha_sq, th, tl)) ==
            doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("efficiency decreases strictly with the Stark shift") {
  for (auto [g1, g2] : {std::pair{2.0, 1.0}, {1.1, 1.0}, {0.5, 0.0}, {3.0, 0.2}}) {
    double prev = INFINITY;
    for (int i = 0; i <= 400; ++i) {
      const double xi = 0.05 * i;
      if (xi == 0.0 && g2 == 0.0)
        continue;
      const double eta = efficiency(level_splitting(g1, xi, 1.0), level_splitting(g2, xi, 1.0));
      CHECK(eta < prev);
      prev = eta;
    }
  }
}

TEST_CASE("asymptotic sandwich") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> ug(0.1, 5.0), udg(0.01, 5.0);
  for (int k = 0; k < 1000; ++k) {
    const double g = ug(rng), dg = udg(rng), g1 = g + dg;
    const auto eta_at = [&](double xi) {
      return efficiency(level_splitting(g1, xi, 1.0), level_splitting(g, xi, 1.0));
    };
    const double small_xi = 0.01 * g;
    const double exact_small = eta_at(small_xi);
    CHECK(std::abs(exact_small - efficiency_asymptote_small_shift(g, dg)) / exact_small <= 0.01);
    CHECK(eta_at(0.0) == doctest::Approx(efficiency_asymptote_small_shift(g, dg)).epsilon(1e-14));

    const double large_xi = 100.0 * g1;
    CHECK(std::abs(eta_at(large_xi) / efficiency_asymptote_large_shift(g, dg, large_xi) - 1.0) <= 0.01);
    CHECK(eta_at(10 * g) < eta_at(0.1 * g));
  }
}
