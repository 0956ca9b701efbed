#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "switchtrack/errors.hpp"
#include "switchtrack/harness.hpp"
#include "switchtrack/schemes.hpp"
#include "switchtrack/simplex.hpp"

using namespace switchtrack;

TEST_CASE("scheme factories validate parameters") {
  CHECK_THROWS_AS(MixingScheme::uniform_scheme(-0.1), ValidationError);
  CHECK_THROWS_AS(MixingScheme::uniform_scheme(1.1), ValidationError);
  CHECK_THROWS_AS(MixingScheme::geometric_scheme(0.5, -0.1), ValidationError);
  CHECK_THROWS_AS(MixingScheme::geometric_scheme(0.5, 1.5), ValidationError);
  CHECK_THROWS_AS(MixingScheme::power_decay_scheme(0.5, -1.0), ValidationError);
  CHECK(MixingScheme::uniform_scheme(0.0).alpha() == 0.0);
  CHECK(MixingScheme::geometric_scheme(0.3, 0.7).theta() == 0.7);
  CHECK(MixingScheme::power_decay_scheme(0.3, 2.0).gamma_exponent() == 2.0);
}

TEST_CASE("scheme_weights worked examples") {
  std::vector<double> uniform = scheme_weights(MixingScheme::uniform_scheme(0.3), 3);
  REQUIRE(uniform.size() == 4);
  CHECK(uniform[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(uniform[1] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(uniform[2] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(uniform[3] == doctest::Approx(0.7).epsilon(1e-14));

  std::vector<double> power = scheme_weights(MixingScheme::power_decay_scheme(0.3, 1.0), 2);
  REQUIRE(power.size() == 3);
  CHECK(power[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(power[1] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(power[2] == doctest::Approx(0.7).epsilon(1e-14));

  std::vector<double> geo = scheme_weights(MixingScheme::geometric_scheme(0.2, 0.5), 3);
  REQUIRE(geo.size() == 4);
  CHECK(geo[0] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(geo[1] == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(geo[2] == doctest::Approx(0.10).epsilon(1e-14));
  CHECK(geo[3] == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("scheme_weights at the first round") {
  for (double alpha : {0.05, 0.5, 0.95}) {
    std::vector<double> geo = scheme_weights(MixingScheme::geometric_scheme(alpha, 0.4), 1);
    REQUIRE(geo.size() == 2);
    CHECK(geo[0] == alpha);
    CHECK(geo[1] == 1.0 - alpha);
    std::vector<double> uni = scheme_weights(MixingScheme::uniform_scheme(alpha), 1);
    CHECK(uni[0] == alpha);
    CHECK(uni[1] == 1.0 - alpha);
  }
}

TEST_CASE("geometric scheme degenerates cleanly at theta 0 and 1") {
  std::vector<double> frozen = scheme_weights(MixingScheme::geometric_scheme(0.3, 0.0), 5);
  CHECK(frozen[0] == 0.3);
  for (std::size_t q = 1; q < 5; ++q) CHECK(frozen[q] == 0.0);
  CHECK(frozen[5] == 0.7);

  std::vector<double> recent = scheme_weights(MixingScheme::geometric_scheme(0.3, 1.0), 5);
  for (std::size_t q = 0; q < 4; ++q) CHECK(recent[q] == 0.0);
  CHECK(recent[4] == 0.3);
  CHECK(recent[5] == 0.7);
}

TEST_CASE("scheme_weights sum to one for every kind") {
  Rng rng(211);
  std::vector<MixingScheme> schemes;
  schemes.push_back(MixingScheme::uniform_scheme(0.0));
  schemes.push_back(MixingScheme::uniform_scheme(1.0));
  schemes.push_back(MixingScheme::geometric_scheme(0.5, 0.0));
  schemes.push_back(MixingScheme::geometric_scheme(0.5, 1.0));
  schemes.push_back(MixingScheme::power_decay_scheme(0.5, 0.0));
  for (int i = 0; i < 12; ++i) {
    double alpha = rng.uniform(0.01, 0.99);
    switch (i % 3) {
      case 0: schemes.push_back(MixingScheme::uniform_scheme(alpha)); break;
      case 1: schemes.push_back(MixingScheme::power_decay_scheme(alpha, rng.uniform(0.0, 3.0))); break;
      default: schemes.push_back(MixingScheme::geometric_scheme(alpha, rng.uniform(0.01, 0.99)));
    }
  }
  for (const MixingScheme& scheme : schemes) {
    for (std::size_t t : {std::size_t{1}, std::size_t{2}, std::size_t{17}, std::size_t{1000}}) {
      std::vector<double> gamma = scheme_weights(scheme, t);
      REQUIRE(gamma.size() == t + 1);
      double sum = 0.0;
      for (double g : gamma) {
        CHECK(g >= 0.0);
        sum += g;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("geometric running product matches direct powers at long horizons") {
  MixingScheme scheme = MixingScheme::geometric_scheme(0.4, 0.15);
  std::size_t t = 200;
  std::vector<double> gamma = scheme_weights(scheme, t);
  CHECK(gamma[0] == doctest::Approx(std::pow(0.85, 199.0) * 0.4).epsilon(1e-12));
  for (std::size_t q = 1; q < t; ++q) {
    double direct = 0.15 * std::pow(0.85, static_cast<double>(t - q - 1)) * 0.4;
    CHECK(gamma[q] == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("scheme_weights rejects t=0") {
  CHECK_THROWS_AS(scheme_weights(MixingScheme::uniform_scheme(0.5), 0), ValidationError);
}

TEST_CASE("beta_from_scheme takes the per-expert maximum across the history") {
  std::vector<SimplexVector> history{SimplexVector(std::vector<double>{0.5, 0.5}),
                                     SimplexVector(std::vector<double>{0.9, 0.1})};
  LowerBounds beta = beta_from_scheme(history, MixingScheme::uniform_scheme(0.7));
  CHECK(beta[0] == doctest::Approx(0.35).epsilon(1e-14));
  CHECK(beta[1] == doctest::Approx(0.35).epsilon(1e-14));
}

TEST_CASE("beta_from_scheme over a uniform history") {
  std::size_t n = 6;
  std::vector<SimplexVector> history(9, SimplexVector::uniform(n));
  MixingScheme scheme = MixingScheme::geometric_scheme(0.3, 0.2);
  std::vector<double> gamma = scheme_weights(scheme, history.size() - 1);
  double top = 0.0;
  for (double g : gamma) top = std::max(top, g);
  LowerBounds beta = beta_from_scheme(history, scheme);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(beta[i] == doctest::Approx(top / static_cast<double>(n)).epsilon(1e-14));
}

TEST_CASE("beta_from_scheme mass never exceeds one") {
  Rng rng(223);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng.uniform_index(15);
    std::size_t len = 2 + rng.uniform_index(40);
    std::vector<SimplexVector> history;
    history.reserve(len);
    for (std::size_t q = 0; q < len; ++q)
      history.push_back(SimplexVector(random_simplex_point(rng, n)));
    MixingScheme scheme = trial % 2 == 0
                              ? MixingScheme::geometric_scheme(rng.uniform(0.01, 0.99),
                                                               rng.uniform(0.01, 0.99))
                              : MixingScheme::power_decay_scheme(rng.uniform(0.01, 0.99),
                                                                 rng.uniform(0.0, 2.0));
    LowerBounds beta = beta_from_scheme(history, scheme);
    CHECK(beta.total_mass() <= 1.0 + 1e-12);
    std::vector<double> gamma = scheme_weights(scheme, len - 1);
    for (std::size_t i = 0; i < n; ++i) {
      double expect = 0.0;
      for (std::size_t q = 0; q < len; ++q) expect = std::max(expect, gamma[q] * history[q][i]);
      CHECK(beta[i] == expect);
    }
  }
}

TEST_CASE("beta_from_scheme input validation") {
  MixingScheme scheme = MixingScheme::uniform_scheme(0.5);
  CHECK_THROWS_AS(beta_from_scheme({}, scheme), ValidationError);
  std::vector<SimplexVector> single{SimplexVector::uniform(3)};
  CHECK_THROWS_AS(beta_from_scheme(single, scheme), ValidationError);
  std::vector<SimplexVector> ragged{SimplexVector::uniform(3), SimplexVector::uniform(4)};
  CHECK_THROWS_AS(beta_from_scheme(ragged, scheme), ValidationError);
}
