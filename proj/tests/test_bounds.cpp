#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "switchtrack/bounds.hpp"
#include "switchtrack/errors.hpp"
#include "switchtrack/harness.hpp"
#include "switchtrack/simplex.hpp"

using namespace switchtrack;

namespace {

constexpr std::size_t kFigN = 500000;
constexpr std::size_t kFigT = 4000;
constexpr std::size_t kFigK = 40;

BoundInputs figure_inputs(std::size_t m) { return BoundInputs{kFigN, kFigT, kFigK, m, 1.0}; }

BoundInputs random_inputs(Rng& rng) {
  std::size_t T = 2 + rng.uniform_index(99999);
  std::size_t k = rng.uniform_index(T);
  std::size_t m = 1;
  if (k >= 1) m = 2 + rng.uniform_index(std::min<std::size_t>(k, 9999));
  std::size_t n = m + rng.uniform_index(1000000);
  if (n < 2) n = 2;
  double c = std::exp(rng.uniform(-3.0, 3.0));
  return BoundInputs{n, T, k, m, c};
}

using BoundFn = double (*)(const BoundInputs&);

constexpr BoundFn kAllBounds[] = {
    fixed_share_bound, fixed_share_bound_upper, ideal_bound,        ideal_bound_upper,
    mpp_decay_bound,   mpp_decay_bound_upper,   mpp_uniform_bound,  specialists_bound,
    specialists_bound_upper,                    pods_bound,         pods_bound_upper};

}  // namespace

TEST_CASE("validate rejects malformed inputs") {
  CHECK_THROWS_AS(validate(BoundInputs{1, 10, 2, 2, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{4, 1, 0, 1, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{4, 5, 5, 2, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{4, 5, 2, 0, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{10, 5, 2, 4, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{3, 10, 5, 4, 1.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{4, 5, 2, 2, 0.0}), ValidationError);
  CHECK_THROWS_AS(validate(BoundInputs{4, 5, 2, 1, 1.0}), ValidationError);
  CHECK_NOTHROW(validate(BoundInputs{4, 5, 2, 2, 1.0}));
  CHECK_NOTHROW(validate(BoundInputs{4, 5, 0, 1, 1.0}));
}

TEST_CASE("static comparator collapses every bound to its simplest form") {
  BoundInputs inp{8, 100, 0, 1, 1.0};
  double logn = std::log(8.0);
  CHECK(fixed_share_bound(inp) == doctest::Approx(logn).epsilon(1e-14));
  CHECK(ideal_bound(inp) == doctest::Approx(logn).epsilon(1e-12));
  CHECK(mpp_decay_bound(inp) == doctest::Approx(logn).epsilon(1e-14));
  CHECK(mpp_uniform_bound(inp) == doctest::Approx(logn).epsilon(1e-14));
  CHECK(pods_bound(inp) == doctest::Approx(logn).epsilon(1e-14));
  CHECK(specialists_bound(inp) == doctest::Approx(logn).epsilon(1e-14));
}

TEST_CASE("closed-form spot checks at a tiny configuration") {
  CHECK(fixed_share_bound(BoundInputs{2, 3, 1, 2, 1.0}) ==
        doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-13));
  BoundInputs inp{4, 3, 1, 2, 1.0};
  CHECK(fixed_share_bound(inp) == doctest::Approx(4.1588830833596715).epsilon(1e-13));
  CHECK(specialists_bound(inp) == doctest::Approx(5.5451774444795623).epsilon(1e-13));
  CHECK(pods_bound(inp) == doctest::Approx(4.1588830833596715).epsilon(1e-13));
  CHECK(mpp_uniform_bound(inp) == doctest::Approx(4.8520302639196169).epsilon(1e-13));
  CHECK(mpp_decay_bound(inp) == doctest::Approx(5.5933065752946316).epsilon(1e-13));
  CHECK(ideal_bound(inp) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
}

TEST_CASE("ideal bound matches exact counting for small pools") {
  CHECK(ideal_bound(BoundInputs{2, 3, 1, 2, 1.0}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-13));
  CHECK(ideal_bound(BoundInputs{500000, 4000, 40, 10, 1.0}) ==
        doctest::Approx(427.54634987821362).epsilon(1e-10));
  CHECK_THROWS_AS(ideal_bound(BoundInputs{4, 10, 3, 1, 1.0}), ValidationError);

  Rng rng(401);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t T = 3 + rng.uniform_index(28);
    std::size_t k = 1 + rng.uniform_index(T - 1);
    std::size_t m = 2 + rng.uniform_index(k);
    std::size_t n = m + rng.uniform_index(31 - m);
    if (n < 2) continue;
    long double count = 1.0L;
    for (std::size_t j = 0; j < m; ++j)
      count *= static_cast<long double>(n - j) / static_cast<long double>(j + 1);
    for (std::size_t j = 0; j < k; ++j)
      count *= static_cast<long double>(T - 1 - j) / static_cast<long double>(j + 1);
    count *= static_cast<long double>(m);
    for (std::size_t j = 0; j < k; ++j) count *= static_cast<long double>(m - 1);
    double expected = static_cast<double>(std::log(count));
    CHECK(ideal_bound(BoundInputs{n, T, k, m, 1.0}) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("figure endpoints agree with the published curves") {
  CHECK(fixed_share_bound(figure_inputs(2)) == doctest::Approx(762.013006210327).epsilon(1e-6));
  CHECK(fixed_share_bound(figure_inputs(41)) == doctest::Approx(762.013006210327).epsilon(1e-6));
  CHECK(mpp_decay_bound(figure_inputs(2)) == doctest::Approx(523.612594604492).epsilon(1e-6));
  CHECK(mpp_decay_bound(figure_inputs(41)) == doctest::Approx(1182.93991088867).epsilon(1e-6));
  CHECK(mpp_uniform_bound(figure_inputs(2)) == doctest::Approx(581.992816925049).epsilon(1e-6));
  CHECK(mpp_uniform_bound(figure_inputs(41)) == doctest::Approx(1093.76497268677).epsilon(1e-6));
  CHECK(specialists_bound(figure_inputs(2)) == doctest::Approx(474.236917495728).epsilon(1e-6));
  CHECK(specialists_bound(figure_inputs(41)) == doctest::Approx(986.204814910889).epsilon(1e-6));
  CHECK(pods_bound(figure_inputs(2)) == doctest::Approx(469.619512557983).epsilon(1e-6));
  CHECK(pods_bound(figure_inputs(41)) == doctest::Approx(762.013006210327).epsilon(1e-6));
}

TEST_CASE("printed forms dominate the entropy forms") {
  Rng rng(409);
  for (int trial = 0; trial < 20000; ++trial) {
    BoundInputs inp = random_inputs(rng);
    double slack = 1e-9 * std::max(1.0, fixed_share_bound(inp));
    CHECK(fixed_share_bound_upper(inp) >= fixed_share_bound(inp) - slack);
    CHECK(ideal_bound_upper(inp) >= ideal_bound(inp) - slack);
    CHECK(mpp_decay_bound_upper(inp) >= mpp_decay_bound(inp) - slack);
    CHECK(specialists_bound_upper(inp) >= specialists_bound(inp) - slack);
    CHECK(pods_bound_upper(inp) >= pods_bound(inp) - slack);
  }
}

TEST_CASE("projected sharing never loses to the specialists bound") {
  Rng rng(419);
  for (int trial = 0; trial < 20000; ++trial) {
    BoundInputs inp = random_inputs(rng);
    double diff = specialists_bound(inp) - pods_bound(inp);
    CHECK(diff >= -1e-9);
    if (inp.pool < 2 || inp.switches < 1) continue;
    double k = static_cast<double>(inp.switches);
    double m = static_cast<double>(inp.pool);
    double r = k + 1.0 - m;
    double rhs = (m - 1.0) * std::log(static_cast<double>(inp.horizon - 1) / k);
    if (r > 0.0) rhs -= r * std::log(k / r);
    CHECK(diff >= inp.c * rhs - 1e-6);
  }
}

TEST_CASE("every bound is linear in the loss constant") {
  Rng rng(421);
  for (int trial = 0; trial < 300; ++trial) {
    BoundInputs inp = random_inputs(rng);
    BoundInputs doubled = inp;
    doubled.c = 2.0 * inp.c;
    for (BoundFn fn : kAllBounds)
      CHECK(fn(doubled) == doctest::Approx(2.0 * fn(inp)).epsilon(1e-12));
  }
}

TEST_CASE("pods with a fresh pool every switch matches fixed-share") {
  Rng rng(431);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t T = 3 + rng.uniform_index(9999);
    std::size_t k = 1 + rng.uniform_index(std::min<std::size_t>(T - 1, 200) - 1);
    std::size_t m = k + 1;
    std::size_t n = m + 1 + rng.uniform_index(100000);
    BoundInputs inp{n, T, k, m, 1.0};
    CHECK(pods_bound(inp) == doctest::Approx(fixed_share_bound(inp)).epsilon(1e-12));
  }
}

TEST_CASE("optimal_tuning") {
  Tuning small_pool = optimal_tuning(figure_inputs(2));
  CHECK(small_pool.alpha == doctest::Approx(40.0 / 3999.0).epsilon(1e-15));
  CHECK(small_pool.theta == doctest::Approx(39.0 / 3998.0).epsilon(1e-15));

  Tuning no_revisit = optimal_tuning(figure_inputs(41));
  CHECK(no_revisit.alpha == doctest::Approx(40.0 / 3999.0).epsilon(1e-15));
  CHECK(no_revisit.theta == 0.0);

  Tuning still = optimal_tuning(BoundInputs{8, 100, 0, 1, 1.0});
  CHECK(still.alpha == 0.0);
  CHECK(still.theta == 0.0);

  Tuning bench = optimal_tuning(BoundInputs{16, 2000, 10, 3, 1.0});
  CHECK(bench.alpha == doctest::Approx(10.0 / 1999.0).epsilon(1e-15));
  CHECK(bench.theta == doctest::Approx(8.0 / 3996.0).epsilon(1e-15));

  CHECK_THROWS_AS(optimal_tuning(BoundInputs{1, 10, 2, 2, 1.0}), ValidationError);
}

TEST_CASE("figure1_table spans the requested pool sizes") {
  std::vector<Figure1Row> rows = figure1_table(kFigN, kFigK, kFigT, 1.0, 2, 41);
  REQUIRE(rows.size() == 40);
  CHECK(rows.front().m == 2);
  CHECK(rows.back().m == 41);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].fixed_share == doctest::Approx(rows[0].fixed_share).epsilon(1e-12));
    if (i > 0) CHECK(rows[i].pods > rows[i - 1].pods);
    CHECK(rows[i].pods <= rows[i].specialists + 1e-9);
  }
  CHECK(rows.back().pods == doctest::Approx(rows.back().fixed_share).epsilon(1e-12));

  CHECK_THROWS_AS(figure1_table(kFigN, kFigK, kFigT, 1.0, 0, 41), ValidationError);
  CHECK_THROWS_AS(figure1_table(kFigN, kFigK, kFigT, 1.0, 5, 4), ValidationError);
  CHECK_THROWS_AS(figure1_table(kFigN, 2, kFigT, 1.0, 2, 41), ValidationError);
}
