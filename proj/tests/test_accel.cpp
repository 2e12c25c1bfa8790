#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "piprod/accel.hpp"
#include "piprod/afunc.hpp"
#include "piprod/errors.hpp"
#include "piprod/prodcore.hpp"

using namespace piprod;
using namespace piprod::accel;

TEST_CASE("richardson order 0 returns the last value") {
    const std::vector<Sample> s = {{0.5, 3.0}, {0.25, 2.0}, {0.125, 1.5}};
    const ExtrapolationTable t = richardson(s, 0);
    CHECK(t.best == 1.5);
}

TEST_CASE("richardson removes polynomial error terms") {
    std::vector<Sample> s;
    for (double h = 0.5; h > 0.01; h *= 0.5) {
        s.push_back({h, 2.0 + 3.0 * h - 7.0 * h * h + h * h * h});
    }
    CHECK(std::fabs(richardson(s, 3).best - 2.0) < 1e-13);

    std::vector<Sample> even;
    for (double h = 0.4; h > 0.01; h *= 0.6) {
        even.push_back({h, 1.0 + h * h + 0.5 * h * h * h * h});
    }
    CHECK(std::fabs(richardson(even, 2, 2.0).best - 1.0) < 1e-13);
}

TEST_CASE("richardson with repeated exponents handles h log h") {
    std::vector<Sample> s;
    for (int j = 3; j <= 12; ++j) {
        const double h = std::ldexp(1.0, -j);
        s.push_back({h, 5.0 + h * std::log(h) + 2.0 * h + h * h});
    }
    const std::vector<double> ex = {1.0, 1.0, 2.0};
    CHECK(std::fabs(richardson(s, ex).best - 5.0) < 1e-10);
}

TEST_CASE("richardson input checks") {
    const std::vector<Sample> repeated = {{0.5, 1.0}, {0.5, 1.0}, {0.25, 1.0}};
    CHECK_THROWS_AS(richardson(repeated, 1), std::invalid_argument);
    const std::vector<Sample> s = {{0.5, 1.0}, {0.25, 1.0}, {0.125, 1.0}};
    CHECK_THROWS_AS(richardson(s, 3), std::invalid_argument);
    const std::vector<Sample> ragged = {{0.5, 1.0}, {0.25, 1.0}, {0.2, 1.0}};
    const std::vector<double> ex = {1.0};
    CHECK_THROWS_AS(richardson(ragged, ex), std::invalid_argument);
}

TEST_CASE("wynn epsilon on an alternating series") {
    std::vector<double> partial;
    double acc = 0.0;
    for (int k = 0; k <= 20; ++k) {
        acc += ((k % 2 == 0) ? 1.0 : -1.0) / (k + 1);
        partial.push_back(acc);
    }
    const ExtrapolationTable t = wynn_epsilon(partial, 10);
    CHECK(std::fabs(t.best - std::log(2.0)) < 1e-10);
    CHECK(t.method == ExtrapolationMethod::wynn_epsilon);
}

TEST_CASE("wynn epsilon is exact on a geometric sequence") {
    std::vector<double> v;
    for (int n = 0; n < 3; ++n) v.push_back(0.75 + 2.0 * std::pow(0.6, n));
    CHECK(std::fabs(wynn_epsilon(v, 1).best - 0.75) < 1e-15);
}

TEST_CASE("wynn epsilon on a constant sequence signals failure") {
    const std::vector<double> v(7, 1.25);
    CHECK_THROWS_AS(wynn_epsilon(v, 3), NumericalFailure);
    const std::vector<double> short_v = {1.0, 2.0};
    CHECK_THROWS_AS(wynn_epsilon(short_v, 1), std::invalid_argument);
}

TEST_CASE("wynn epsilon on the e-corrected product") {
    // the partial sums converge like 1/N, which epsilon only partly accelerates
    const double limit = std::log(std::numbers::pi) - 1.5;
    const ExtrapolationTable t = afunc::product_wynn_table(1.0, 200);
    const double naive = prodcore::corrected_partial(1.0, 200).log_value;
    const double err = std::fabs(t.best - limit);
    CHECK(err < std::fabs(naive - limit) / 1000.0);
    // the reported error bounds the true one within a factor of 100
    CHECK(t.est_error > err / 100.0);
    CHECK(t.est_error < err * 100.0);
}

TEST_CASE("digits gained") {
    CHECK(digits_gained(1.0, 1.5, 0.5) == 0.0);
    CHECK(digits_gained(1.0, 1.0 + 1e-4, 1.0 + 1e-8) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(std::isfinite(digits_gained(1.0, 2.0, 1.0)));
}

TEST_CASE("doubling schedule") {
    const std::vector<long long> s = doubling_schedule(200);
    const std::vector<long long> want = {3, 6, 12, 24, 48, 96, 192};
    CHECK(s == want);
    CHECK(doubling_schedule(20) == std::vector<long long>{5, 10, 20});
    CHECK_THROWS_AS(doubling_schedule(2), std::invalid_argument);
}
