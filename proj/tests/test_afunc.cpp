#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "piprod/afunc.hpp"
#include "piprod/prodcore.hpp"

using namespace piprod;
using namespace piprod::afunc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("series for log A") {
    CHECK(std::fabs(log_A_series(1.0, 40).log_A - 0.35527011415059982586) < 1e-15);
    CHECK(std::fabs(log_A_series(4.0, 40).log_A - 0.082402928450436771749) < 1e-16);
    CHECK(std::fabs(log_A_series(2.0, 40).log_A - 0.16869252049338848607) < 1e-16);
    CHECK(std::fabs(log_A_series(0.5, 60).log_A - 0.81176117056148790765) < 1e-14);
}

TEST_CASE("series error estimate bounds the truncation") {
    const AFunctionValue coarse = log_A_series(1.0, 8);
    const double truth = log_A_series(1.0, 40).log_A;
    CHECK(coarse.est_error > 0.0);
    CHECK(std::fabs(truth - coarse.log_A) <= coarse.est_error);
    CHECK(std::fabs(truth - coarse.log_A) > coarse.est_error / 10.0);
}

TEST_CASE("series domain and cache bounds") {
    CHECK_THROWS_AS(log_A_series(0.25, 10), std::domain_error);
    CHECK_THROWS_AS(log_A_series(1.0, 0), std::domain_error);
    CHECK_THROWS_AS(log_A_series(1.0, 61), std::out_of_range);
    const specfun::ZetaCache big(120);
    CHECK_NOTHROW(log_A_series(1.0, 120, big));
}

TEST_CASE("closed form agrees with the series") {
    for (double y : {1.5, 2.0, 4.0, 9.0, 25.0, 100.0}) {
        CHECK(std::fabs(A_closed(y).log_A - log_A_series(y, 60).log_A) < 1e-12);
    }
    CHECK_THROWS_AS(A_closed(1.0), std::domain_error);
}

TEST_CASE("P(1, 4)") {
    CHECK(p_ratio(1.0, 4.0) == doctest::Approx(0.761193878347632).epsilon(1e-13));
}

TEST_CASE("limit at x = 1") {
    CHECK(limit_sample(0.0625) == doctest::Approx(1.9007204612810005593).epsilon(1e-14));
    // approached from above, the samples fall toward pi/2
    double prev = limit_sample(0.5);
    for (int j = 2; j <= 20; ++j) {
        const double v = limit_sample(std::ldexp(1.0, -j));
        CHECK(v < prev);
        CHECK(v > kPi / 2.0);
        prev = v;
    }
    CHECK(std::fabs(limit_at_one() - kPi / 2.0) < 1e-12);
    CHECK(limit_at_one_table().est_error < 1e-10);
    CHECK_THROWS_AS(limit_sample(0.0), std::domain_error);
}

TEST_CASE("pi from the e-corrected product") {
    using prodcore::Method;
    CHECK(std::fabs(pi_from_product(Method::series, 40) - kPi) <= 1e-12 * kPi);
    CHECK(std::fabs(pi_from_product(Method::tail_corrected, 1000) - kPi) <= 1e-10 * kPi);
    const double naive_rel = (pi_from_product(Method::naive, 10000) - kPi) / kPi;
    CHECK(naive_rel == doctest::Approx(5e-5).epsilon(0.01));
    CHECK(std::fabs(pi_from_product(Method::extrapolated, 200) - kPi) < 1e-5);
    CHECK(std::fabs(pi_from_product(Method::series, 200) - kPi) <= 1e-15 * kPi);
    CHECK_THROWS_AS(pi_from_product(Method::series, 0), std::domain_error);
}
