#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "piprod/specfun.hpp"
#include "piprod/summation.hpp"

using namespace piprod;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zeta at even and odd integers") {
    CHECK(std::fabs(specfun::zeta(2.0) - kPi * kPi / 6.0) < 2e-16);
    CHECK(std::fabs(specfun::zeta(4.0) - std::pow(kPi, 4) / 90.0) < 3e-16);
    CHECK(std::fabs(specfun::apery() - 1.2020569031595942854) < 2e-16);
    CHECK(std::fabs(specfun::zeta(40.0) - 1.0 - std::pow(2.0, -40)) < 1e-18);
}

TEST_CASE("zeta rejects s < 2") {
    CHECK_THROWS_AS(specfun::zeta(1.5), std::domain_error);
    CHECK_THROWS_AS(specfun::hurwitz_zeta(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(specfun::hurwitz_zeta(3.0, 0.0), std::domain_error);
}

TEST_CASE("hurwitz zeta") {
    // zeta(3, 1/2) = 7 zeta(3)
    CHECK(std::fabs(specfun::hurwitz_zeta(3.0, 0.5) - 8.4143983221171599978) < 1e-14);
    CHECK(std::fabs(specfun::hurwitz_zeta(4.0, 2.5) - 0.037317641469542008543) < 1e-17);
    CHECK(std::fabs(specfun::zeta_even_minus_1(10) - 9.5396203387279611315e-7) < 1e-21);
}

TEST_CASE("zeta tails agree with direct sums") {
    for (int s : {2, 4, 6}) {
        for (long long n : {1LL, 10LL, 1000LL}) {
            CompensatedSum head;
            for (long long k = 1; k <= n; ++k) head += std::pow(static_cast<double>(k), -s);
            const double total = specfun::zeta(s);
            CHECK(std::fabs(head.value() + specfun::zeta_tail(s, n) - total) < 4e-16);
        }
    }
    CHECK(specfun::zeta_tail(2.0, 0) == Approx(kPi * kPi / 6.0).epsilon(1e-15));
}

TEST_CASE("log gamma") {
    // absolute accuracy is a few ulp of log Gamma at the shifted argument
    CHECK(std::fabs(specfun::log_gamma(0.5) - 0.57236494292470008707) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(1.5) + 0.12078223763524522235) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(3.7) - 1.4280723266653881292) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(10.2) - 13.25426674423555004) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(55.5) - 166.32150615984036914) < 6e-14);
    CHECK(std::fabs(specfun::log_gamma(1e-3) - 6.9071788853838536617) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(1.0)) < 4e-15);
    CHECK(std::fabs(specfun::log_gamma(2.0)) < 4e-15);
    CHECK_THROWS_AS(specfun::log_gamma(0.0), std::domain_error);
}

TEST_CASE("log gamma against std::lgamma on a grid") {
    for (double x = 0.05; x < 200.0; x *= 1.37) {
        CHECK(std::fabs(specfun::log_gamma(x) - std::lgamma(x)) <= 1e-14 * std::max(1.0, std::fabs(std::lgamma(x))));
    }
}

TEST_CASE("zeta cache") {
    const specfun::ZetaCache cache(80);
    CHECK(cache.max_k() == 80);
    for (int k : {1, 2, 17, 80}) {
        CHECK(cache.even_minus_1(k) == specfun::zeta_even_minus_1(k));
    }
    CHECK(cache.zeta3() == specfun::apery());
    CHECK_THROWS_AS((void)cache.even_minus_1(0), std::out_of_range);
    CHECK_THROWS_AS((void)cache.even_minus_1(81), std::out_of_range);
    CHECK_THROWS_AS(specfun::ZetaCache(0), std::invalid_argument);
    CHECK(specfun::default_zeta_cache().max_k() == specfun::ZetaCache::kDefaultMaxK);
}

TEST_CASE("compensated sum keeps small addends") {
    CompensatedSum s;
    s += 1.0;
    for (int i = 0; i < 1000; ++i) s += 1e-16;
    s -= 1.0;
    CHECK(s.value() == Approx(1e-13).epsilon(1e-10));
}
