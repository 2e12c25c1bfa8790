#include "piprod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <vector>

#include "piprod/afunc.hpp"
#include "piprod/chains.hpp"
#include "piprod/errors.hpp"
#include "piprod/prodcore.hpp"
#include "piprod/quad.hpp"
#include "piprod/specfun.hpp"
#include "piprod/summation.hpp"

namespace piprod::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
    double lhs;
    double rhs;
};

struct Outcome {
    std::vector<Point> points;
    long long terms;
    std::string method;
};

struct Entry {
    std::string id;
    std::string description;
    double tolerance;
    TolerancePolicy policy;
    std::function<Outcome()> compute;
};

double apery_term() { return 3.5 * specfun::apery() / (kPi * kPi); }

double eq_1_5_rhs() { return (81.0 / 512.0) * kPi * std::exp(apery_term()); }

const specfun::ZetaCache& wide_cache() {
    static const specfun::ZetaCache cache(200);
    return cache;
}

double zeta_even(int k) { return 1.0 + wide_cache().even_minus_1(k); }

// sum_{k<=K} x^{2k} zeta(2k) / (k + shift)
double even_zeta_power_series(double x, int K, int shift) {
    CompensatedSum acc;
    const double x2 = x * x;
    for (int k = K; k >= 1; --k) {
        acc += std::pow(x2, k) * zeta_even(k) / (k + shift);
    }
    return acc.value();
}

// Which of the three regimes the partial products actually reach by n = limit.
prodcore::Convergence observed_regime(double a, long long limit) {
    const double per_term = std::log(a) - 1.0;
    const double low = std::log(1e-6);
    const double high = std::log(1e6);
    CompensatedSum acc;
    for (long long n = 2; n <= limit; ++n) {
        acc += prodcore::log_term(1.0, n) + per_term;
        const double v = acc.value();
        if (v < low) {
            return prodcore::Convergence::converges_to_zero;
        }
        if (v > high) {
            return prodcore::Convergence::diverges;
        }
    }
    return prodcore::Convergence::converges_nonzero;
}

std::vector<Entry> build_registry() {
    std::vector<Entry> r;
    r.push_back({"eq_1_1", "S = sum ((-1)^n - 1)^2 / n^3 equals (7/2) zeta(3)", 1e-10,
                 TolerancePolicy::absolute, [] {
                     return Outcome{{{chains::s_tail_corrected(10000), 3.5 * specfun::apery()}},
                                    10000, "direct+odd_tail"};
                 }});
    r.push_back({"eq_1_3_collapse", "n^2 bracket of the three-bracket summand equals the product summand",
                 1e-12, TolerancePolicy::absolute, [] {
                     Outcome o{{}, 4, "log1p_expansion vs log_term"};
                     for (long long n : {2LL, 3LL, 10LL, 1000LL}) {
                         o.points.push_back({chains::term_1_3(n).quadratic_bracket, chains::term_1_4(n)});
                     }
                     return o;
                 }});
    r.push_back({"eq_1_3_chain", "15 log 2 - 9 log 3 + sum of three-bracket summands equals S / pi^2",
                 1e-9, TolerancePolicy::absolute, [] {
                     const double lhs = 15.0 * std::log(2.0) - 9.0 * std::log(3.0) +
                                        chains::sum_term_1_3(1000, 8);
                     return Outcome{{{lhs, apery_term()}}, 1000, "tail_corrected K=8"};
                 }});
    r.push_back({"eq_1_4_chain", "15 log 2 - 9 log 3 - log(64 pi/243) + sum term_1_4 equals S / pi^2",
                 1e-9, TolerancePolicy::absolute, [] {
                     const double lhs = chains::chain_1_4_constant() + chains::sum_term_1_4(1000, 6);
                     return Outcome{{{lhs, apery_term()}}, 1000, "tail_corrected K=6"};
                 }});
    r.push_back({"eq_1_5", "exp(sum term_1_4) equals (81/512) pi exp(7 zeta(3) / (2 pi^2))", 1e-9,
                 TolerancePolicy::relative, [] {
                     return Outcome{{{std::exp(chains::sum_term_1_4(1000, 6)), eq_1_5_rhs()}}, 1000,
                                    "tail_corrected K=6"};
                 }});
    r.push_back({"superfactorial", "prod (1+n)^n equals Gamma^N(N+2) / prod Gamma(n+1), N in {1,2,10,40}",
                 1e-10, TolerancePolicy::absolute, [] {
                     Outcome o{{}, 4, "log_space"};
                     for (long long n : {1LL, 2LL, 10LL, 40LL}) {
                         const auto [lhs, rhs] = chains::superfactorial_identity(n);
                         o.points.push_back({lhs, rhs});
                     }
                     return o;
                 }});
    r.push_back({"gamma_product", "finite gamma-product closed form, N = 2..50", 1e-10,
                 TolerancePolicy::absolute, [] {
                     Outcome o{{}, 49, "log_space"};
                     for (long long n = 2; n <= 50; ++n) {
                         o.points.push_back({chains::gamma_product_lhs(n), chains::gamma_product_rhs(n)});
                     }
                     return o;
                 }});
    r.push_back({"euler_92", "(9/2) prod (n-1)^n (2n+1)^{2n} / ((n+1)^n (2n-1)^{2n}) equals pi", 1e-8,
                 TolerancePolicy::absolute, [] {
                     return Outcome{{{chains::euler_92_extrapolated(200), kPi}}, 200, "wynn_epsilon"};
                 }});
    r.push_back({"a_vs_e", "a < e sends the product to zero, a > e diverges, a = e converges", 0.0,
                 TolerancePolicy::absolute, [] {
                     int agree = 0;
                     for (double a : {2.6, std::numbers::e, 2.8}) {
                         if (prodcore::classify(a, 1.0) == observed_regime(a, 100000)) {
                             ++agree;
                         }
                     }
                     return Outcome{{{static_cast<double>(agree), 3.0}}, 100000, "classify vs partials"};
                 }});
    r.push_back({"eq_2_1", "tail-corrected log(Q_N / U_N) equals log of (81/512) pi exp(7 zeta(3)/(2 pi^2))",
                 1e-10, TolerancePolicy::absolute, [] {
                     constexpr long long N = 10000;
                     const double lhs = prodcore::p_partial(N).log_value +
                                        prodcore::tail_correction(1.0, N, 6) -
                                        prodcore::tail_correction(4.0, N, 6);
                     return Outcome{{{lhs, std::log(eq_1_5_rhs())}}, N, "tail_corrected K=6"};
                 }});
    r.push_back({"eq_2_4_vs_2_8", "series and closed forms of log A(y), y in {1.5,2,4,9,25}", 1e-9,
                 TolerancePolicy::absolute, [] {
                     Outcome o{{}, 60, "series K=60 vs closed+quadrature"};
                     for (double y : {1.5, 2.0, 4.0, 9.0, 25.0}) {
                         o.points.push_back({afunc::log_A_series(y, 60).log_A, afunc::A_closed(y).log_A});
                     }
                     return o;
                 }});
    r.push_back({"eq_2_5_consistency", "1/A(x) equals the tail-corrected e-corrected product, x in {1,4}",
                 1e-10, TolerancePolicy::absolute, [] {
                     Outcome o{{}, 1000, "series K=60 vs tail_corrected N=1000 K=6"};
                     for (double x : {1.0, 4.0}) {
                         o.points.push_back({std::exp(-afunc::log_A_series(x, 60).log_A),
                                             prodcore::tail_corrected_partial(x, 1000, 6).value()});
                     }
                     return o;
                 }});
    r.push_back({"eq_2_6", "log sin(pi x) = log(pi x) - sum x^{2k} zeta(2k) / k, x in {0.1,0.25,0.5}",
                 1e-12, TolerancePolicy::absolute, [] {
                     Outcome o{{}, 200, "zeta series K=200"};
                     for (double x : {0.1, 0.25, 0.5}) {
                         const double lhs = std::log(std::sin(kPi * x));
                         const double rhs = std::log(kPi * x) - even_zeta_power_series(x, 200, 0);
                         o.points.push_back({lhs, rhs});
                     }
                     return o;
                 }});
    r.push_back({"eq_2_7", "sum x^{2k} zeta(2k)/(k+1) = 1/2 - log sin(pi x) + (2/x^2) int_0^x t log sin(pi t)",
                 1e-9, TolerancePolicy::absolute, [] {
                     Outcome o{{}, 200, "zeta series K=200 vs quadrature"};
                     for (double x : {0.3, 0.5}) {
                         const double lhs = even_zeta_power_series(x, 200, 1);
                         const quad::QuadratureResult q = quad::integrate_t_logsin(x);
                         if (!q.converged) {
                             throw NumericalFailure("quadrature did not converge");
                         }
                         const double rhs = 0.5 - quad::log_sin_pi(x) + 2.0 / (x * x) * q.value;
                         o.points.push_back({lhs, rhs});
                     }
                     return o;
                 }});
    r.push_back({"eq_2_10", "P(1,4) = A(4)/A(1) equals (81/512) pi exp(7 zeta(3)/(2 pi^2))", 1e-9,
                 TolerancePolicy::relative, [] {
                     return Outcome{{{afunc::p_ratio(1.0, 4.0), eq_1_5_rhs()}}, 40, "series"};
                 }});
    r.push_back({"r_at_1", "R(1) = -log 2", 1e-10, TolerancePolicy::absolute, [] {
                     return Outcome{{{quad::r_of_y(1.0), -std::log(2.0)}}, 1, "quadrature"};
                 }});
    r.push_back({"r_at_4_euler", "R(4) = -log 2 + 7 zeta(3) / (2 pi^2)", 1e-9, TolerancePolicy::absolute,
                 [] {
                     return Outcome{{{quad::r_of_y(4.0), -std::log(2.0) + apery_term()}}, 1, "quadrature"};
                 }});
    r.push_back({"eq_2_11", "lim_{x->1} (1 - 1/x)^{-x} sin(pi/sqrt x) = pi/2", 1e-8,
                 TolerancePolicy::absolute, [] {
                     return Outcome{{{afunc::limit_at_one(), 0.5 * kPi}}, 17, "richardson"};
                 }});
    r.push_back({"eq_2_12", "pi = e^{3/2} prod (1 - 1/n^2)^{n^2} e (series K=40 and tail-corrected N=1000)",
                 1e-11, TolerancePolicy::relative, [] {
                     using prodcore::Method;
                     return Outcome{{{afunc::pi_from_product(Method::series, 40), kPi},
                                     {afunc::pi_from_product(Method::tail_corrected, 1000), kPi}},
                                    1000, "series K=40; tail_corrected N=1000 K=6"};
                 }});
    return r;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = build_registry();
    return entries;
}

const Entry& find(std::string_view id) {
    for (const Entry& e : registry()) {
        if (e.id == id) {
            return e;
        }
    }
    throw UnknownCheck(std::string(id));
}

double metric(const IdentityCheck& c) {
    return c.policy == TolerancePolicy::absolute ? c.abs_err : c.rel_err;
}

}  // namespace

std::string_view to_string(TolerancePolicy p) {
    return p == TolerancePolicy::absolute ? "absolute" : "relative";
}

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Entry& e : registry()) {
            out.push_back(e.id);
        }
        return out;
    }();
    return ids;
}

bool is_registered(std::string_view id) {
    const auto& ids = registry_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void score(IdentityCheck& check) {
    check.abs_err = std::fabs(check.lhs - check.rhs);
    const double scale = std::max({std::fabs(check.lhs), std::fabs(check.rhs), 1e-300});
    check.rel_err = check.abs_err / scale;
    check.pass = check.abs_err <= check.tolerance || check.rel_err <= check.tolerance;
}

IdentityCheck run_check(std::string_view id, double tolerance_scale) {
    const Entry& entry = find(id);
    IdentityCheck check;
    check.id = entry.id;
    check.description = entry.description;
    check.tolerance = entry.tolerance * tolerance_scale;
    check.policy = entry.policy;

    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome outcome = entry.compute();
        check.terms = outcome.terms;
        check.method = outcome.method;
        // report the worst point
        bool first = true;
        for (const Point& p : outcome.points) {
            IdentityCheck candidate = check;
            candidate.lhs = p.lhs;
            candidate.rhs = p.rhs;
            score(candidate);
            if (first || metric(candidate) > metric(check) || std::isnan(metric(candidate))) {
                check = candidate;
                first = false;
            }
        }
    } catch (const std::exception& e) {
        check.lhs = std::numeric_limits<double>::quiet_NaN();
        check.rhs = std::numeric_limits<double>::quiet_NaN();
        check.abs_err = std::numeric_limits<double>::quiet_NaN();
        check.rel_err = std::numeric_limits<double>::quiet_NaN();
        check.pass = false;
        check.method = std::string("failed:") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    check.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return check;
}

std::vector<IdentityCheck> run_checks(std::span<const std::string> ids, double tolerance_scale) {
    for (const std::string& id : ids) {
        find(id);
    }
    std::vector<std::future<IdentityCheck>> pending;
    pending.reserve(ids.size());
    for (const std::string& id : ids) {
        pending.push_back(std::async(std::launch::async, [id, tolerance_scale] {
            return run_check(id, tolerance_scale);
        }));
    }
    std::vector<IdentityCheck> out;
    out.reserve(ids.size());
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    return out;
}

std::vector<IdentityCheck> run_all(double tolerance_scale) {
    return run_checks(registry_ids(), tolerance_scale);
}

}  // namespace piprod::verify
