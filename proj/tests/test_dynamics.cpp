#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncf/dynamics.hpp"

#include <cmath>

using namespace ncf;

namespace {

// standard dilogarithm sum_{k>=1} z^k/k^2 for |z| <= 1
double dilog_series(double z) {
    if (z == -1.0) return -kPi * kPi / 12.0;
    double sum = 0.0, term = z;
    for (int k = 1; k < 2000; ++k) {
        sum += term / (static_cast<double>(k) * k);
        term *= z;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

// Li2(-n), using the inversion identity
// Li2(-n) + Li2(-1/n) = -pi^2/6 - (ln n)^2/2 once the series would diverge
double dilog_minus(double n) {
    if (n <= 1.0) return dilog_series(-n);
    return -kPi * kPi / 6.0 - 0.5 * std::log(n) * std::log(n) - dilog_series(-1.0 / n);
}

}  // namespace

TEST_CASE("orbits of the three maps") {
    auto t = orbit(MapKind::T, 2, 0.75, 0.0, 1);
    CHECK(t.digits[0] == 2);
    CHECK(t.xs[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    auto f = orbit(MapKind::F, 2, 0.5, 0.0, 1);
    CHECK(f.xs[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(f.digits[0] == 1);  // decrement branch

    auto fu = orbit(MapKind::F, 2, 0.7, 0.0, 1);  // 0.7 > 2/3: shift branch
    CHECK(fu.digits[0] == 2);
    CHECK(fu.xs[0] == doctest::Approx(2.0 / 0.7 - 2.0).epsilon(1e-12));

    auto ne = orbit(MapKind::NatExt, 3, 0.0, 0.2, 1);
    CHECK(ne.xs[0] == 0.0);
    CHECK(ne.ys[0] == 0.0);

    auto ne2 = orbit(MapKind::NatExt, 2, 0.75, 0.25, 1);
    CHECK(ne2.xs[0] == doctest::Approx(2.0 / 3.0));
    CHECK(ne2.ys[0] == doctest::Approx(1.0 / (2.0 * 0.25 + 2.0)));

    CHECK_THROWS_AS(orbit(MapKind::T, 2, 1.5, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(orbit(MapKind::NatExt, 2, 0.5, 0.9, 1), std::invalid_argument);
}

TEST_CASE("floating orbit digits track the exact expansion, divergence is flagged") {
    ExactReal x = ExactReal::surd(-1, 1, 1, 2);
    OrbitSample fp = orbit(MapKind::T, 2, x.to_double(), 0.0, 10);
    DigitSequence exact = greedy_digits(x, 2, 10);
    CHECK(fp.digits == exact.values);  // agreement over a short horizon

    auto divergence = orbit_digit_divergence(x, 2, 200);
    REQUIRE(divergence.has_value());   // chaotic growth must show up eventually
    CHECK(*divergence >= 10);
}

TEST_CASE("slow-map digit semantics, symbolically") {
    DigitSequence digits{{4, 2, 5, 3, 2, 2, 7, 2}, false};
    auto rep = farey_digit_semantics_check(digits, 2, 14);
    CHECK(rep.block_shift_law);
    CHECK(rep.matches_slow_digits);
    std::vector<long long> expect{1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 2, 1, 1};
    CHECK(rep.trace == expect);

    DigitSequence shift_now{{2, 6}, false};
    auto rep2 = farey_digit_semantics_check(shift_now, 2, 1);
    CHECK(rep2.trace == std::vector<long long>{2});

    CHECK_THROWS_AS(farey_digit_semantics_check(DigitSequence{{1, 2}, false}, 2, 2),
                    std::domain_error);
}

TEST_CASE("dilogarithm in the integral convention") {
    CHECK(dilog_integral(1.0) == doctest::Approx(-kPi * kPi / 6.0).epsilon(1e-11));
    CHECK(dilog_integral(2.0) == doctest::Approx(-kPi * kPi / 4.0).epsilon(1e-11));
    // against the series route: int_0^x log t/(1-t) dt = Li2(1-x) - pi^2/6
    for (double x : {1.5, 3.0, 4.0, 6.0}) {
        double expected = dilog_minus(x - 1.0) - kPi * kPi / 6.0;
        CHECK(dilog_integral(x) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("entropy: formula as printed vs the measured value") {
    // the verbatim formula comes out negative; its n = 1 magnitude matches
    CHECK(entropy_formula(1) == doctest::Approx(-kPi * kPi / (6.0 * std::log(2.0))).epsilon(1e-10));
    CHECK(rokhlin_entropy(1) == doctest::Approx(kPi * kPi / (6.0 * std::log(2.0))).epsilon(1e-10));

    for (long long n = 1; n <= 5; ++n) {
        const double nn = static_cast<double>(n);
        const double c = std::log((nn + 1.0) / nn);
        // series-route value of the printed formula
        double formula_series = (2.0 * (dilog_minus(nn) - kPi * kPi / 6.0) + kPi * kPi / 3.0 +
                                 std::log(nn + 1.0) * std::log(nn)) /
                                c;
        CHECK(entropy_formula(n) == doctest::Approx(formula_series).epsilon(1e-9));
        // series-route value of the entropy integral
        double rokhlin_series = std::log(nn) - 2.0 * dilog_series(-1.0 / nn) / c;
        CHECK(rokhlin_entropy(n) == doctest::Approx(rokhlin_series).epsilon(1e-9));
        CHECK(rokhlin_entropy(n) > 0.0);
    }

    // frozen cross-validated values
    CHECK(entropy_formula(2) == doctest::Approx(-5.208814966).epsilon(1e-8));
    CHECK(rokhlin_entropy(2) == doctest::Approx(2.904998203).epsilon(1e-8));

    auto rep = entropy_report(1);
    CHECK(rep.sign_mismatch);
    CHECK(rep.dilog_value == doctest::Approx(-kPi * kPi / 4.0).epsilon(1e-10));
}

TEST_CASE("invariant density: preimage masses telescope back") {
    // unnormalized mass m(a,b) = log(n+b) - log(n+a); the preimage of (a,b)
    // under branch d is (n/(d+b), n/(d+a))
    for (long long n : {1LL, 2LL, 3LL}) {
        const double nn = static_cast<double>(n);
        for (auto [a, b] : std::vector<std::pair<double, double>>{{0.1, 0.4}, {0.25, 0.9}}) {
            double sum = 0.0;
            const long long dmax = 20000;
            for (long long d = n; d <= dmax; ++d) {
                double lo = nn / (static_cast<double>(d) + b);
                double hi = nn / (static_cast<double>(d) + a);
                sum += std::log(nn + hi) - std::log(nn + lo);
            }
            double direct = std::log(nn + b) - std::log(nn + a);
            CHECK(std::abs(sum - direct) < 1e-3);
        }
    }
}

TEST_CASE("growth rates from exact denominators") {
    DigitSequence digits{{5, 2, 3, 4}, false};
    auto rates = growth_rate(digits, 2, 4);
    CHECK(rates.q_rate[0] == doctest::Approx(std::log(5.0)).epsilon(1e-12));

    for (long long n : {1LL, 2LL, 3LL, 5LL}) {
        DigitSequence constant;
        constant.values.assign(1000, n);
        auto r = growth_rate(constant, n, 1000);
        const double nn = static_cast<double>(n);
        const double expect = std::log((nn + std::sqrt(nn * nn + 4.0 * nn)) / 2.0);
        CHECK(std::abs(r.q_rate.back() - expect) < 1e-3);
        CHECK(std::abs(r.word_rate.back() - expect) < 2e-2);
    }
}

TEST_CASE("cylinder widths shrink at the entropy rate") {
    // -(1/k) log(n^k / (q_k (q_k + q_{k-1}))) approaches the measured entropy
    for (long long n : {1LL, 2LL}) {
        const double h = rokhlin_entropy(n);
        double mean = 0.0;
        const int seeds = 8;
        const std::size_t depth = 3000;
        for (int s = 0; s < seeds; ++s) {
            std::mt19937_64 rng(900 + s);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            OrbitSample sample = orbit(MapKind::T, n, unit(rng), 0.0, depth);
            DigitSequence digits{sample.digits, false};
            REQUIRE(digits.size() == depth);
            auto cs = convergents(digits, n, depth);
            double log_width = depth * std::log(static_cast<double>(n)) -
                               log_big(cs[depth - 1].q) -
                               log_big(cs[depth - 1].q + cs[depth - 2].q);
            mean += -log_width / static_cast<double>(depth);
        }
        mean /= seeds;
        CHECK(std::abs(mean - h) / h < 0.03);
    }
}

TEST_CASE("slow map invariant measure identity") {
    CHECK(farey_invariance_residual(0.25, 0.5, 2) < 1e-12);
    CHECK(farey_invariance_residual(0.3, 0.3, 3) == doctest::Approx(0.0));
    CHECK(farey_invariance_residual(0.1, 1.0, 5) < 1e-12);
    CHECK_THROWS_AS(farey_invariance_residual(0.0, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(farey_invariance_residual(0.5, 0.2, 2), std::invalid_argument);
}

TEST_CASE("natural extension histogram against the closed-form measure") {
    auto check = natext_invariance_check(1, 400000, 10, 12345);
    CHECK(check.theoretical_mass_2d == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(check.tv_2d < 0.05);
    CHECK(check.tv_1d < 0.05);

    // discrepancies shrink roughly like 1/sqrt(iterations)
    auto longer = natext_invariance_check(1, 4000000, 10, 12345);
    CHECK(longer.tv_2d < check.tv_2d);

    // reproducibility for a fixed seed
    auto again = natext_invariance_check(1, 400000, 10, 12345);
    CHECK(again.empirical_2d == check.empirical_2d);

    CHECK_THROWS_AS(natext_invariance_check(2, 1000, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(natext_invariance_check(2, 200000, 4, 1), std::invalid_argument);
}
