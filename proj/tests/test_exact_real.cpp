#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncf/digits.hpp"
#include "ncf/exact_real.hpp"

#include <random>

using namespace ncf;

TEST_CASE("canonical forms") {
    // square factors of the radicand fold into the coefficient
    ExactReal a = ExactReal::surd(0, 1, 1, 8);      // sqrt(8) = 2 sqrt(2)
    ExactReal b = ExactReal::surd(0, 2, 1, 2);
    CHECK(a == b);

    // perfect-square radicand collapses to a rational
    ExactReal c = ExactReal::surd(1, 3, 2, 9);      // (1 + 3*3)/2 = 5
    CHECK(c.is_rational());
    CHECK(c.to_rational() == BigRational(5));

    // gcd and sign normalization
    ExactReal d = ExactReal::surd(-2, 2, -4, 3);
    const auto& s = d.as_surd();
    CHECK(s.a == 1);
    CHECK(s.b == -1);
    CHECK(s.c == 2);
    CHECK(s.d == 3);

    ExactReal e = ExactReal::rational(6, -8);
    CHECK(e.as_rational().num == -3);
    CHECK(e.as_rational().den == 4);
}

TEST_CASE("comparisons and floor") {
    ExactReal sqrt2m1 = ExactReal::surd(-1, 1, 1, 2);  // 0.4142...
    CHECK(sqrt2m1.cmp_int(0) > 0);
    CHECK(sqrt2m1.cmp_int(1) < 0);
    CHECK(sqrt2m1.floor_value() == 0);

    ExactReal big = ExactReal::surd(1, 5, 2, 3);       // (1 + 5 sqrt 3)/2 = 4.830...
    CHECK(big.floor_value() == 4);

    ExactReal neg = ExactReal::surd(-1, -5, 2, 3);     // -4.830...
    CHECK(neg.floor_value() == -5);

    CHECK(ExactReal::rational(-7, 2).floor_value() == -4);
    CHECK(ExactReal::rational(7, 2).floor_value() == 3);
}

TEST_CASE("field operations close within the representation") {
    ExactReal x = ExactReal::surd(-1, 1, 1, 2);
    ExactReal inv2 = x.reciprocal_times(2);            // 2/(sqrt2 - 1) = 2 + 2 sqrt2
    const auto& s = inv2.as_surd();
    CHECK(s.a == 2);
    CHECK(s.b == 2);
    CHECK(s.c == 1);
    CHECK(s.d == 2);

    ExactReal next = inv2.minus_int(4);                // 2 sqrt2 - 2 = 0.828...
    CHECK(next == ExactReal::surd(-2, 2, 1, 2));
    CHECK(next.cmp_int(0) > 0);
    CHECK(next.cmp_int(1) < 0);

    CHECK_THROWS_AS(ExactReal::rational(0, 1).reciprocal_times(1), std::domain_error);
}

TEST_CASE("tn_step on rationals and surds") {
    // 2/(3/4) = 8/3 -> digit 2, remainder 2/3
    auto [d1, next1] = tn_step(ExactReal::rational(3, 4), 2);
    CHECK(d1 == 2);
    CHECK(next1.to_rational() == BigRational(2, 3));

    // 1/(1/2) = 2 exactly: digit 2, orbit terminates at 0
    auto [d2, next2] = tn_step(ExactReal::rational(1, 2), 1);
    CHECK(d2 == 2);
    CHECK(next2.is_zero());

    // sqrt2 - 1 under the n = 2 map: digit 4, remainder 2 sqrt2 - 2
    auto [d3, next3] = tn_step(ExactReal::surd(-1, 1, 1, 2), 2);
    CHECK(d3 == 4);
    CHECK(next3 == ExactReal::surd(-2, 2, 1, 2));
    CHECK(next3.to_double() == doctest::Approx(0.8284271247).epsilon(1e-9));

    CHECK_THROWS_AS(tn_step(ExactReal::rational(0, 1), 2), std::domain_error);
    CHECK_THROWS_AS(tn_step(ExactReal::rational(3, 2), 2), std::domain_error);
}

TEST_CASE("greedy digit runs") {
    DigitSequence run = greedy_digits(ExactReal::surd(-1, 1, 1, 2), 2, 6);
    CHECK(run.values == std::vector<long long>{4, 2, 4, 2, 4, 2});
    CHECK_FALSE(run.terminated);

    DigitSequence fin = greedy_digits(ExactReal::rational(1, 2), 1, 10);
    CHECK(fin.values == std::vector<long long>{2});
    CHECK(fin.terminated);

    // golden ratio mean: digits all 1 under the classical map
    DigitSequence gold = greedy_digits(ExactReal::surd(-1, 1, 2, 5), 1, 5);
    CHECK(gold.values == std::vector<long long>{1, 1, 1, 1, 1});
}

TEST_CASE("representation limits surface as clean errors") {
    // a digit beyond 64 bits is refused, not wrapped
    ExactReal tiny = ExactReal::rational(1, BigInt("100000000000000000000"));
    CHECK_THROWS_AS(tn_step(tiny, 2), std::overflow_error);

    // x = 1 is the domain edge: digit n, orbit ends
    auto [d, next] = tn_step(ExactReal::rational(1, 1), 3);
    CHECK(d == 3);
    CHECK(next.is_zero());
    DigitSequence one = greedy_digits(ExactReal::rational(1, 1), 3, 5);
    CHECK(one.values == std::vector<long long>{3});
    CHECK(one.terminated);

    // floor of a wide surd still bisects exactly: floor(10^12 sqrt(2)) ends ...6237
    ExactReal wide = ExactReal::surd(0, BigInt("1000000000000"), 1, 2);
    CHECK(wide.floor_value() == BigInt("1414213562373"));
}

TEST_CASE("periodic surd orbit revisits its state exactly") {
    ExactReal x = ExactReal::surd(-1, 1, 1, 2);
    ExactReal state = x;
    std::vector<ExactReal> seen{state};
    for (int i = 0; i < 2; ++i) {
        auto [d, next] = tn_step(state, 2);
        state = next;
        seen.push_back(state);
    }
    CHECK(state == x);  // period 2, equality of canonical forms
    CHECK(seen[1] != x);
}

TEST_CASE("digit stream of the shifted orbit is the shifted digit stream") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        long long n = 1 + static_cast<long long>(rng() % 3);
        // random quadratic in (0,1): (a + sqrt(d))/c chosen to land inside
        long long d = 2 + static_cast<long long>(rng() % 40);
        ExactReal x = ExactReal::surd(-(isqrt_floor(d)), 1, 1, d);
        if (x.cmp_int(0) <= 0 || x.cmp_int(1) >= 0 || x.is_rational()) continue;
        auto whole = greedy_digits(x, n, 12);
        auto shifted = greedy_digits(tn_step(x, n).next, n, 11);
        REQUIRE(whole.values.size() == 12);
        CHECK(std::vector<long long>(whole.values.begin() + 1, whole.values.end()) ==
              shifted.values);
        for (long long dig : whole.values) CHECK(dig >= n);
    }
}

TEST_CASE("digit sources") {
    auto list = DigitSource::explicit_list({4, 2, 4, 2});
    CHECK(list.take(2, 3).values == std::vector<long long>{4, 2, 4});
    CHECK(list.take(2, 9).terminated);

    auto periodic = DigitSource::eventually_periodic({5}, {4, 2});
    CHECK(periodic.take(2, 6).values == std::vector<long long>{5, 4, 2, 4, 2, 4});

    auto arith = DigitSource::arithmetic(2, 1);
    CHECK(arith.take(2, 4).values == std::vector<long long>{2, 3, 4, 5});

    auto real = DigitSource::from_real(ExactReal::surd(-1, 1, 1, 2));
    CHECK(real.take(2, 4).values == std::vector<long long>{4, 2, 4, 2});

    // greedy validation: digits below n are rejected
    CHECK_THROWS_AS(DigitSource::explicit_list({3, 1}).take(2, 2, true), std::domain_error);
    CHECK_NOTHROW(DigitSource::explicit_list({3, 1}).take(2, 2));
    CHECK_THROWS_AS(DigitSource::explicit_list({3, 0}).take(2, 2), std::domain_error);
}

TEST_CASE("digit source parsing") {
    CHECK(parse_digit_source("list:4,2,4,2").take(2, 2).values ==
          std::vector<long long>{4, 2});
    CHECK(parse_digit_source("periodic:pre=;per=4,2").take(2, 3).values ==
          std::vector<long long>{4, 2, 4});
    CHECK(parse_digit_source("arith:start=2,step=1").take(2, 3).values ==
          std::vector<long long>{2, 3, 4});
    CHECK(parse_digit_source("surd:a=-1,b=1,c=1,D=2").take(2, 2).values ==
          std::vector<long long>{4, 2});
    CHECK(parse_digit_source("rational:3/4").take(2, 8).values ==
          std::vector<long long>{2, 3});
    CHECK_THROWS_AS(parse_digit_source("nonsense:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_source("list:"), std::invalid_argument);
}
