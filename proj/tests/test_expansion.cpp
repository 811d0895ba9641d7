#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncf/expansion.hpp"

#include <random>

using namespace ncf;

namespace {

DigitSequence random_digits(std::mt19937& rng, long long n, std::size_t count) {
    DigitSequence seq;
    for (std::size_t i = 0; i < count; ++i)
        seq.values.push_back(n + static_cast<long long>(rng() % 10));
    return seq;
}

}  // namespace

TEST_CASE("convergent recurrence on small examples") {
    DigitSequence digits{{2, 3}, false};
    auto cs = convergents(digits, 2, 2);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].p == 2);
    CHECK(cs[0].q == 2);
    CHECK(cs[1].p == 6);
    CHECK(cs[1].q == 8);

    // single digit: p_1 = n, q_1 = d
    for (long long n : {1, 2, 5}) {
        DigitSequence one{{7}, false};
        auto c1 = convergents(one, n, 1);
        CHECK(c1[0].p == n);
        CHECK(c1[0].q == 7);
    }

    // determinant: q2 p1 - p2 q1 = 8*2 - 6*2 = 4 = (-2)^2
    CHECK(cs[1].q * cs[0].p - cs[1].p * cs[0].q == 4);

    CHECK_THROWS_AS(convergents(DigitSequence{}, 2, 0), std::invalid_argument);
}

TEST_CASE("finite fraction evaluation") {
    CHECK(evaluate_cf(DigitSequence{{2, 3}, false}, 2) == BigRational(3, 4));
    CHECK(evaluate_cf(DigitSequence{{5}, false}, 3) == BigRational(3, 5));
    CHECK(evaluate_cf(DigitSequence{{2, 2}, false}, 1) == BigRational(2, 5));
}

TEST_CASE("determinant identity and evaluation agree with the recurrence") {
    std::mt19937 rng(2024);
    for (long long n : {1LL, 2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto digits = random_digits(rng, n, 1 + rng() % 12);
            auto cs = convergents(digits, n, digits.size());
            BigInt p_prev = 0, q_prev = 1;
            BigInt sign_pow = 1;
            for (std::size_t k = 0; k < cs.size(); ++k) {
                sign_pow *= -n;
                CHECK(cs[k].q * p_prev - cs[k].p * q_prev == sign_pow);
                DigitSequence head{{digits.values.begin(), digits.values.begin() + k + 1}, false};
                CHECK(evaluate_cf(head, n) == BigRational(cs[k].p, cs[k].q));
                p_prev = cs[k].p;
                q_prev = cs[k].q;
            }
        }
    }
}

TEST_CASE("cylinders: endpoints, width identity, nesting") {
    DigitSequence digits{{2, 3}, false};
    auto cyl = cylinder(digits, 2, 2);
    CHECK(cyl.lo == BigRational(3, 4));
    CHECK(cyl.hi == BigRational(4, 5));
    CHECK(cyl.width() == BigRational(1, 20));
    CHECK(cyl.width() == cylinder_width_identity(digits, 2, 2));

    // order-1 cylinder is (n/(d+1), n/d)
    for (long long n : {1LL, 2LL, 4LL}) {
        DigitSequence one{{n + 2}, false};
        auto c = cylinder(one, n, 1);
        CHECK(c.hi == BigRational(n, n + 2));
        CHECK(c.lo == BigRational(n, n + 3));
        CHECK(c.width() == BigRational(n, (n + 2) * (n + 3)));
    }

    std::mt19937 rng(99);
    for (long long n : {1LL, 2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto digits8 = random_digits(rng, n, 8);
            RationalInterval prev{BigRational(0), BigRational(1)};
            for (std::size_t k = 1; k <= 8; ++k) {
                auto c = cylinder(digits8, n, k);
                CHECK(c.width() == cylinder_width_identity(digits8, n, k));
                CHECK(prev.contains(c));
                prev = c;
            }
        }
    }
}

TEST_CASE("slow expansion of a digit run") {
    CHECK(slow_digits(DigitSequence{{4, 2}, false}, 2, 10) ==
          std::vector<long long>{1, 1, 2, 2});
    CHECK(slow_digits(DigitSequence{{3, 3, 3}, false}, 3, 10) ==
          std::vector<long long>{3, 3, 3});
    CHECK(slow_digits(DigitSequence{{3}, false}, 2, 10) == std::vector<long long>{1, 2});
    // truncation stops mid-block
    CHECK(slow_digits(DigitSequence{{5, 2}, false}, 2, 3) ==
          std::vector<long long>{1, 1, 1});
    CHECK_THROWS_AS(slow_digits(DigitSequence{{1}, false}, 2, 4), std::domain_error);
}
