#pragma once

#include "ncf/bigint.hpp"
#include "ncf/errors.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace ncf {

/// An exactly represented real number: either a rational num/den or a
/// quadratic surd (a + b*sqrt(d))/c.
///
/// Canonical form rules, enforced on construction and after every operation:
///   rational: gcd(num, den) = 1, den > 0
///   surd:     d square-free, b != 0, c > 0, gcd(a, b, c) = 1
/// A surd whose d collapses to a perfect square (or whose b becomes 0)
/// is normalized into the rational variant, so equality of values is
/// equality of representations.
class ExactReal {
public:
    struct Rational {
        BigInt num;
        BigInt den;
        bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    };
    struct Surd {
        BigInt a;
        BigInt b;
        BigInt c;
        BigInt d;
        bool operator==(const Surd& o) const {
            return a == o.a && b == o.b && c == o.c && d == o.d;
        }
    };

    ExactReal() : v_(Rational{0, 1}) {}

    static ExactReal integer(BigInt n) { return ExactReal(Rational{std::move(n), 1}); }

    static ExactReal rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        normalize_rational(num, den);
        return ExactReal(Rational{std::move(num), std::move(den)});
    }

    static ExactReal from_rational(const BigRational& r) {
        return rational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
    }

    /// (a + b*sqrt(d))/c with d >= 0. Square factors of d are folded into b.
    static ExactReal surd(BigInt a, BigInt b, BigInt c, BigInt d) {
        if (c == 0) throw RepresentationError("surd: zero denominator");
        if (d < 0) throw RepresentationError("surd: negative radicand");
        BigInt root;
        reduce_radicand(b, d);
        if (b == 0 || d == 0) return rational(a, c);
        if (is_perfect_square(d, &root)) return rational(a + b * root, c);
        if (c < 0) { a = -a; b = -b; c = -c; }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), c);
        if (g > 1) { a /= g; b /= g; c /= g; }
        return ExactReal(Surd{std::move(a), std::move(b), std::move(c), std::move(d)});
    }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_surd() const { return !is_rational(); }

    const Rational& as_rational() const {
        if (!is_rational()) throw RepresentationError("value is not rational");
        return std::get<Rational>(v_);
    }

    const Surd& as_surd() const {
        if (!is_surd()) throw RepresentationError("value is not a surd");
        return std::get<Surd>(v_);
    }

    BigRational to_rational() const {
        const Rational& r = as_rational();
        return BigRational(r.num, r.den);
    }

    bool is_zero() const { return is_rational() && as_rational().num == 0; }

    /// Sign of (value - k), decided by exact integer arithmetic.
    int cmp_int(const BigInt& k) const {
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            return sgn(r.num - k * r.den);
        }
        const Surd& s = std::get<Surd>(v_);
        // sign of (a - k c) + b sqrt(d)
        return sign_linear_surd(s.a - k * s.c, s.b, s.d);
    }

    int sign() const { return cmp_int(0); }

    /// Largest integer <= value, via bracketing and bisection on exact
    /// comparisons only.
    BigInt floor_value() const {
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            BigInt q = r.num / r.den;
            if (r.num % r.den != 0 && (r.num < 0)) q -= 1;
            return q;
        }
        BigInt lo = 0, hi = 0;
        if (cmp_int(0) >= 0) {
            hi = 1;
            while (cmp_int(hi) >= 0) { lo = hi; hi *= 2; }
            // lo <= x < hi
        } else {
            lo = -1;
            while (cmp_int(lo) < 0) { hi = lo; lo *= 2; }
        }
        while (hi - lo > 1) {
            BigInt mid = lo + (hi - lo) / 2;
            if (cmp_int(mid) >= 0) lo = mid; else hi = mid;
        }
        return lo;
    }

    /// n / value, exact; closes within the same quadratic field.
    ExactReal reciprocal_times(const BigInt& n) const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            return rational(n * r.den, r.num);
        }
        const Surd& s = std::get<Surd>(v_);
        // n c (a - b sqrt(d)) / (a^2 - b^2 d)
        BigInt norm = s.a * s.a - s.b * s.b * s.d;
        if (norm == 0) throw RepresentationError("degenerate surd: zero field norm");
        return surd_canonical_only_gcd(n * s.c * s.a, -n * s.c * s.b, norm, s.d);
    }

    ExactReal minus_int(const BigInt& k) const {
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            return rational(r.num - k * r.den, r.den);
        }
        const Surd& s = std::get<Surd>(v_);
        return surd_canonical_only_gcd(s.a - k * s.c, s.b, s.c, s.d);
    }

    double to_double() const {
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            return BigRational(r.num, r.den).convert_to<double>();
        }
        const Surd& s = std::get<Surd>(v_);
        double root = std::sqrt(s.d.convert_to<double>());
        return (s.a.convert_to<double>() + s.b.convert_to<double>() * root) / s.c.convert_to<double>();
    }

    std::string str() const {
        std::ostringstream os;
        if (is_rational()) {
            const Rational& r = std::get<Rational>(v_);
            os << r.num << "/" << r.den;
        } else {
            const Surd& s = std::get<Surd>(v_);
            os << "(" << s.a << (s.b < 0 ? "" : "+") << s.b << "*sqrt(" << s.d << "))/" << s.c;
        }
        return os.str();
    }

    bool operator==(const ExactReal& o) const { return v_ == o.v_; }
    bool operator!=(const ExactReal& o) const { return !(*this == o); }

private:
    explicit ExactReal(Rational r) : v_(std::move(r)) {}
    explicit ExactReal(Surd s) : v_(std::move(s)) {}

    static int sgn(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

    /// Sign of r + b*sqrt(d) for square-free d > 0, by squaring with sign
    /// analysis; never touches floating point.
    static int sign_linear_surd(const BigInt& r, const BigInt& b, const BigInt& d) {
        if (b == 0) return sgn(r);
        if (b > 0) {
            if (r >= 0) return 1;
            // r < 0: compare b^2 d with r^2
            return sgn(b * b * d - r * r);
        }
        if (r <= 0) return -1;
        return sgn(r * r - b * b * d);
    }

    static void normalize_rational(BigInt& num, BigInt& den) {
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(abs(num), den);
        if (g > 1) { num /= g; den /= g; }
    }

    /// Pulls square factors out of d into b. Trial division covers factors up
    /// to 10^6; a remaining perfect square is folded wholesale.
    static void reduce_radicand(BigInt& b, BigInt& d) {
        if (d <= 1 || b == 0) return;
        BigInt f = 2;
        const BigInt bound = 1000000;
        while (f <= bound && f * f <= d) {
            BigInt sq = f * f;
            while (d % sq == 0) { d /= sq; b *= f; }
            ++f;
        }
        BigInt root;
        if (is_perfect_square(d, &root)) { b *= root; d = 1; }
    }

    /// For results of field operations: d is already square-free, only the
    /// gcd/sign cleanup (and a possible collapse to rational) is needed.
    static ExactReal surd_canonical_only_gcd(BigInt a, BigInt b, BigInt c, BigInt d) {
        if (b == 0) return rational(std::move(a), std::move(c));
        if (c < 0) { a = -a; b = -b; c = -c; }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), c);
        if (g > 1) { a /= g; b /= g; c /= g; }
        return ExactReal(Surd{std::move(a), std::move(b), std::move(c), std::move(d)});
    }

    std::variant<Rational, Surd> v_;
};

}  // namespace ncf
