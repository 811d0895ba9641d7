#pragma once

#include "ncf/bigint.hpp"
#include "ncf/digits.hpp"

#include <stdexcept>
#include <vector>

namespace ncf {

/// One convergent p_k/q_k of the expansion with numerators n:
///   p_k = d_k p_{k-1} + n p_{k-2},   p_{-1} = 1, p_0 = 0
///   q_k = d_k q_{k-1} + n q_{k-2},   q_{-1} = 0, q_0 = 1
struct ConvergentPair {
    int index = 0;
    BigInt p;
    BigInt q;
};

inline std::vector<ConvergentPair> convergents(const DigitSequence& digits, long long n,
                                               std::size_t upto) {
    if (digits.values.empty()) throw std::invalid_argument("convergents: empty digit list");
    if (upto > digits.size()) throw std::invalid_argument("convergents: not enough digits");
    std::vector<ConvergentPair> out;
    out.reserve(upto);
    BigInt p_prev = 1, p_cur = 0;   // p_{-1}, p_0
    BigInt q_prev = 0, q_cur = 1;   // q_{-1}, q_0
    for (std::size_t k = 1; k <= upto; ++k) {
        long long d = digits[k - 1];
        if (d < 1) throw std::domain_error("convergents: digit below 1");
        BigInt p_next = d * p_cur + n * p_prev;
        BigInt q_next = d * q_cur + n * q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        out.push_back({static_cast<int>(k), p_cur, q_cur});
    }
    return out;
}

/// Bottom-up exact evaluation of the finite fraction n/(d_1 + n/(d_2 + ...)).
/// Serves as the independent check for the convergent recurrence.
inline BigRational evaluate_cf(const DigitSequence& digits, long long n) {
    if (digits.values.empty()) throw std::invalid_argument("evaluate_cf: empty digit list");
    BigRational acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        long long d = digits[i];
        if (d < 1) throw std::domain_error("evaluate_cf: digit below 1");
        acc = BigRational(n) / (BigRational(d) + acc);
    }
    return acc;
}

struct RationalInterval {
    BigRational lo;
    BigRational hi;

    BigRational width() const { return hi - lo; }
    bool contains(const RationalInterval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

/// The order-k cylinder: the interval of reals whose expansion starts with
/// the given k digits. Endpoints are p_k/q_k and (p_k+p_{k-1})/(q_k+q_{k-1});
/// the exact width is n^k / (q_k (q_k + q_{k-1})).
inline RationalInterval cylinder(const DigitSequence& digits, long long n, std::size_t k) {
    if (k == 0) throw std::invalid_argument("cylinder: order must be >= 1");
    auto cs = convergents(digits, n, k);
    BigInt p_prev = k >= 2 ? cs[k - 2].p : BigInt(0);
    BigInt q_prev = k >= 2 ? cs[k - 2].q : BigInt(1);
    BigRational a(cs[k - 1].p, cs[k - 1].q);
    BigRational b(cs[k - 1].p + p_prev, cs[k - 1].q + q_prev);
    return a < b ? RationalInterval{a, b} : RationalInterval{b, a};
}

inline BigRational cylinder_width_identity(const DigitSequence& digits, long long n, std::size_t k) {
    auto cs = convergents(digits, n, k);
    BigInt q_prev = k >= 2 ? cs[k - 2].q : BigInt(1);
    return BigRational(bigpow(BigInt(n), k), cs[k - 1].q * (cs[k - 1].q + q_prev));
}

/// The slow (additive) expansion of a greedy digit run over the two-symbol
/// alphabet {1, n}: each digit d contributes d-n copies of 1 then a single n.
inline std::vector<long long> slow_digits(const DigitSequence& digits, long long n,
                                          std::size_t count) {
    std::vector<long long> out;
    out.reserve(count);
    for (long long d : digits.values) {
        if (d < n) throw std::domain_error("slow_digits: digit below the numerator");
        for (long long i = 0; i < d - n && out.size() < count; ++i) out.push_back(1);
        if (out.size() >= count) break;
        out.push_back(n);
        if (out.size() >= count) break;
    }
    return out;
}

}  // namespace ncf
