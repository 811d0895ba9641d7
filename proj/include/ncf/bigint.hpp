#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ncf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt bigpow(BigInt base, unsigned long long exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1ULL) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = isqrt_floor(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

/// Natural logarithm of a positive big integer, without overflowing double.
inline double log_big(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_big: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 960) return std::log(n.convert_to<double>());
    const std::size_t shift = bits - 64;
    const double top = BigInt(n >> shift).convert_to<double>();
    return std::log(top) + static_cast<double>(shift) * 0.693147180559945309417232121458176568;
}

inline long long to_int64_checked(const BigInt& n, const char* what = "value") {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return n.convert_to<long long>();
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

inline std::string to_decimal(const BigRational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace ncf
