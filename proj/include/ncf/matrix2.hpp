#pragma once

#include "ncf/bigint.hpp"
#include "ncf/word.hpp"

namespace ncf {

/// 2x2 integer matrix. Entry (i, j) counts occurrences of letter i in the
/// image of letter j when used as a substitution incidence matrix.
struct Matrix2 {
    BigInt m00, m01, m10, m11;

    static Matrix2 identity() { return {1, 0, 0, 1}; }

    Matrix2 operator*(const Matrix2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }

    Matrix2 scaled(const BigInt& s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    Matrix2 pow(unsigned long long e) const {
        Matrix2 base = *this;
        Matrix2 acc = identity();
        while (e > 0) {
            if (e & 1ULL) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    BigInt det() const { return m00 * m11 - m01 * m10; }

    AbelianVector apply(const AbelianVector& v) const {
        return {m00 * v.zeros + m01 * v.ones, m10 * v.zeros + m11 * v.ones};
    }

    bool operator==(const Matrix2&) const = default;
};

}  // namespace ncf
