#pragma once

#include "ncf/digits.hpp"
#include "ncf/errors.hpp"
#include "ncf/matrix2.hpp"
#include "ncf/substitution.hpp"
#include "ncf/word.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ncf {

enum class Flavor { Primal, Dual };

inline const char* flavor_name(Flavor f) { return f == Flavor::Primal ? "primal" : "dual"; }

namespace detail {

/// Builds the prefix words W_0 = "1", W_1 = "0", W_{k+1} = W_k^{d_k} W_{k-1}^n
/// (dual flavor seeds W_2 = 0^{d_1} 1 instead) by block concatenation, up to
/// index `kmax`. When `cap` is nonzero every built word is truncated to `cap`
/// symbols, which is safe for anything that only ever reads prefixes.
inline std::vector<BinaryWord> prefix_words(const DigitSequence& digits, long long n,
                                            std::size_t kmax, Flavor flavor,
                                            std::uint64_t cap = 0) {
    if (kmax >= 2 && digits.size() < kmax - 1)
        throw std::invalid_argument("prefix words: need at least k-1 digits");
    std::vector<BinaryWord> words;
    words.reserve(kmax + 1);
    words.push_back(BinaryWord::run(1, 1));
    if (kmax >= 1) words.push_back(BinaryWord::run(0, 1));
    for (std::size_t k = 1; k < kmax; ++k) {
        long long d = digits[k - 1];
        BinaryWord next;
        if (flavor == Flavor::Dual && k == 1) {
            next.append_run(0, d);
            next.append_run(1, 1);
            if (cap) next = next.size() > cap ? next.prefix(cap) : next;
        } else if (cap) {
            next.append_repeated_capped(words[k], d, cap);
            next.append_repeated_capped(words[k - 1], n, cap);
        } else {
            next.append_repeated(words[k], d);
            next.append_repeated(words[k - 1], n);
        }
        words.push_back(std::move(next));
    }
    return words;
}

}  // namespace detail

/// The k-th prefix word of the limit sequence for the given digits.
inline BinaryWord sigma_word(const DigitSequence& digits, long long n, std::size_t k,
                             Flavor flavor) {
    if (n < 1) throw std::invalid_argument("sigma_word: numerator must be >= 1");
    return detail::prefix_words(digits, n, k, flavor).back();
}

inline BinaryWord sigma_word(const DigitSource& source, long long n, std::size_t k,
                             Flavor flavor) {
    DigitSequence digits = source.take(n, k >= 2 ? k - 1 : 0);
    if (k >= 2 && digits.size() < k - 1)
        throw InsufficientDigits("sigma_word: digit source exhausted");
    return sigma_word(digits, n, k, flavor);
}

/// The prefix of the limit sequence of length exactly `min_len`, extracted
/// from the first prefix word that is long enough.
inline BinaryWord limit_prefix(const DigitSource& source, long long n, std::uint64_t min_len,
                               Flavor flavor) {
    if (n < 1) throw std::invalid_argument("limit_prefix: numerator must be >= 1");
    if (min_len == 0) return BinaryWord();
    // W_1 = "0" is the first word that is a genuine prefix.
    BinaryWord prev = BinaryWord::run(1, 1);
    BinaryWord cur = BinaryWord::run(0, 1);
    std::size_t k = 1;
    std::vector<long long> digits;
    while (cur.size() < min_len) {
        DigitSequence pulled = source.take(n, k);
        if (pulled.size() < k)
            throw InsufficientDigits("limit_prefix: digit source exhausted before length " +
                                     std::to_string(min_len));
        long long d = pulled[k - 1];
        BinaryWord next;
        if (flavor == Flavor::Dual && k == 1) {
            next.append_run(0, d);
            next.append_run(1, 1);
        } else {
            next.append_repeated_capped(cur, d, min_len);
            next.append_repeated_capped(prev, n, min_len);
        }
        prev = std::move(cur);
        cur = std::move(next);
        ++k;
    }
    return cur.prefix(min_len);
}

inline BinaryWord limit_prefix(const DigitSequence& digits, long long n, std::uint64_t min_len,
                               Flavor flavor) {
    return limit_prefix(DigitSource::explicit_list(digits.values), n, min_len, flavor);
}

/// The pair (S_k, T_k) of distinguished words:
///   S_k = W_k^{d_k} W_{k-1}^{d_{k-1}} ... W_1^{d_1},   T_k = W_k^{n-1} S_k,
/// with the primal-only seed T_0 = 1^{n-1}. Their lengths are the band
/// thresholds of the complexity profile.
struct SpecialWords {
    BinaryWord s_word;
    BinaryWord t_word;
};

inline SpecialWords special_words(const DigitSequence& digits, long long n, std::size_t k,
                                  Flavor flavor) {
    if (n < 1) throw std::invalid_argument("special_words: numerator must be >= 1");
    if (k == 0) {
        if (flavor == Flavor::Dual)
            throw std::invalid_argument("special_words: dual pair starts at k = 1");
        return SpecialWords{BinaryWord(), BinaryWord::run(1, n - 1)};
    }
    if (digits.size() < k) throw std::invalid_argument("special_words: need k digits");
    auto words = detail::prefix_words(digits, n, k, flavor);
    BinaryWord s;
    for (std::size_t j = k; j >= 1; --j) s.append_repeated(words[j], digits[j - 1]);
    BinaryWord t;
    t.append_repeated(words[k], n - 1);
    t.append(s);
    return SpecialWords{std::move(s), std::move(t)};
}

inline SpecialWords special_words(const DigitSource& source, long long n, std::size_t k,
                                  Flavor flavor) {
    DigitSequence digits = source.take(n, k);
    if (digits.size() < k) throw InsufficientDigits("special_words: digit source exhausted");
    return special_words(digits, n, k, flavor);
}

/// Product of the first `upto` primal incidence matrices. Equals
/// [[q_upto, q_{upto-1}], [p_upto, p_{upto-1}]] and has determinant (-n)^upto.
inline Matrix2 matrix_product(const DigitSequence& digits, long long n, std::size_t upto) {
    if (digits.size() < upto) throw std::invalid_argument("matrix_product: need `upto` digits");
    Matrix2 acc = Matrix2::identity();
    for (std::size_t k = 0; k < upto; ++k)
        acc = acc * incidence(SubstitutionRule::primal(digits[k], n));
    return acc;
}

inline Matrix2 matrix_product(const DigitSource& source, long long n, std::size_t upto) {
    DigitSequence digits = source.take(n, upto);
    if (digits.size() < upto) throw InsufficientDigits("matrix_product: digit source exhausted");
    return matrix_product(digits, n, upto);
}

/// Limit-word prefix of the directive sequence read off a slow expansion:
/// symbol n selects tau_d(n), symbol 1 selects tau_b(n). Images of both
/// letters start with 0, so the images of 0 under the growing composition
/// form nested prefixes.
inline BinaryWord slow_limit_prefix(const std::vector<long long>& slow, long long n,
                                    std::uint64_t min_len) {
    if (n < 1) throw std::invalid_argument("slow_limit_prefix: numerator must be >= 1");
    if (min_len == 0) return BinaryWord();
    const SubstitutionRule tb = SubstitutionRule::tau_b(n);
    const SubstitutionRule td = SubstitutionRule::tau_d(n);
    // Images of the letters under the composition built so far, capped at
    // min_len symbols (placement below the cap never needs more).
    BinaryWord img0 = BinaryWord::run(0, 1);
    BinaryWord img1 = BinaryWord::run(1, 1);
    for (long long symbol : slow) {
        if (symbol != 1 && symbol != n)
            throw std::domain_error("slow_limit_prefix: symbol must be 1 or the numerator");
        // symbol 1 selects the decrement substitution; with n = 1 that one
        // cannot grow the image of 0, and the exhaustion error below fires
        const SubstitutionRule& rule = (symbol == 1) ? tb : td;
        BinaryWord new0, new1;
        for (const auto& r : rule.image(0).runs())
            new0.append_repeated_capped(r.letter == 0 ? img0 : img1, r.length, min_len);
        for (const auto& r : rule.image(1).runs())
            new1.append_repeated_capped(r.letter == 0 ? img0 : img1, r.length, min_len);
        img0 = std::move(new0);
        img1 = std::move(new1);
        if (img0.size() >= min_len) return img0.prefix(min_len);
    }
    throw InsufficientDigits("slow_limit_prefix: slow expansion exhausted before length " +
                             std::to_string(min_len));
}

}  // namespace ncf
