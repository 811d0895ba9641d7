#pragma once

#include "ncf/bigint.hpp"
#include "ncf/digits.hpp"
#include "ncf/errors.hpp"
#include "ncf/expansion.hpp"
#include "ncf/parallel.hpp"
#include "ncf/word.hpp"
#include "ncf/word_builder.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncf {

// --- balance -----------------------------------------------------------------

struct BalanceRow {
    std::size_t length;
    std::uint64_t min1;
    std::uint64_t max1;
    std::uint64_t spread;
};

struct BalanceProfile {
    std::vector<BalanceRow> rows;
    std::uint64_t constant = 0;  // max spread over all analyzed lengths
};

/// Extreme 1-counts over all factors of each length up to lmax, by one
/// sliding pass per length. Lengths are independent and run data-parallel.
inline BalanceProfile balance_profile(const BinaryWord& w, std::size_t lmax) {
    if (lmax == 0 || lmax > w.size())
        throw std::invalid_argument("balance_profile: window length exceeds word");
    const auto& s = w.bytes();
    std::vector<std::uint32_t> prefix(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        prefix[i + 1] = prefix[i] + s[i];
    BalanceProfile out;
    out.rows.resize(lmax);
    parallel_for(lmax, [&](std::size_t idx) {
        const std::size_t len = idx + 1;
        std::uint32_t lo = prefix[len], hi = prefix[len];
        for (std::size_t i = 1; i + len <= s.size(); ++i) {
            std::uint32_t ones = prefix[i + len] - prefix[i];
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        out.rows[idx] = BalanceRow{len, lo, hi, hi - lo};
    });
    for (const auto& r : out.rows) out.constant = std::max(out.constant, r.spread);
    return out;
}

struct WitnessPair {
    std::size_t length;
    std::size_t min_pos;
    std::size_t max_pos;
    std::uint64_t min_ones;
    std::uint64_t max_ones;
};

/// The argmin/argmax windows of a fixed length, when their 1-count gap
/// reaches `target`. Target 0 pairs the first window with itself.
inline std::optional<WitnessPair> find_imbalance_witness(const BinaryWord& w, std::size_t len,
                                                         std::uint64_t target) {
    if (len == 0 || len > w.size())
        throw std::invalid_argument("find_imbalance_witness: bad window length");
    const auto& s = w.bytes();
    std::uint64_t ones = 0;
    for (std::size_t i = 0; i < len; ++i) ones += s[i];
    std::uint64_t lo = ones, hi = ones;
    std::size_t lo_pos = 0, hi_pos = 0;
    for (std::size_t i = 1; i + len <= s.size(); ++i) {
        ones += s[i + len - 1];
        ones -= s[i - 1];
        if (ones < lo) { lo = ones; lo_pos = i; }
        if (ones > hi) { hi = ones; hi_pos = i; }
    }
    if (hi - lo < target) return std::nullopt;
    return WitnessPair{len, lo_pos, hi_pos, lo, hi};
}

// --- factor classes ----------------------------------------------------------

namespace detail {

/// Window classes of one length: ids[i] identifies the factor starting at i.
/// Classes are dense, numbered in order of first occurrence, and refined one
/// symbol at a time, so distinct factors never collide.
struct FactorClasses {
    std::vector<std::uint32_t> ids;
    std::uint32_t count = 0;
    std::size_t length = 0;

    static FactorClasses initial(std::span<const std::uint8_t> s) {
        FactorClasses fc;
        fc.length = 1;
        fc.ids.resize(s.size());
        std::uint32_t map[2] = {UINT32_MAX, UINT32_MAX};
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::uint8_t c = s[i];
            if (map[c] == UINT32_MAX) map[c] = fc.count++;
            fc.ids[i] = map[c];
        }
        return fc;
    }

    /// Classes of length+1 windows: the pair (class, next symbol) keyed
    /// through a dense table.
    void refine(std::span<const std::uint8_t> s) {
        const std::size_t windows = s.size() - length;  // windows of length+1
        std::vector<std::uint32_t> table(2 * count, UINT32_MAX);
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < windows; ++i) {
            std::uint32_t key = ids[i] * 2 + s[i + length];
            if (table[key] == UINT32_MAX) table[key] = next++;
            ids[i] = table[key];
        }
        ids.resize(windows);
        count = next;
        ++length;
    }
};

inline std::vector<std::uint64_t> factor_counts(std::span<const std::uint8_t> s,
                                                std::size_t n_max) {
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    counts[0] = 1;
    if (n_max == 0) return counts;
    FactorClasses fc = FactorClasses::initial(s);
    counts[1] = fc.count;
    for (std::size_t n = 2; n <= n_max; ++n) {
        fc.refine(s);
        counts[n] = fc.count;
    }
    return counts;
}

}  // namespace detail

// --- complexity --------------------------------------------------------------

struct ComplexityBand {
    BigInt s;  // band boundary |S_k|
    BigInt t;  // band boundary |T_k|
};

struct ComplexityProfile {
    std::vector<std::uint64_t> counts;     // p(0) .. p(n_max)
    std::vector<std::uint8_t> ls_counts;   // |LS_n| = p(n+1) - p(n) for n < n_max
    std::vector<ComplexityBand> bands;     // threshold pairs (closed-form profiles only)
    BigInt t0 = 0;                         // leading 2-band boundary (primal: n-1)

    /// Band tag for n >= 1: +k when n lies in the k-th 1-band, -k in the
    /// k-th 2-band, 0 in the leading seed band.
    long long band_of(std::uint64_t n) const {
        if (bands.empty()) return 0;
        if (BigInt(n) <= t0) return 0;
        BigInt prev = t0;
        for (std::size_t k = 0; k < bands.size(); ++k) {
            if (prev < n && BigInt(n) <= bands[k].s) return static_cast<long long>(k) + 1;
            if (bands[k].s < n && BigInt(n) <= bands[k].t) return -(static_cast<long long>(k) + 1);
            prev = bands[k].t;
        }
        return 0;
    }
};

/// Exact distinct-factor counts of each length up to n_max, with a
/// stabilization check: the first half of the word must already contain every
/// counted factor, otherwise the prefix is declared too short.
inline ComplexityProfile factor_complexity(const BinaryWord& w, std::size_t n_max) {
    if (w.size() < 2 * (n_max + 1))
        throw std::invalid_argument("factor_complexity: word shorter than twice n_max");
    const auto& s = w.bytes();
    auto full = detail::factor_counts(std::span(s), n_max);
    auto half = detail::factor_counts(std::span(s).first(s.size() / 2), n_max);
    if (full != half)
        throw PrefixTooShort("factor_complexity: counts did not stabilize; supply a longer prefix");
    ComplexityProfile out;
    out.counts = std::move(full);
    out.ls_counts.reserve(n_max);
    for (std::size_t n = 0; n < n_max; ++n)
        out.ls_counts.push_back(static_cast<std::uint8_t>(out.counts[n + 1] - out.counts[n]));
    return out;
}

namespace detail {

struct ThresholdTable {
    std::vector<BigInt> word_len;   // |W_j|, j = 0..k
    std::vector<ComplexityBand> bands;  // (s_k, t_k) for k = 1..
    BigInt t0;
    DigitSequence digits;
};

/// Band thresholds from the length recurrences alone, extended until the
/// bands cover n_max.
inline ThresholdTable thresholds(const DigitSource& source, long long n, std::uint64_t n_max,
                                 Flavor flavor) {
    ThresholdTable tab;
    tab.t0 = flavor == Flavor::Primal ? BigInt(n - 1) : BigInt(0);
    tab.word_len = {1, 1};
    BigInt s_acc = 0;
    std::size_t k = 1;
    while (true) {
        DigitSequence pulled = source.take(n, k);
        if (pulled.size() < k)
            throw InsufficientDigits("complexity thresholds: digit source exhausted");
        tab.digits = pulled;
        long long d = pulled[k - 1];
        s_acc += d * tab.word_len[k];
        BigInt t = s_acc + (n - 1) * tab.word_len[k];
        tab.bands.push_back({s_acc, t});
        if (t >= n_max) break;
        BigInt next_len = (flavor == Flavor::Dual && k == 1)
                              ? BigInt(d + 1)
                              : d * tab.word_len[k] + n * tab.word_len[k - 1];
        tab.word_len.push_back(next_len);
        ++k;
    }
    return tab;
}

}  // namespace detail

/// Complexity profile from the band structure: |LS_n| is 1 on (t_{k-1}, s_k]
/// and 2 on (s_k, t_k], prefix-summed from p(0) = 1, p(1) = 2. The primal
/// flavor has the extra leading 2-band (0, n-1].
inline ComplexityProfile complexity_closed_form(const DigitSource& source, long long n,
                                                std::size_t n_max, Flavor flavor) {
    if (n < 1) throw std::invalid_argument("complexity_closed_form: numerator must be >= 1");
    if (n_max < 1) throw std::invalid_argument("complexity_closed_form: n_max must be >= 1");
    auto tab = detail::thresholds(source, n, n_max, flavor);
    ComplexityProfile out;
    out.t0 = tab.t0;
    out.bands = tab.bands;
    out.ls_counts.assign(n_max, 1);
    // fill the 2-bands; everything else is 1
    auto mark2 = [&](const BigInt& lo, const BigInt& hi) {  // (lo, hi]
        if (lo >= n_max) return;
        std::uint64_t from = lo.convert_to<std::uint64_t>() + 1;
        std::uint64_t to = hi >= n_max ? n_max - 1 : hi.convert_to<std::uint64_t>();
        for (std::uint64_t m = from; m <= to; ++m) out.ls_counts[m] = 2;
    };
    if (flavor == Flavor::Primal && n >= 2) mark2(0, out.t0);
    for (const auto& band : tab.bands) mark2(band.s, band.t);
    out.ls_counts[0] = 1;
    out.counts.resize(n_max + 1);
    out.counts[0] = 1;
    out.counts[1] = 2;
    for (std::size_t m = 1; m < n_max; ++m)
        out.counts[m + 1] = out.counts[m] + out.ls_counts[m];
    return out;
}

/// Re-evaluates the displayed closed-form complexity expressions verbatim,
/// for comparison against the band-summed profile. The two disagree on the
/// 2-bands (the displayed forms overcount there); callers report the deltas
/// rather than asserting equality.
inline std::vector<BigInt> displayed_complexity(const DigitSource& source, long long n,
                                                std::size_t n_max, Flavor flavor) {
    auto tab = detail::thresholds(source, n, n_max, flavor);
    const std::size_t kmax = tab.bands.size();
    auto convs = convergents(tab.digits, n, std::min(tab.digits.size(), kmax));
    // P[j+1] = p_j, Q[j+1] = q_j with seeds p_{-1} = 1, q_{-1} = 0
    std::vector<BigInt> P = {1, 0}, Q = {0, 1};
    for (const auto& c : convs) { P.push_back(c.p); Q.push_back(c.q); }
    std::vector<BigInt> out(n_max + 1);
    out[0] = 1;
    for (std::uint64_t m = 1; m <= n_max; ++m) {
        BigInt mm(m);
        if (flavor == Flavor::Primal && n >= 2 && mm <= BigInt(n - 1)) {
            out[m] = 2 * mm;
            continue;
        }
        BigInt prev_t = tab.t0;
        for (std::size_t k = 0; k <= kmax; ++k) {
            // 1-band (t_{k-1}, s_k] carries index k; 2-band (s_k, t_k] likewise
            auto band_sum = [&](std::size_t kk) {
                BigInt acc = 0;
                if (flavor == Flavor::Primal) {
                    for (std::size_t j = 0; j + 1 <= kk; ++j)  // j = -1 .. kk-1 shifted by one
                        acc += (P[j] + Q[j]) * (n - 1);
                } else {
                    for (std::size_t j = 1; j + 1 <= kk; ++j) {  // j = 0 .. kk-2 shifted by one
                        BigInt pj = P[j];
                        acc += (pj / n + Q[j]) * (n - 1);
                    }
                }
                return acc;
            };
            if (k < kmax && prev_t < mm && mm <= tab.bands[k].s) {
                out[m] = mm + 1 + band_sum(k + 1);
                break;
            }
            if (k < kmax && tab.bands[k].s < mm && mm <= tab.bands[k].t) {
                // the printed primal 2-band sum runs one index further than
                // the dual one
                std::size_t upper = flavor == Flavor::Primal ? k + 2 : k + 1;
                out[m] = 2 * mm + 1 + band_sum(upper) - tab.bands[k].s;
                break;
            }
            if (k < kmax) prev_t = tab.bands[k].t;
        }
    }
    return out;
}

// --- special factors ---------------------------------------------------------

struct SpecialFactor {
    std::string factor;
    bool is_prefix = false;
    bool is_maximal = false;
    bool is_total_bispecial = false;
};

struct SpecialFactorReport {
    std::size_t n = 0;
    std::vector<SpecialFactor> factors;
};

namespace detail {

struct LeftSpecialLevel {
    // one entry per class: representative position, preceding-letter mask,
    // whether the class occurs at position 0
    std::vector<std::size_t> rep;
    std::vector<std::uint8_t> left_mask;
    std::vector<bool> at_origin;
    FactorClasses classes;

    static LeftSpecialLevel at(std::span<const std::uint8_t> s, std::size_t n) {
        LeftSpecialLevel lv;
        lv.classes = FactorClasses::initial(s);
        for (std::size_t m = 2; m <= n; ++m) lv.classes.refine(s);
        lv.rep.assign(lv.classes.count, SIZE_MAX);
        lv.left_mask.assign(lv.classes.count, 0);
        lv.at_origin.assign(lv.classes.count, false);
        for (std::size_t i = 0; i < lv.classes.ids.size(); ++i) {
            std::uint32_t c = lv.classes.ids[i];
            if (lv.rep[c] == SIZE_MAX) lv.rep[c] = i;
            if (i == 0) lv.at_origin[c] = true;
            else lv.left_mask[c] |= static_cast<std::uint8_t>(1u << s[i - 1]);
        }
        return lv;
    }

    bool left_special(std::uint32_t c) const { return left_mask[c] == 3; }
};

inline SpecialFactorReport left_special_on(std::span<const std::uint8_t> s, std::size_t n) {
    auto lv = LeftSpecialLevel::at(s, n);
    auto next = LeftSpecialLevel::at(s, n + 1);
    // how many left-special length-(n+1) factors extend each length-n class
    std::vector<std::uint32_t> ls_extensions(lv.classes.count, 0);
    for (std::uint32_t c = 0; c < next.classes.count; ++c) {
        if (!next.left_special(c)) continue;
        std::size_t pos = next.rep[c];
        ls_extensions[lv.classes.ids[pos]] += 1;
    }
    SpecialFactorReport report;
    report.n = n;
    for (std::uint32_t c = 0; c < lv.classes.count; ++c) {
        if (!lv.left_special(c)) continue;
        SpecialFactor f;
        std::size_t pos = lv.rep[c];
        f.factor.reserve(n);
        for (std::size_t j = 0; j < n; ++j) f.factor.push_back(static_cast<char>('0' + s[pos + j]));
        f.is_prefix = lv.at_origin[c];
        f.is_maximal = ls_extensions[c] == 0;
        f.is_total_bispecial = ls_extensions[c] >= 2;
        report.factors.push_back(std::move(f));
    }
    std::sort(report.factors.begin(), report.factors.end(),
              [](const SpecialFactor& a, const SpecialFactor& b) { return a.factor < b.factor; });
    return report;
}

inline bool same_report(const SpecialFactorReport& a, const SpecialFactorReport& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const auto& x = a.factors[i];
        const auto& y = b.factors[i];
        if (x.factor != y.factor || x.is_prefix != y.is_prefix || x.is_maximal != y.is_maximal ||
            x.is_total_bispecial != y.is_total_bispecial)
            return false;
    }
    return true;
}

}  // namespace detail

/// All length-n factors u with both 0u and 1u present, flagged with
/// prefix-of-word, maximality (no left-special one-letter extension) and
/// total-bispecial (two left-special extensions) status. Stabilized against
/// the half prefix like factor_complexity.
inline SpecialFactorReport left_special(const BinaryWord& w, std::size_t n) {
    if (n == 0 || w.size() < 2 * (n + 2))
        throw std::invalid_argument("left_special: word too short for requested length");
    const auto& s = w.bytes();
    auto full = detail::left_special_on(std::span(s), n);
    auto half = detail::left_special_on(std::span(s).first(s.size() / 2), n);
    if (!detail::same_report(full, half))
        throw PrefixTooShort("left_special: report did not stabilize; supply a longer prefix");
    return full;
}

// --- maximal blocks ----------------------------------------------------------

/// Lengths of single-letter runs flanked by the other letter on both sides.
/// Runs touching a word boundary are excluded as possibly truncated.
struct MaximalBlockCensus {
    std::set<std::uint64_t> zero_runs;
    std::set<std::uint64_t> one_runs;
};

inline MaximalBlockCensus maximal_blocks(const BinaryWord& w) {
    if (w.size() < 2) throw std::invalid_argument("maximal_blocks: word too short");
    MaximalBlockCensus out;
    const auto& runs = w.runs();
    for (std::size_t i = 1; i + 1 < runs.size(); ++i)
        (runs[i].letter == 0 ? out.zero_runs : out.one_runs).insert(runs[i].length);
    return out;
}

// --- frequencies -------------------------------------------------------------

struct FrequencyReport {
    std::string factor;
    std::size_t windows = 0;
    std::vector<double> window_freq;
    double mean = 0.0;
    double max_deviation = 0.0;
};

/// Occurrence frequency of `u` in each of `windows` disjoint blocks of the
/// word, with the spread across blocks. Occurrences straddling block
/// boundaries are not counted.
inline FrequencyReport frequency_report(const BinaryWord& w, const BinaryWord& u,
                                        std::size_t windows) {
    if (windows == 0) throw std::invalid_argument("frequency_report: need at least one window");
    if (u.empty()) throw std::invalid_argument("frequency_report: empty factor");
    if (w.size() < windows * u.size() * 10)
        throw std::invalid_argument("frequency_report: word too short for window count");
    const auto& s = w.bytes();
    const auto& pat = u.bytes();
    const std::size_t block = s.size() / windows;
    FrequencyReport rep;
    rep.factor = u.to_string();
    rep.windows = windows;
    rep.window_freq.resize(windows);
    parallel_for(windows, [&](std::size_t b) {
        const std::size_t begin = b * block;
        std::size_t hits = 0;
        for (std::size_t i = begin; i + pat.size() <= begin + block; ++i) {
            if (std::equal(pat.begin(), pat.end(), s.begin() + static_cast<std::ptrdiff_t>(i)))
                ++hits;
        }
        rep.window_freq[b] = static_cast<double>(hits) / static_cast<double>(block);
    });
    double sum = 0.0;
    for (double f : rep.window_freq) sum += f;
    rep.mean = sum / static_cast<double>(windows);
    for (double f : rep.window_freq)
        rep.max_deviation = std::max(rep.max_deviation, std::abs(f - rep.mean));
    return rep;
}

}  // namespace ncf
