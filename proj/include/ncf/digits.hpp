#pragma once

#include "ncf/bigint.hpp"
#include "ncf/errors.hpp"
#include "ncf/exact_real.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncf {

/// A finite run of expansion digits. `terminated` is set when the producing
/// source ended before the requested count (for greedy expansions of
/// rationals this is exactly the finite-expansion case).
struct DigitSequence {
    std::vector<long long> values;
    bool terminated = false;

    std::size_t size() const { return values.size(); }
    long long operator[](std::size_t i) const { return values[i]; }
};

struct TnStep {
    long long digit;
    ExactReal next;
};

/// One application of the digit map: x in (0,1] maps to (floor(n/x), n/x - floor(n/x)).
inline TnStep tn_step(const ExactReal& x, long long n) {
    if (n < 1) throw std::invalid_argument("tn_step: numerator must be >= 1");
    if (x.cmp_int(0) <= 0 || x.cmp_int(1) > 0)
        throw std::domain_error("tn_step: argument must lie in (0, 1]");
    ExactReal inv = x.reciprocal_times(n);
    BigInt digit = inv.floor_value();
    return TnStep{to_int64_checked(digit, "digit"), inv.minus_int(digit)};
}

/// Greedy expansion of x in [0,1]: iterates tn_step, stopping early exactly
/// when the orbit reaches 0.
inline DigitSequence greedy_digits(const ExactReal& x, long long n, std::size_t count) {
    if (x.cmp_int(0) < 0 || x.cmp_int(1) > 0)
        throw std::domain_error("greedy_digits: argument must lie in [0, 1]");
    DigitSequence out;
    ExactReal state = x;
    for (std::size_t i = 0; i < count; ++i) {
        if (state.is_zero()) { out.terminated = true; break; }
        TnStep step = tn_step(state, n);
        out.values.push_back(step.digit);
        state = step.next;
    }
    if (out.values.size() < count && !out.terminated && state.is_zero())
        out.terminated = true;
    return out;
}

/// A digit supply: an explicit list, an eventually periodic pattern, an
/// arithmetic progression d_k = start + (k-1)*step, or the greedy digits of
/// an exact real.
class DigitSource {
public:
    static DigitSource explicit_list(std::vector<long long> values) {
        return DigitSource(Explicit{std::move(values)});
    }
    static DigitSource eventually_periodic(std::vector<long long> pre, std::vector<long long> per) {
        if (per.empty()) throw std::invalid_argument("eventually_periodic: empty period");
        return DigitSource(Periodic{std::move(pre), std::move(per)});
    }
    static DigitSource arithmetic(long long start, long long step) {
        return DigitSource(Arithmetic{start, step});
    }
    static DigitSource from_real(ExactReal x) { return DigitSource(FromReal{std::move(x)}); }

    /// Up to `count` digits for numerator n. Every digit must be >= 1;
    /// with `require_greedy` the bound tightens to >= n.
    DigitSequence take(long long n, std::size_t count, bool require_greedy = false) const {
        DigitSequence out;
        if (const auto* e = std::get_if<Explicit>(&v_)) {
            std::size_t m = std::min(count, e->values.size());
            out.values.assign(e->values.begin(), e->values.begin() + m);
            out.terminated = e->values.size() < count;
        } else if (const auto* p = std::get_if<Periodic>(&v_)) {
            out.values.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                if (i < p->pre.size()) out.values.push_back(p->pre[i]);
                else out.values.push_back(p->per[(i - p->pre.size()) % p->per.size()]);
            }
        } else if (const auto* a = std::get_if<Arithmetic>(&v_)) {
            out.values.reserve(count);
            for (std::size_t i = 0; i < count; ++i)
                out.values.push_back(a->start + static_cast<long long>(i) * a->step);
        } else {
            out = greedy_digits(std::get<FromReal>(v_).x, n, count);
        }
        validate(out, n, require_greedy);
        return out;
    }

    bool is_from_real() const { return std::holds_alternative<FromReal>(v_); }

private:
    struct Explicit { std::vector<long long> values; };
    struct Periodic { std::vector<long long> pre, per; };
    struct Arithmetic { long long start, step; };
    struct FromReal { ExactReal x; };

    template <class T>
    explicit DigitSource(T t) : v_(std::move(t)) {}

    static void validate(const DigitSequence& seq, long long n, bool require_greedy) {
        const long long bound = require_greedy ? n : 1;
        for (long long d : seq.values)
            if (d < bound)
                throw std::domain_error("digit " + std::to_string(d) + " below required minimum " +
                                        std::to_string(bound));
    }

    std::variant<Explicit, Periodic, Arithmetic, FromReal> v_;
};

// --- the little source-description language used by the CLI -----------------
//
//   list:4,2,4,2
//   periodic:pre=;per=4,2
//   arith:start=2,step=1
//   surd:a=-1,b=1,c=1,D=2
//   rational:3/4

namespace detail {

inline std::vector<long long> parse_int_list(std::string_view s) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        std::string token(s.substr(pos, comma - pos));
        if (!token.empty()) out.push_back(std::stoll(token));
        pos = comma + 1;
    }
    return out;
}

inline std::string_view field_after(std::string_view s, std::string_view key) {
    std::size_t at = s.find(key);
    if (at == std::string_view::npos)
        throw std::invalid_argument("digit source: missing field '" + std::string(key) + "'");
    return s.substr(at + key.size());
}

inline std::string_view up_to(std::string_view s, char stop) {
    std::size_t at = s.find(stop);
    return at == std::string_view::npos ? s : s.substr(0, at);
}

}  // namespace detail

inline DigitSource parse_digit_source(std::string_view spec) {
    using namespace detail;
    std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("digit source: expected '<kind>:<args>' in '" + std::string(spec) + "'");
    std::string_view kind = spec.substr(0, colon);
    std::string_view args = spec.substr(colon + 1);
    if (kind == "list") {
        auto values = parse_int_list(args);
        if (values.empty()) throw std::invalid_argument("digit source: empty list");
        return DigitSource::explicit_list(std::move(values));
    }
    if (kind == "periodic") {
        auto pre = parse_int_list(up_to(field_after(args, "pre="), ';'));
        auto per = parse_int_list(up_to(field_after(args, "per="), ';'));
        return DigitSource::eventually_periodic(std::move(pre), std::move(per));
    }
    if (kind == "arith") {
        long long start = std::stoll(std::string(up_to(field_after(args, "start="), ',')));
        long long step = std::stoll(std::string(up_to(field_after(args, "step="), ',')));
        return DigitSource::arithmetic(start, step);
    }
    if (kind == "surd") {
        BigInt a{std::string(up_to(field_after(args, "a="), ','))};
        BigInt b{std::string(up_to(field_after(args, "b="), ','))};
        BigInt c{std::string(up_to(field_after(args, "c="), ','))};
        BigInt d{std::string(up_to(field_after(args, "D="), ','))};
        return DigitSource::from_real(ExactReal::surd(a, b, c, d));
    }
    if (kind == "rational") {
        std::size_t slash = args.find('/');
        if (slash == std::string_view::npos)
            throw std::invalid_argument("digit source: rational wants 'p/q'");
        BigInt num{std::string(args.substr(0, slash))};
        BigInt den{std::string(args.substr(slash + 1))};
        return DigitSource::from_real(ExactReal::rational(num, den));
    }
    throw std::invalid_argument("digit source: unknown kind '" + std::string(kind) + "'");
}

}  // namespace ncf
