#pragma once

#include "ncf/bigint.hpp"
#include "ncf/digits.hpp"
#include "ncf/errors.hpp"
#include "ncf/expansion.hpp"
#include "ncf/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace ncf {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// --- orbits ------------------------------------------------------------------

enum class MapKind { T, F, NatExt };

/// A floating-point orbit of the digit map T, the slow map F, or the natural
/// extension on [0,1] x [0,1/n]. T records digits floor(n/x); F records the
/// slow symbol (n on the shift branch, 1 on the decrement branch).
struct OrbitSample {
    MapKind map = MapKind::T;
    long long n = 1;
    double x0 = 0.0;
    double y0 = 0.0;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<long long> digits;
};

namespace detail {

inline double clamp_unit(double x) { return x < 0.0 ? 0.0 : (x >= 1.0 ? std::nextafter(1.0, 0.0) : x); }

inline long long digit_of(double x, long long n) {
    double d = std::floor(static_cast<double>(n) / x);
    if (!(d >= 1.0) || d > 9.0e18)
        throw std::domain_error("orbit: digit out of representable range");
    return static_cast<long long>(d);
}

}  // namespace detail

inline OrbitSample orbit(MapKind map, long long n, double x0, double y0, std::size_t steps) {
    if (n < 1) throw std::invalid_argument("orbit: numerator must be >= 1");
    if (steps < 1) throw std::invalid_argument("orbit: need at least one step");
    if (x0 < 0.0 || x0 > 1.0) throw std::invalid_argument("orbit: seed outside [0, 1]");
    if (map == MapKind::NatExt && (y0 < 0.0 || y0 > 1.0 / static_cast<double>(n)))
        throw std::invalid_argument("orbit: second coordinate outside [0, 1/n]");
    OrbitSample out;
    out.map = map;
    out.n = n;
    out.x0 = x0;
    out.y0 = y0;
    out.xs.reserve(steps);
    double x = x0, y = y0;
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < steps; ++i) {
        switch (map) {
            case MapKind::T: {
                if (x == 0.0) { out.xs.push_back(0.0); continue; }
                long long d = detail::digit_of(x, n);
                x = detail::clamp_unit(nn / x - static_cast<double>(d));
                out.digits.push_back(d);
                out.xs.push_back(x);
                break;
            }
            case MapKind::F: {
                if (x > nn / (nn + 1.0)) {
                    x = detail::clamp_unit(nn / x - nn);
                    out.digits.push_back(n);
                } else {
                    x = detail::clamp_unit(nn * x / (nn - x));
                    out.digits.push_back(1);
                }
                out.xs.push_back(x);
                break;
            }
            case MapKind::NatExt: {
                if (x == 0.0) { x = 0.0; y = 0.0; }
                else {
                    long long d = detail::digit_of(x, n);
                    double ynext = 1.0 / (nn * y + static_cast<double>(d));
                    x = detail::clamp_unit(nn / x - static_cast<double>(d));
                    y = ynext;
                    out.digits.push_back(d);
                }
                out.xs.push_back(x);
                out.ys.push_back(y);
                break;
            }
        }
    }
    return out;
}

/// First index where a floating-point T-orbit's digits depart from the exact
/// greedy digits of the same start value, if any. Divergence past a few dozen
/// steps is expected; this surfaces it instead of hiding it.
inline std::optional<std::size_t> orbit_digit_divergence(const ExactReal& x, long long n,
                                                         std::size_t steps) {
    DigitSequence exact = greedy_digits(x, n, steps);
    OrbitSample fp = orbit(MapKind::T, n, x.to_double(), 0.0, steps);
    std::size_t m = std::min(exact.values.size(), fp.digits.size());
    for (std::size_t i = 0; i < m; ++i)
        if (exact.values[i] != fp.digits[i]) return i;
    if (exact.values.size() != fp.digits.size()) return m;
    return std::nullopt;
}

// --- slow map digit semantics (symbolic) --------------------------------------

struct FareySemantics {
    bool block_shift_law = true;     // d1 - n + 1 steps turn (d1, d2, ...) into (d2, ...)
    bool matches_slow_digits = true; // emitted trace equals the slow expansion
    std::vector<long long> trace;
};

/// Checks, with no floating point, that one slow-map step decrements the
/// leading digit when it exceeds n and shifts the digit list when it equals
/// n, and that the emitted symbol trace is exactly the slow expansion.
inline FareySemantics farey_digit_semantics_check(const DigitSequence& digits, long long n,
                                                  std::size_t steps) {
    for (long long d : digits.values)
        if (d < n) throw std::domain_error("farey_digit_semantics_check: digits must be >= n");
    FareySemantics rep;
    std::deque<long long> list(digits.values.begin(), digits.values.end());
    std::size_t step = 0;
    while (step < steps && !list.empty()) {
        // one full block: the leading digit d takes d - n decrements and one shift
        long long d = list.front();
        std::deque<long long> before = list;
        for (long long i = 0; i < d - n && step < steps; ++i, ++step) {
            list.front() -= 1;
            rep.trace.push_back(1);
        }
        if (step >= steps) break;
        if (list.front() != n) { rep.block_shift_law = false; break; }
        list.pop_front();
        rep.trace.push_back(n);
        ++step;
        before.pop_front();
        if (list != before) { rep.block_shift_law = false; break; }
    }
    auto slow = slow_digits(digits, n, rep.trace.size());
    rep.matches_slow_digits = slow == rep.trace;
    return rep;
}

// --- entropy -----------------------------------------------------------------

/// The dilogarithm in the convention used here: Li2(x) = int_0^x log(t)/(1-t) dt.
/// The integrand has an integrable log singularity at 0 (handled by the
/// substitution t = exp(-u)) and extends continuously through t = 1 with
/// value -1.
inline double dilog_integral(double x, double abs_tol = 1e-12) {
    if (x <= 0.0) throw std::invalid_argument("dilog_integral: argument must be positive");
    const double upper = std::min(x, 1.0);
    const double u1 = -std::log(upper);
    auto left = integrate_adaptive(
        [](double u) {
            if (u == 0.0) return 1.0;
            return u * std::exp(-u) / (-std::expm1(-u));
        },
        u1, 50.0, abs_tol / 2);
    double total = -left.value;
    if (x > 1.0) {
        auto right = integrate_adaptive(
            [](double t) {
                double h = t - 1.0;
                if (h == 0.0) return -1.0;
                return -std::log1p(h) / h;
            },
            1.0, x, abs_tol / 2);
        total += right.value;
    }
    return total;
}

/// The closed-form entropy expression evaluated verbatim with the dilogarithm
/// convention above; the signed result is returned without correction. (It
/// comes out negative — see rokhlin_entropy for the measured value.)
inline double entropy_formula(long long n) {
    if (n < 1) throw std::invalid_argument("entropy_formula: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double numerator =
        kPi * kPi / 3.0 + 2.0 * dilog_integral(nn + 1.0) + std::log(nn + 1.0) * std::log(nn);
    return numerator / std::log((nn + 1.0) / nn);
}

/// Invariant density of the digit map: rho_n(x) = 1 / (log((n+1)/n) (n+x)),
/// the y-marginal of dx dy/(1+xy)^2 over [0, 1/n].
inline double invariant_density(long long n, double x) {
    const double nn = static_cast<double>(n);
    return 1.0 / (std::log((nn + 1.0) / nn) * (nn + x));
}

/// Entropy as the integral of log|T'| = log(n/x^2) against the invariant
/// density, via adaptive quadrature after the substitution x = exp(-u).
inline double rokhlin_entropy(long long n, double abs_tol = 1e-11) {
    if (n < 1) throw std::invalid_argument("rokhlin_entropy: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double c = std::log((nn + 1.0) / nn);
    auto integral = integrate_adaptive(
        [nn](double u) {
            return (std::log(nn) + 2.0 * u) * std::exp(-u) / (nn + std::exp(-u));
        },
        0.0, 60.0, abs_tol * c);
    return integral.value / c;
}

struct EntropyReport {
    long long n = 1;
    double formula_value = 0.0;
    double rokhlin_value = 0.0;
    double dilog_value = 0.0;   // Li2(n+1) in the convention above
    double quad_error = 0.0;
    bool sign_mismatch = false;
};

inline EntropyReport entropy_report(long long n) {
    EntropyReport rep;
    rep.n = n;
    rep.dilog_value = dilog_integral(static_cast<double>(n) + 1.0);
    rep.formula_value = entropy_formula(n);
    rep.rokhlin_value = rokhlin_entropy(n);
    rep.quad_error = 1e-10;
    rep.sign_mismatch = (rep.formula_value < 0.0) != (rep.rokhlin_value < 0.0);
    return rep;
}

// --- growth rate ---------------------------------------------------------------

struct GrowthRates {
    std::vector<double> q_rate;     // (1/k) log q_k
    std::vector<double> word_rate;  // (1/k) log |W_k| = (1/k) log (p_{k-1} + q_{k-1})
};

inline GrowthRates growth_rate(const DigitSequence& digits, long long n, std::size_t upto) {
    auto cs = convergents(digits, n, upto);
    GrowthRates out;
    out.q_rate.reserve(upto);
    out.word_rate.reserve(upto);
    BigInt p_prev = 0, q_prev = 1;  // p_0, q_0
    for (std::size_t k = 1; k <= upto; ++k) {
        out.q_rate.push_back(log_big(cs[k - 1].q) / static_cast<double>(k));
        out.word_rate.push_back(p_prev + q_prev > 0
                                    ? log_big(p_prev + q_prev) / static_cast<double>(k)
                                    : 0.0);
        p_prev = cs[k - 1].p;
        q_prev = cs[k - 1].q;
    }
    return out;
}

// --- slow map invariant measure -------------------------------------------------

/// Residual of the dx/x invariance identity on the interval (a, b): the
/// measure of the interval minus the total measure of its two preimage
/// intervals (n a/(n+a), n b/(n+b)) and (n/(n+b), n/(n+a)). Analytically
/// zero; the returned value is floating-point noise.
inline double farey_invariance_residual(double a, double b, long long n) {
    if (!(a > 0.0)) throw std::invalid_argument("farey_invariance_residual: need a > 0");
    if (a > b || b > 1.0) throw std::invalid_argument("farey_invariance_residual: need a <= b <= 1");
    const double nn = static_cast<double>(n);
    const double direct = std::log(b / a);
    const double lower = std::log((nn * b / (nn + b)) / (nn * a / (nn + a)));
    const double upper = std::log((nn / (nn + a)) / (nn / (nn + b)));
    return std::abs(direct - (lower + upper));
}

// --- natural extension density check ---------------------------------------------

struct DensityCheck {
    long long n = 1;
    std::size_t bins = 0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::vector<double> empirical_2d;    // bins x bins, row-major in x
    std::vector<double> theoretical_2d;
    std::vector<double> empirical_1d;    // x-marginal
    std::vector<double> theoretical_1d;
    double tv_2d = 0.0;
    double sup_2d = 0.0;
    double tv_1d = 0.0;
    double sup_1d = 0.0;
    double theoretical_mass_2d = 0.0;    // should be 1 up to rounding
};

/// Long natural-extension orbit binned against the density
/// (1/log((n+1)/n)) (1+xy)^-2 on [0,1] x [0,1/n], plus the 1-D marginal
/// check against rho_n. Cell masses use the exact antiderivative
/// log((1+x1 y1)(1+x0 y0) / ((1+x1 y0)(1+x0 y1))).
inline DensityCheck natext_invariance_check(long long n, std::size_t iterations, std::size_t bins,
                                            std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("natext_invariance_check: n must be >= 1");
    if (iterations < 100000) throw std::invalid_argument("natext_invariance_check: need >= 1e5 iterates");
    if (bins < 10) throw std::invalid_argument("natext_invariance_check: need >= 10 bins per axis");
    const double nn = static_cast<double>(n);
    const double c = std::log((nn + 1.0) / nn);
    const std::size_t burn_in = 1000;

    DensityCheck rep;
    rep.n = n;
    rep.bins = bins;
    rep.iterations = iterations;
    rep.seed = seed;
    rep.empirical_2d.assign(bins * bins, 0.0);
    rep.empirical_1d.assign(bins, 0.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double x = unit(rng), y = unit(rng) / nn;
    auto step = [&] {
        if (x <= 0.0 || x >= 1.0) { x = unit(rng); return; }
        double d = std::floor(nn / x);
        double ynext = 1.0 / (nn * y + d);
        x = detail::clamp_unit(nn / x - d);
        y = ynext;
    };
    for (std::size_t i = 0; i < burn_in; ++i) step();
    const double ymax = 1.0 / nn;
    for (std::size_t i = 0; i < iterations; ++i) {
        step();
        std::size_t ix = std::min<std::size_t>(bins - 1, static_cast<std::size_t>(x * bins));
        std::size_t iy = std::min<std::size_t>(bins - 1, static_cast<std::size_t>(y / ymax * bins));
        rep.empirical_2d[ix * bins + iy] += 1.0;
        rep.empirical_1d[ix] += 1.0;
    }
    for (double& v : rep.empirical_2d) v /= static_cast<double>(iterations);
    for (double& v : rep.empirical_1d) v /= static_cast<double>(iterations);

    rep.theoretical_2d.resize(bins * bins);
    rep.theoretical_1d.resize(bins);
    for (std::size_t ix = 0; ix < bins; ++ix) {
        const double x0 = static_cast<double>(ix) / bins;
        const double x1 = static_cast<double>(ix + 1) / bins;
        rep.theoretical_1d[ix] = (std::log(nn + x1) - std::log(nn + x0)) / c;
        for (std::size_t iy = 0; iy < bins; ++iy) {
            const double y0 = ymax * static_cast<double>(iy) / bins;
            const double y1 = ymax * static_cast<double>(iy + 1) / bins;
            const double mass =
                std::log((1.0 + x1 * y1) * (1.0 + x0 * y0) / ((1.0 + x1 * y0) * (1.0 + x0 * y1))) / c;
            rep.theoretical_2d[ix * bins + iy] = mass;
            rep.theoretical_mass_2d += mass;
        }
    }
    for (std::size_t i = 0; i < rep.empirical_2d.size(); ++i) {
        const double diff = std::abs(rep.empirical_2d[i] - rep.theoretical_2d[i]);
        rep.tv_2d += 0.5 * diff;
        rep.sup_2d = std::max(rep.sup_2d, diff);
    }
    for (std::size_t i = 0; i < rep.empirical_1d.size(); ++i) {
        const double diff = std::abs(rep.empirical_1d[i] - rep.theoretical_1d[i]);
        rep.tv_1d += 0.5 * diff;
        rep.sup_1d = std::max(rep.sup_1d, diff);
    }
    return rep;
}

}  // namespace ncf
