#pragma once

#include "ncf/errors.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace ncf {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (positive half; node 7 is the center).
inline constexpr double kQK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kQK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kQK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline std::pair<double, double> qk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kQK15Nodes[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kQK15WeightsK[i] * fsum;
        if (i % 2 == 1) gauss += kQK15WeightsG[i / 2] * fsum;
    }
    const double fc = f(center);
    kronrod += kQK15WeightsK[7] * fc;
    gauss += kQK15WeightsG[3] * fc;
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive bisection on the 15-point Kronrod rule with an absolute-error
/// target. Throws NumericError when the segment budget runs out first.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_segments = 100000) {
    struct Segment {
        double a, b, value, error;
    };
    QuadratureResult res;
    auto [v0, e0] = detail::qk15(f, a, b);
    res.evaluations = 15;
    std::vector<Segment> segs{{a, b, v0, e0}};
    double total_error = e0;
    while (total_error > abs_tol) {
        if (segs.size() >= max_segments)
            throw NumericError("integrate_adaptive: tolerance not reached");
        // split the worst segment
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;
        Segment seg = segs[worst];
        const double mid = 0.5 * (seg.a + seg.b);
        if (mid <= seg.a || mid >= seg.b)
            throw NumericError("integrate_adaptive: interval too small to split");
        auto [vl, el] = detail::qk15(f, seg.a, mid);
        auto [vr, er] = detail::qk15(f, mid, seg.b);
        res.evaluations += 30;
        segs[worst] = {seg.a, mid, vl, el};
        segs.push_back({mid, seg.b, vr, er});
        total_error += el + er - seg.error;
    }
    for (const auto& s : segs) res.value += s.value;
    res.error = total_error;
    res.converged = true;
    return res;
}

}  // namespace ncf
