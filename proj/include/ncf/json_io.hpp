#pragma once

#include "ncf/analysis.hpp"
#include "ncf/dynamics.hpp"
#include "ncf/expansion.hpp"
#include "ncf/matrix2.hpp"

#include "json.hpp"

#include <ostream>

// JSON views of the report types. Arbitrary-precision integers and exact
// rationals always travel as decimal strings, never as JSON numbers.

namespace ncf {

using Json = nlohmann::json;

inline Json to_json(const ConvergentPair& c) {
    return Json{{"n", c.index}, {"p", to_decimal(c.p)}, {"q", to_decimal(c.q)}};
}

inline Json to_json(const std::vector<ConvergentPair>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(to_json(c));
    return arr;
}

inline Json to_json(const Matrix2& m) {
    return Json::array({Json::array({to_decimal(m.m00), to_decimal(m.m01)}),
                        Json::array({to_decimal(m.m10), to_decimal(m.m11)})});
}

inline Json to_json(const RationalInterval& iv) {
    return Json{{"lo", to_decimal(iv.lo)},
                {"hi", to_decimal(iv.hi)},
                {"width", to_decimal(iv.width())}};
}

inline Json to_json(const DigitSequence& seq) {
    Json arr = Json::array();
    for (long long d : seq.values) arr.push_back(d);
    return Json{{"digits", arr}, {"terminated", seq.terminated}};
}

inline Json to_json(const BalanceProfile& prof) {
    Json rows = Json::array();
    for (const auto& r : prof.rows)
        rows.push_back(Json{{"length", r.length},
                            {"min1", r.min1},
                            {"max1", r.max1},
                            {"spread", r.spread}});
    return Json{{"rows", rows}, {"constant", prof.constant}};
}

inline Json to_json(const ComplexityProfile& prof) {
    Json rows = Json::array();
    for (std::size_t n = 0; n < prof.counts.size(); ++n) {
        Json row{{"n", n}, {"p", prof.counts[n]}};
        if (n < prof.ls_counts.size()) row["ls_count"] = prof.ls_counts[n];
        if (!prof.bands.empty()) row["band"] = prof.band_of(n);
        rows.push_back(std::move(row));
    }
    Json bands = Json::array();
    for (const auto& b : prof.bands)
        bands.push_back(Json{{"s", to_decimal(b.s)}, {"t", to_decimal(b.t)}});
    return Json{{"rows", rows}, {"bands", bands}, {"t0", to_decimal(prof.t0)}};
}

inline Json to_json(const SpecialFactorReport& rep) {
    Json factors = Json::array();
    Json flags = Json::array();
    for (const auto& f : rep.factors) {
        factors.push_back(f.factor);
        flags.push_back(Json{{"factor", f.factor},
                             {"is_prefix", f.is_prefix},
                             {"is_maximal", f.is_maximal},
                             {"is_total_bispecial", f.is_total_bispecial}});
    }
    return Json{{"n", rep.n}, {"factors", factors}, {"details", flags}};
}

inline Json to_json(const MaximalBlockCensus& census) {
    return Json{{"zero_runs", census.zero_runs}, {"one_runs", census.one_runs}};
}

inline Json to_json(const FrequencyReport& rep) {
    return Json{{"factor", rep.factor},
                {"windows", rep.windows},
                {"window_freq", rep.window_freq},
                {"mean", rep.mean},
                {"max_deviation", rep.max_deviation}};
}

inline Json to_json(const EntropyReport& rep) {
    return Json{{"n", rep.n},
                {"formula", rep.formula_value},
                {"rokhlin", rep.rokhlin_value},
                {"dilog", rep.dilog_value},
                {"quad_error", rep.quad_error},
                {"sign_mismatch", rep.sign_mismatch}};
}

inline Json to_json(const GrowthRates& rates) {
    return Json{{"q_rate", rates.q_rate}, {"word_rate", rates.word_rate}};
}

inline Json to_json(const DensityCheck& check) {
    return Json{{"n", check.n},
                {"bins", check.bins},
                {"iterations", check.iterations},
                {"seed", check.seed},
                {"tv_2d", check.tv_2d},
                {"sup_2d", check.sup_2d},
                {"tv_1d", check.tv_1d},
                {"sup_1d", check.sup_1d},
                {"theoretical_mass_2d", check.theoretical_mass_2d}};
}

inline Json to_json(const OrbitSample& o) {
    Json j{{"map", o.map == MapKind::T ? "T" : (o.map == MapKind::F ? "F" : "NatExt")},
           {"n", o.n},
           {"x0", o.x0},
           {"states", o.xs},
           {"digits", o.digits}};
    if (o.map == MapKind::NatExt) {
        j["y0"] = o.y0;
        j["states_y"] = o.ys;
    }
    return j;
}

/// Histogram dump, one line per cell: bin_lo_x, bin_lo_y, empirical mass,
/// theoretical mass. The 1-D marginal rows carry an empty second column.
inline void write_density_csv(std::ostream& os, const DensityCheck& check) {
    os << "bin_lo_x,bin_lo_y,mass_empirical,mass_theoretical\n";
    const double ymax = 1.0 / static_cast<double>(check.n);
    for (std::size_t ix = 0; ix < check.bins; ++ix) {
        for (std::size_t iy = 0; iy < check.bins; ++iy) {
            os << static_cast<double>(ix) / check.bins << ','
               << ymax * static_cast<double>(iy) / check.bins << ','
               << check.empirical_2d[ix * check.bins + iy] << ','
               << check.theoretical_2d[ix * check.bins + iy] << '\n';
        }
    }
    for (std::size_t ix = 0; ix < check.bins; ++ix) {
        os << static_cast<double>(ix) / check.bins << ",,"
           << check.empirical_1d[ix] << ',' << check.theoretical_1d[ix] << '\n';
    }
}

}  // namespace ncf
