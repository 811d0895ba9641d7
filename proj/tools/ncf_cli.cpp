// Command-line front end: expansions, word generation, combinatorial
// analysis, dynamics experiments, and the verification suite.
//
// Exit codes: 0 success, 1 usage or domain errors, 2 verification failure.

#include "CLI11.hpp"

#include "ncf/json_io.hpp"
#include "ncf/ncf.hpp"
#include "ncf/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ncf;

const CLI::Validator kNumeratorBound(
    [](std::string& s) -> std::string {
        try {
            if (std::stoll(s) >= 1) return {};
        } catch (...) {
        }
        return "N must be >= 1";
    },
    "N>=1");

struct WordOptions {
    long long n = 2;
    std::string source_spec;
    std::string word_file;
    std::uint64_t len = 100000;
    std::string flavor = "primal";
    bool rle = false;
};

Flavor parse_flavor(const std::string& name) {
    if (name == "primal") return Flavor::Primal;
    if (name == "dual") return Flavor::Dual;
    throw CLI::ValidationError("--flavor", "flavor must be 'primal' or 'dual'");
}

void add_word_options(CLI::App* cmd, WordOptions& opt, bool with_file = true) {
    cmd->add_option("--N", opt.n, "numerator of the expansion")->check(kNumeratorBound);
    cmd->add_option("--source", opt.source_spec,
                    "digit source: list:..., periodic:pre=..;per=.., arith:start=..,step=.., "
                    "surd:a=..,b=..,c=..,D=.., rational:p/q");
    cmd->add_option("--len", opt.len, "prefix length to build");
    cmd->add_option("--flavor", opt.flavor, "primal or dual")
        ->check(CLI::IsMember({"primal", "dual"}));
    if (with_file) {
        cmd->add_option("--word-file", opt.word_file, "read the word from a file instead");
        cmd->add_flag("--rle", opt.rle, "word file uses count:letter tokens");
    }
}

BinaryWord load_word(const WordOptions& opt) {
    if (!opt.word_file.empty()) {
        std::ifstream in(opt.word_file);
        if (!in) throw std::invalid_argument("cannot open " + opt.word_file);
        return opt.rle ? read_word_rle(in) : read_word_plain(in);
    }
    if (opt.source_spec.empty())
        throw std::invalid_argument("need --source or --word-file");
    return limit_prefix(parse_digit_source(opt.source_spec), opt.n, opt.len,
                        parse_flavor(opt.flavor));
}

void emit(const Json& payload, const std::string& format) {
    if (format == "json") std::cout << payload.dump(2) << "\n";
    else std::cout << payload.dump() << "\n";
}

int run_expand(const std::string& source_spec, long long n, std::size_t count,
               std::size_t cylinder_order, const std::string& format) {
    DigitSource source = parse_digit_source(source_spec);
    DigitSequence digits = source.take(n, count);
    if (format == "plain") {
        for (std::size_t i = 0; i < digits.size(); ++i)
            std::cout << (i ? " " : "") << digits[i];
        std::cout << (digits.terminated ? " (finite)" : "") << "\n";
        return 0;
    }
    Json out = to_json(digits);
    out["N"] = n;
    if (!digits.values.empty()) out["convergents"] = to_json(convergents(digits, n, digits.size()));
    if (cylinder_order > 0 && cylinder_order <= digits.size())
        out["cylinder"] = to_json(cylinder(digits, n, cylinder_order));
    emit(out, "json");
    return 0;
}

int run_word(const WordOptions& opt, std::optional<std::size_t> sigma_k,
             std::optional<std::size_t> special_k, bool slow, const std::string& out_file,
             bool out_rle, const std::string& format) {
    DigitSource source = parse_digit_source(opt.source_spec);
    Flavor flavor = parse_flavor(opt.flavor);
    BinaryWord word;
    Json meta{{"N", opt.n}, {"flavor", opt.flavor}};
    if (sigma_k) {
        word = sigma_word(source, opt.n, *sigma_k, flavor);
        meta["k"] = *sigma_k;
    } else if (special_k) {
        auto sw = special_words(source, opt.n, *special_k, flavor);
        meta["k"] = *special_k;
        meta["s_word"] = sw.s_word.to_string();
        meta["t_word"] = sw.t_word.to_string();
        meta["s_len"] = sw.s_word.size();
        meta["t_len"] = sw.t_word.size();
        if (format == "plain") {
            std::cout << sw.s_word.to_string() << "\n" << sw.t_word.to_string() << "\n";
            return 0;
        }
        emit(meta, format);
        return 0;
    } else if (slow) {
        DigitSequence digits = source.take(opt.n, opt.len, true);
        auto symbols = slow_digits(digits, opt.n, opt.len);
        word = slow_limit_prefix(symbols, opt.n, opt.len);
        meta["directive"] = "slow";
    } else {
        word = limit_prefix(source, opt.n, opt.len, flavor);
    }
    meta["length"] = word.size();
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw std::invalid_argument("cannot open " + out_file);
        out_rle ? write_word_rle(out, word) : write_word_plain(out, word);
        meta["written"] = out_file;
        if (format == "json") emit(meta, format);
        return 0;
    }
    if (format == "json") {
        meta["word"] = word.to_string();
        emit(meta, format);
    } else {
        out_rle ? write_word_rle(std::cout, word) : write_word_plain(std::cout, word);
    }
    return 0;
}

int run_analyze_balance(const WordOptions& opt, std::size_t lmax,
                        std::optional<std::size_t> witness_len, std::uint64_t witness_target,
                        const std::string& format) {
    BinaryWord w = load_word(opt);
    auto prof = balance_profile(w, std::min<std::uint64_t>(lmax, w.size()));
    if (witness_len) {
        auto hit = find_imbalance_witness(w, *witness_len, witness_target);
        Json out = to_json(prof);
        out["witness"] = hit ? Json{{"length", hit->length},
                                    {"min_pos", hit->min_pos},
                                    {"max_pos", hit->max_pos},
                                    {"min_ones", hit->min_ones},
                                    {"max_ones", hit->max_ones}}
                             : Json(nullptr);
        emit(out, format);
        return 0;
    }
    if (format == "csv") {
        std::cout << "length,min1,max1,spread\n";
        for (const auto& r : prof.rows)
            std::cout << r.length << ',' << r.min1 << ',' << r.max1 << ',' << r.spread << '\n';
    } else if (format == "plain") {
        std::cout << "balance constant " << prof.constant << " over lengths 1.."
                  << prof.rows.size() << "\n";
    } else {
        emit(to_json(prof), format);
    }
    return 0;
}

int run_analyze_complexity(const WordOptions& opt, std::size_t nmax, const std::string& format) {
    if (opt.word_file.empty() && opt.source_spec.empty())
        throw std::invalid_argument("need --source or --word-file");
    Json out;
    ComplexityProfile empirical;
    if (!opt.word_file.empty()) {
        empirical = factor_complexity(load_word(opt), nmax);
        out["empirical"] = to_json(empirical);
    } else {
        // grow the generated prefix until the counts stabilize
        WordOptions grown = opt;
        for (;; grown.len *= 2) {
            try {
                empirical = factor_complexity(load_word(grown), nmax);
                break;
            } catch (const PrefixTooShort&) {
                if (grown.len >= 64 * opt.len) throw;
            }
        }
        out["empirical"] = to_json(empirical);
        out["prefix_length"] = grown.len;
    }
    if (!opt.source_spec.empty()) {
        DigitSource source = parse_digit_source(opt.source_spec);
        Flavor flavor = parse_flavor(opt.flavor);
        auto closed = complexity_closed_form(source, opt.n, nmax, flavor);
        out["closed_form"] = to_json(closed);
        out["matches_empirical"] = closed.counts == empirical.counts;
        auto displayed = displayed_complexity(source, opt.n, nmax, flavor);
        Json deltas = Json::array();
        for (std::size_t m = 0; m <= nmax; ++m) {
            BigInt delta = displayed[m] - closed.counts[m];
            if (delta != 0) deltas.push_back(Json{{"n", m}, {"delta", to_decimal(delta)}});
        }
        out["displayed_form_discrepancies"] = deltas;
    }
    if (format == "csv") {
        std::cout << "n,p,ls_count\n";
        for (std::size_t m = 0; m < empirical.counts.size(); ++m) {
            std::cout << m << ',' << empirical.counts[m] << ',';
            if (m < empirical.ls_counts.size()) std::cout << int(empirical.ls_counts[m]);
            std::cout << '\n';
        }
    } else {
        emit(out, format);
    }
    return 0;
}

int run_analyze_special(const WordOptions& opt, std::size_t n, const std::string& format) {
    BinaryWord w = load_word(opt);
    auto rep = left_special(w, n);
    if (format == "plain") {
        for (const auto& f : rep.factors)
            std::cout << f.factor << (f.is_prefix ? " prefix" : "")
                      << (f.is_maximal ? " maximal" : "")
                      << (f.is_total_bispecial ? " total-bispecial" : "") << "\n";
    } else {
        emit(to_json(rep), format);
    }
    return 0;
}

int run_analyze_blocks(const WordOptions& opt, const std::string& format) {
    auto census = maximal_blocks(load_word(opt));
    emit(to_json(census), format);
    return 0;
}

int run_analyze_frequency(const WordOptions& opt, const std::string& factor, std::size_t windows,
                          const std::string& format) {
    auto rep = frequency_report(load_word(opt), BinaryWord::from_string(factor), windows);
    emit(to_json(rep), format);
    return 0;
}

int verification_exit(const std::vector<verify::CheckResult>& results, const std::string& format) {
    bool all_pass = true;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        emit(arr, format);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) std::cout << " — " << r.detail;
            std::cout << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansions with constant numerator, their binary words, and the "
                 "associated dynamics"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "plain", "csv"}))
        ->capture_default_str();

    // expand
    auto* expand = app.add_subcommand("expand", "greedy digits, convergents, cylinders");
    std::string expand_source;
    long long expand_n = 2;
    std::size_t expand_count = 10, expand_cyl = 0;
    expand->add_option("--N", expand_n, "numerator")->check(kNumeratorBound)->required();
    expand->add_option("--source", expand_source, "digit source")->required();
    expand->add_option("--count", expand_count, "number of digits");
    expand->add_option("--cylinder", expand_cyl, "also report the cylinder of this order");

    // word
    auto* word = app.add_subcommand("word", "generate prefix words and limit words");
    WordOptions word_opt;
    add_word_options(word, word_opt, false);
    std::size_t word_sigma = 0, word_special = 0, word_matrix = 0;
    bool word_slow = false, word_out_rle = false;
    std::string word_out;
    word->add_option("--sigma", word_sigma, "emit the k-th prefix word");
    word->add_option("--special", word_special, "emit the k-th S/T word pair");
    word->add_option("--matrix", word_matrix, "emit the incidence-matrix product up to k");
    word->add_flag("--slow", word_slow, "emit the slow-directive limit word");
    word->add_option("--out", word_out, "write to a file instead of stdout");
    word->add_flag("--out-rle", word_out_rle, "write count:letter tokens");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "combinatorial reports on binary words");
    analyze->require_subcommand(1);
    WordOptions an_opt;
    std::size_t an_lmax = 2048, an_nmax = 512, an_n = 8, an_windows = 16;
    std::size_t an_witness_len = 0;
    std::uint64_t an_witness_target = 0;
    std::string an_factor = "01";
    auto* an_balance = analyze->add_subcommand("balance", "window spreads per length");
    add_word_options(an_balance, an_opt);
    an_balance->add_option("--lmax", an_lmax, "largest window length");
    an_balance->add_option("--witness-len", an_witness_len, "also search this window length");
    an_balance->add_option("--witness-target", an_witness_target, "required 1-count gap");
    auto* an_complexity = analyze->add_subcommand("complexity", "distinct factor counts");
    add_word_options(an_complexity, an_opt);
    an_complexity->add_option("--nmax", an_nmax, "largest factor length");
    auto* an_special = analyze->add_subcommand("special", "left special factors of one length");
    add_word_options(an_special, an_opt);
    an_special->add_option("--n", an_n, "factor length");
    auto* an_blocks = analyze->add_subcommand("blocks", "interior run-length census");
    add_word_options(an_blocks, an_opt);
    auto* an_frequency = analyze->add_subcommand("frequency", "per-window factor frequencies");
    add_word_options(an_frequency, an_opt);
    an_frequency->add_option("--factor", an_factor, "factor to count");
    an_frequency->add_option("--windows", an_windows, "number of disjoint windows");

    // dynamics
    auto* dynamics = app.add_subcommand("dynamics", "orbits, entropy, growth, invariance");
    dynamics->require_subcommand(1);
    long long dyn_n = 2;
    std::size_t dyn_steps = 100, dyn_iters = 1000000, dyn_bins = 20;
    std::uint64_t dyn_seed = 1;
    double dyn_x0 = 0.5, dyn_y0 = 0.0, dyn_a = 0.25, dyn_b = 0.5;
    std::string dyn_map = "T", dyn_source, dyn_csv;
    auto* dyn_entropy = dynamics->add_subcommand("entropy", "formula vs measured entropy");
    dyn_entropy->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    auto* dyn_orbit = dynamics->add_subcommand("orbit", "iterate a map in double precision");
    dyn_orbit->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    dyn_orbit->add_option("--map", dyn_map, "T, F, or natext")
        ->check(CLI::IsMember({"T", "F", "natext"}));
    dyn_orbit->add_option("--x0", dyn_x0, "start point");
    dyn_orbit->add_option("--y0", dyn_y0, "second coordinate (natext)");
    dyn_orbit->add_option("--steps", dyn_steps, "iterations");
    auto* dyn_growth = dynamics->add_subcommand("growth", "denominator growth rates");
    dyn_growth->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    dyn_growth->add_option("--source", dyn_source, "digit source")->required();
    dyn_growth->add_option("--n", dyn_steps, "depth");
    auto* dyn_farey = dynamics->add_subcommand("farey", "symbolic slow-map digit law");
    dyn_farey->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    dyn_farey->add_option("--source", dyn_source, "digit source")->required();
    dyn_farey->add_option("--steps", dyn_steps, "slow steps to simulate");
    auto* dyn_inv = dynamics->add_subcommand("invariance", "dx/x preimage residual");
    dyn_inv->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    dyn_inv->add_option("--a", dyn_a, "interval start")->check(CLI::PositiveNumber);
    dyn_inv->add_option("--b", dyn_b, "interval end");
    auto* dyn_natext = dynamics->add_subcommand("natext", "natural extension histogram check");
    dyn_natext->add_option("--N", dyn_n, "numerator")->check(kNumeratorBound);
    dyn_natext->add_option("--iters", dyn_iters, "orbit length");
    dyn_natext->add_option("--bins", dyn_bins, "bins per axis");
    dyn_natext->add_option("--seed", dyn_seed, "random seed");
    dyn_natext->add_option("--csv", dyn_csv, "write the histogram as CSV to this file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->require_subcommand(1);
    std::string verify_source;
    long long verify_n = 2;
    std::uint64_t verify_len = 100000;
    std::size_t verify_nmax = 200;
    std::string verify_flavor = "dual";
    auto* verify_all = verify_cmd->add_subcommand("all", "every check");
    std::vector<CLI::App*> named;
    for (const auto& [name, fn] : verify::registry()) {
        (void)fn;
        named.push_back(verify_cmd->add_subcommand(name, "single check"));
    }
    auto* verify_balance = verify_cmd->add_subcommand(
        "balance", "spread bounds for one digit source");
    verify_balance->add_option("--N", verify_n, "numerator")->check(kNumeratorBound)->required();
    verify_balance->add_option("--source", verify_source, "digit source")->required();
    verify_balance->add_option("--len", verify_len, "prefix length");
    auto* verify_complexity = verify_cmd->add_subcommand(
        "complexity", "empirical vs closed-form counts for one digit source");
    verify_complexity->add_option("--N", verify_n, "numerator")
        ->check(kNumeratorBound)
        ->required();
    verify_complexity->add_option("--source", verify_source, "digit source")->required();
    verify_complexity->add_option("--nmax", verify_nmax, "largest factor length");
    verify_complexity->add_option("--flavor", verify_flavor, "primal or dual")
        ->check(CLI::IsMember({"primal", "dual"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (expand->parsed())
            return run_expand(expand_source, expand_n, expand_count, expand_cyl, format);
        if (word->parsed()) {
            if (word_matrix) {
                Matrix2 m = matrix_product(parse_digit_source(word_opt.source_spec), word_opt.n,
                                           word_matrix);
                emit(Json{{"N", word_opt.n}, {"k", word_matrix}, {"matrix", to_json(m)}}, format);
                return 0;
            }
            return run_word(word_opt,
                            word_sigma ? std::optional<std::size_t>(word_sigma) : std::nullopt,
                            word_special ? std::optional<std::size_t>(word_special) : std::nullopt,
                            word_slow, word_out, word_out_rle, format);
        }
        if (analyze->parsed()) {
            if (an_balance->parsed())
                return run_analyze_balance(
                    an_opt, an_lmax,
                    an_witness_len ? std::optional<std::size_t>(an_witness_len) : std::nullopt,
                    an_witness_target, format);
            if (an_complexity->parsed()) return run_analyze_complexity(an_opt, an_nmax, format);
            if (an_special->parsed()) return run_analyze_special(an_opt, an_n, format);
            if (an_blocks->parsed()) return run_analyze_blocks(an_opt, format);
            if (an_frequency->parsed())
                return run_analyze_frequency(an_opt, an_factor, an_windows, format);
        }
        if (dynamics->parsed()) {
            if (dyn_entropy->parsed()) {
                emit(to_json(entropy_report(dyn_n)), format);
                return 0;
            }
            if (dyn_orbit->parsed()) {
                MapKind kind = dyn_map == "T" ? MapKind::T
                                              : (dyn_map == "F" ? MapKind::F : MapKind::NatExt);
                emit(to_json(orbit(kind, dyn_n, dyn_x0, dyn_y0, dyn_steps)), format);
                return 0;
            }
            if (dyn_growth->parsed()) {
                DigitSequence digits = parse_digit_source(dyn_source).take(dyn_n, dyn_steps);
                emit(to_json(growth_rate(digits, dyn_n, digits.size())), format);
                return 0;
            }
            if (dyn_farey->parsed()) {
                DigitSequence digits =
                    parse_digit_source(dyn_source).take(dyn_n, dyn_steps, true);
                auto rep = farey_digit_semantics_check(digits, dyn_n, dyn_steps);
                emit(Json{{"block_shift_law", rep.block_shift_law},
                          {"matches_slow_digits", rep.matches_slow_digits},
                          {"trace", rep.trace}},
                     format);
                return rep.block_shift_law && rep.matches_slow_digits ? 0 : 2;
            }
            if (dyn_inv->parsed()) {
                double residual = farey_invariance_residual(dyn_a, dyn_b, dyn_n);
                emit(Json{{"a", dyn_a}, {"b", dyn_b}, {"residual", residual}}, format);
                return 0;
            }
            if (dyn_natext->parsed()) {
                auto check = natext_invariance_check(dyn_n, dyn_iters, dyn_bins, dyn_seed);
                if (!dyn_csv.empty()) {
                    std::ofstream out(dyn_csv);
                    if (!out) throw std::invalid_argument("cannot open " + dyn_csv);
                    write_density_csv(out, check);
                }
                emit(to_json(check), format);
                return 0;
            }
        }
        if (verify_cmd->parsed()) {
            if (verify_all->parsed()) return verification_exit(verify::run_all(), format);
            for (std::size_t i = 0; i < named.size(); ++i) {
                if (named[i]->parsed()) {
                    auto result = verify::run_check(verify::registry()[i].first);
                    return verification_exit({*result}, format);
                }
            }
            if (verify_balance->parsed()) {
                auto src = parse_digit_source(verify_source);
                verify::CheckResult r;
                r.name = "balance";
                auto dual = balance_profile(limit_prefix(src, verify_n, verify_len, Flavor::Dual),
                                            std::min<std::uint64_t>(2048, verify_len));
                auto primal = balance_profile(
                    limit_prefix(src, verify_n, verify_len, Flavor::Primal),
                    std::min<std::uint64_t>(2048, verify_len));
                r.pass = dual.constant <= static_cast<std::uint64_t>(verify_n) &&
                         primal.constant <= static_cast<std::uint64_t>(verify_n * verify_n);
                r.detail = "dual spread " + std::to_string(dual.constant) + " (bound " +
                           std::to_string(verify_n) + "), primal spread " +
                           std::to_string(primal.constant) + " (bound " +
                           std::to_string(verify_n * verify_n) + ")";
                return verification_exit({r}, format);
            }
            if (verify_complexity->parsed()) {
                auto src = parse_digit_source(verify_source);
                Flavor flavor = parse_flavor(verify_flavor);
                verify::CheckResult r;
                r.name = "complexity";
                std::uint64_t len = std::max<std::uint64_t>(400000, 4 * verify_nmax);
                auto empirical =
                    factor_complexity(limit_prefix(src, verify_n, len, flavor), verify_nmax);
                auto closed = complexity_closed_form(src, verify_n, verify_nmax, flavor);
                r.pass = empirical.counts == closed.counts;
                r.detail = r.pass ? "empirical = closed form for every length up to " +
                                        std::to_string(verify_nmax)
                                  : "profiles differ";
                return verification_exit({r}, format);
            }
        }
    } catch (const std::exception& e) {
        if (format == "json") std::cout << Json{{"error", e.what()}}.dump() << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
