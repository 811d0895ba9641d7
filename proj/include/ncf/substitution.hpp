#pragma once

#include "ncf/matrix2.hpp"
#include "ncf/word.hpp"

#include <stdexcept>
#include <string>

namespace ncf {

/// A substitution on {0,1}, one of the five families used here:
///   primal(d,n): 0 -> 0^d 1^n,   1 -> 0
///   dual(d,n):   0 -> 0^d 1,     1 -> 0^n
///   tau(n):      0 -> 0,         1 -> 1^n
///   tau_b(n):    0 -> 0^n,       1 -> 0 1^n
///   tau_d(n):    0 -> 0^n 1^n,   1 -> 0
class SubstitutionRule {
public:
    enum class Kind { Primal, Dual, Tau, TauB, TauD };

    static SubstitutionRule primal(long long d, long long n) {
        require(d >= 1 && n >= 1, "primal: d and n must be >= 1");
        BinaryWord img0 = BinaryWord::run(0, d);
        img0.append_run(1, n);
        return SubstitutionRule(Kind::Primal, d, n, std::move(img0), BinaryWord::run(0, 1));
    }

    static SubstitutionRule dual(long long d, long long n) {
        require(d >= 1 && n >= 1, "dual: d and n must be >= 1");
        BinaryWord img0 = BinaryWord::run(0, d);
        img0.append_run(1, 1);
        return SubstitutionRule(Kind::Dual, d, n, std::move(img0), BinaryWord::run(0, n));
    }

    static SubstitutionRule tau(long long n) {
        require(n >= 1, "tau: n must be >= 1");
        return SubstitutionRule(Kind::Tau, 0, n, BinaryWord::run(0, 1), BinaryWord::run(1, n));
    }

    static SubstitutionRule tau_b(long long n) {
        require(n >= 1, "tau_b: n must be >= 1");
        BinaryWord img1 = BinaryWord::run(0, 1);
        img1.append_run(1, n);
        return SubstitutionRule(Kind::TauB, 0, n, BinaryWord::run(0, n), std::move(img1));
    }

    static SubstitutionRule tau_d(long long n) {
        require(n >= 1, "tau_d: n must be >= 1");
        BinaryWord img0 = BinaryWord::run(0, n);
        img0.append_run(1, n);
        return SubstitutionRule(Kind::TauD, 0, n, std::move(img0), BinaryWord::run(0, 1));
    }

    Kind kind() const { return kind_; }
    long long d() const { return d_; }
    long long n() const { return n_; }
    const BinaryWord& image(int letter) const { return letter == 0 ? img0_ : img1_; }

    std::string label() const {
        switch (kind_) {
            case Kind::Primal: return "primal(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
            case Kind::Dual: return "dual(" + std::to_string(d_) + "," + std::to_string(n_) + ")";
            case Kind::Tau: return "tau(" + std::to_string(n_) + ")";
            case Kind::TauB: return "tauB(" + std::to_string(n_) + ")";
            case Kind::TauD: return "tauD(" + std::to_string(n_) + ")";
        }
        return "?";
    }

private:
    SubstitutionRule(Kind k, long long d, long long n, BinaryWord img0, BinaryWord img1)
        : kind_(k), d_(d), n_(n), img0_(std::move(img0)), img1_(std::move(img1)) {
        img0_.bytes();
        img1_.bytes();
    }

    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    Kind kind_;
    long long d_;
    long long n_;
    BinaryWord img0_;
    BinaryWord img1_;
};

/// Image of a word: per-letter images concatenated in order.
inline BinaryWord apply(const SubstitutionRule& rule, const BinaryWord& w) {
    BinaryWord out;
    for (const auto& r : w.runs())
        out.append_repeated(rule.image(r.letter), r.length);
    return out;
}

/// Letter-count matrix of the rule's images.
inline Matrix2 incidence(const SubstitutionRule& rule) {
    return {BigInt(rule.image(0).count(0)), BigInt(rule.image(1).count(0)),
            BigInt(rule.image(0).count(1)), BigInt(rule.image(1).count(1))};
}

}  // namespace ncf
