// End-to-end verification suite. One test case per check; each prints a
// PASS/FAIL line with the measured detail so a run reads as a report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncf/verify.hpp"

#include <cstdio>

using ncf::verify::CheckResult;

namespace {

void report(const CheckResult& r) {
    std::printf("%s %-24s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(r.pass, r.name, ": ", r.detail);
}

}  // namespace

TEST_CASE("exact convergent identities") { report(ncf::verify::exact_identities()); }
TEST_CASE("surd periodicity") { report(ncf::verify::surd_periodicity()); }
TEST_CASE("reference word prefixes") { report(ncf::verify::reference_words()); }
TEST_CASE("tau correspondence") { report(ncf::verify::tau_correspondence()); }
TEST_CASE("maximal block structure") { report(ncf::verify::maximal_block_structure()); }
TEST_CASE("balance bounds") { report(ncf::verify::balance_bounds()); }
TEST_CASE("imbalance witnesses") { report(ncf::verify::imbalance_witnesses()); }
TEST_CASE("complexity oracle equivalence") { report(ncf::verify::complexity_equivalence()); }
TEST_CASE("special factor structure") { report(ncf::verify::special_factor_structure()); }
TEST_CASE("letter and word frequencies") { report(ncf::verify::letter_frequencies()); }
TEST_CASE("entropy cross-check") { report(ncf::verify::entropy_cross_check()); }
TEST_CASE("growth rate limits") { report(ncf::verify::growth_rate_limits()); }
TEST_CASE("slow map properties") { report(ncf::verify::farey_properties()); }
TEST_CASE("natural extension density") { report(ncf::verify::natural_extension_density()); }
