#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncf/json_io.hpp"
#include "ncf/word.hpp"
#include "ncf/word_builder.hpp"

#include <random>
#include <sstream>

using namespace ncf;

TEST_CASE("word files round-trip in both formats") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        BinaryWord w;
        std::size_t blocks = 1 + rng() % 12;
        for (std::size_t i = 0; i < blocks; ++i) w.append_run(rng() % 2, 1 + rng() % 9);

        std::stringstream plain;
        write_word_plain(plain, w);
        CHECK(read_word_plain(plain) == w);

        std::stringstream rle;
        write_word_rle(rle, w);
        CHECK(read_word_rle(rle) == w);
    }

    std::stringstream s("2:0,2:1,3:0\n");
    CHECK(read_word_rle(s).to_string() == "0011000");
    std::stringstream bad("2:0,oops\n");
    CHECK_THROWS(read_word_rle(bad));
}

TEST_CASE("arbitrary precision survives serialization") {
    // denominators overflow 64 bits well before k = 60 here
    DigitSequence digits;
    for (int i = 0; i < 60; ++i) digits.values.push_back(9);
    auto cs = convergents(digits, 5, 60);
    Json j = to_json(cs);
    CHECK(j.size() == 60);
    std::string q_last = j.back()["q"].get<std::string>();
    CHECK(q_last == to_decimal(cs.back().q));
    CHECK(q_last.size() > 19);  // not representable in any 64-bit field
    CHECK(BigInt(q_last) == cs.back().q);
}

TEST_CASE("report serialization shapes") {
    Json m = to_json(Matrix2{8, 2, 6, 2});
    CHECK(m[0][0] == "8");
    CHECK(m[1][1] == "2");

    BinaryWord w = limit_prefix(DigitSource::arithmetic(2, 1), 2, 50000, Flavor::Dual);
    Json b = to_json(balance_profile(w, 16));
    CHECK(b["rows"].size() == 16);
    CHECK(b["rows"][3]["spread"] == 2);

    Json c = to_json(complexity_closed_form(DigitSource::arithmetic(2, 1), 2, 20, Flavor::Dual));
    CHECK(c["rows"][3]["p"] == 4);
    CHECK(c["rows"][3]["band"] == -1);
    CHECK(c["bands"][1]["s"] == "11");

    Json ls = to_json(left_special(w, 3));
    CHECK(ls["factors"] == Json::array({"000", "001"}));

    auto dens = natext_invariance_check(2, 100000, 10, 7);
    std::stringstream csv;
    write_density_csv(csv, dens);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "bin_lo_x,bin_lo_y,mass_empirical,mass_theoretical");
    std::size_t lines = 0;
    for (std::string line; std::getline(csv, line);) ++lines;
    CHECK(lines == 10 * 10 + 10);
}
