#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "heun_atlas/patterns.hpp"

using namespace heun;

TEST_CASE("pattern text syntax round-trips") {
    for (const char* s : {"[2]^6=[3]^4=9+1+1+1", "2=2=1+1", "[2]+1=3=2+1", "[3]+2+1=[2]^3=5+1",
                          "[2]^5=[3]^3+1=8+1+1", "3+1=3+1=2+2"}) {
        BranchingPattern p = parse_pattern(s);
        CHECK(parse_pattern(pattern_str(p)) == p);
    }
    CHECK_THROWS_AS(parse_pattern("2=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("2=2=1+2"), std::invalid_argument);  // sums differ
}

TEST_CASE("restriction types and degree bounds") {
    auto types = enumerate_types();
    REQUIRE(types.size() == 10);
    std::map<std::string, int> dmax;
    for (const auto& [t, d] : types) dmax[type_str(t)] = d;
    CHECK(dmax["()"] == 2);
    CHECK(dmax["2"] == 4);
    CHECK(dmax["3"] == 3);
    CHECK(dmax["2,3"] == 12);
    CHECK(dmax["2,4"] == 8);
    CHECK(dmax["2,5"] == 6);
    CHECK(dmax["2,6"] == 6);
    CHECK(dmax["3,3"] == 6);
    CHECK(dmax["3,4"] == 4);
    CHECK(dmax["4,4"] == 4);
}

TEST_CASE("hurwitz defect") {
    CHECK(hurwitz_defect(parse_pattern("[2]^6=[3]^4=9+1+1+1")) == 0);
    CHECK(hurwitz_defect(parse_pattern("2=2=1+1")) == 0);
    CHECK(hurwitz_defect(parse_pattern("2=1+1=1+1")) == 1);  // one branch point off the three fibers
}

TEST_CASE("degree 12 type (2,3) has exactly 15 patterns") {
    auto ps = enumerate_patterns(parse_type("2,3"), 12);
    CHECK(ps.size() == 15);
    BranchingPattern h1 = parse_pattern("[2]^6=[3]^4=9+1+1+1");
    CHECK(std::count(ps.begin(), ps.end(), h1) == 1);
    for (const auto& p : ps) {
        CHECK(hurwitz_defect(p) == 0);
        CHECK(p.unbracketed_count() == 4);
    }
}

TEST_CASE("degree 11 type (2,3) is empty") {
    CHECK(enumerate_patterns(parse_type("2,3"), 11).empty());
}

TEST_CASE("type (4,4) gives the single quartic pattern") {
    auto ps = enumerate_patterns(parse_type("4,4"), 4);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == parse_pattern("[4]=[4]=1+1+1+1"));
}

TEST_CASE("inadmissible type/degree is rejected") {
    CHECK_THROWS_AS(enumerate_patterns(parse_type("2,3"), 13), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_patterns(parse_type("7"), 3), std::invalid_argument);
}

TEST_CASE("per-degree pattern counts match the classification") {
    auto count = [](const char* t, int d) { return enumerate_patterns(parse_type(t), d).size(); };
    CHECK(count("()", 2) == 1);
    CHECK(count("2", 3) == 1);
    CHECK(count("2", 4) == 4);
    CHECK(count("3", 3) == 2);
    CHECK(count("2,3", 10) == 8);
    CHECK(count("2,3", 9) == 7);
    CHECK(count("2,3", 8) == 9);
    CHECK(count("2,3", 7) == 3);
    CHECK(count("2,3", 6) == 7);
    CHECK(count("2,3", 5) == 3);
    CHECK(count("2,3", 4) == 1);
    CHECK(count("2,4", 8) == 5);
    CHECK(count("2,4", 6) == 6);
    CHECK(count("2,4", 5) == 2);
    CHECK(count("2,4", 4) == 2);
    CHECK(count("2,5", 6) == 3);
    CHECK(count("2,5", 5) == 2);
    CHECK(count("2,6", 6) == 2);
    CHECK(count("3,3", 6) == 2);
    CHECK(count("3,3", 4) == 2);
    CHECK(count("3,4", 4) == 1);
    CHECK(count("4,4", 4) == 1);
}

TEST_CASE("89 patterns in total over all types and degrees") {
    long total = 0;
    for (const auto& [t, dmax] : enumerate_types())
        for (int d = 2; d <= dmax; ++d) total += long(enumerate_patterns(t, d).size());
    CHECK(total == 89);
}

TEST_CASE("every enumerated pattern is Belyi-saturated") {
    for (const auto& [t, dmax] : enumerate_types())
        for (int d = 2; d <= dmax; ++d)
            for (const auto& p : enumerate_patterns(t, d)) CHECK(hurwitz_defect(p) == 0);
}

TEST_CASE("heun exponent transport") {
    // base (a, b, g), quadratic pattern: (a, a, 2b, 2g)
    auto h = heun_exponents(parse_pattern("2=2=1+1"));
    CHECK(heun_str(h) == "a,a,2b,2g");

    // base (1/2, 1/3, a), [2]^6=[3]^4=6+3+2+1 -> (a, 2a, 3a, 6a)
    CHECK(heun_str(heun_exponents(parse_pattern("[2]^6=[3]^4=6+3+2+1"))) == "a,2a,3a,6a");

    // [2]^5=[3]^3+1=8+1+1 -> (1/3, a, a, 8a)
    CHECK(heun_str(heun_exponents(parse_pattern("[2]^5=[3]^3+1=8+1+1"))) == "1/3,a,a,8a");

    auto full = heun_exponents(parse_pattern("[2]^6=[3]^4=9+1+1+1"));
    CHECK(full.exponents.size() == 4);
    CHECK(full.dropped.size() == 10);
}

TEST_CASE("bracket/base mismatch is rejected") {
    BranchingPattern p = parse_pattern("[2]^6=[3]^4=9+1+1+1");
    std::array<ExponentForm, 3> bad = {ExponentForm(rat(1, 2)), ExponentForm(rat(1, 2)),
                                       ExponentForm::param(0)};
    CHECK_THROWS_AS(derive_heun_exponents(bad, p), std::invalid_argument);
}

TEST_CASE("exponent form text syntax") {
    CHECK(exponent_str(parse_exponent("2a")) == "2a");
    CHECK(exponent_str(parse_exponent("a+1/2")) == "a+1/2");
    CHECK(exponent_str(parse_exponent("1/3")) == "1/3");
    CHECK(parse_exponent("8a").eval(rat(1, 2), 0, 0) == rat(4));
}
