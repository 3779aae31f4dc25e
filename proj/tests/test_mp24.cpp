#include <catch2/catch_amalgamated.hpp>

#include "heun_atlas/mp24.hpp"

using namespace heun;

namespace {
std::string data_path(const std::string& name) { return std::string(HEUN_ATLAS_DATA_DIR) + "/" + name; }
}

TEST_CASE("199 partitions of 24 into exactly 6 parts") {
    auto ps = enumerate_mp_partitions();
    CHECK(ps.size() == 199);
    for (const auto& p : ps) {
        CHECK(partition_sum(p) == 24);
        CHECK(p.size() == 6);
    }
    CHECK((std::count(ps.begin(), ps.end(), IntPartition{9, 9, 2, 2, 1, 1}) == 1));
    CHECK((std::count(ps.begin(), ps.end(), IntPartition{10, 6, 4, 2, 1, 1}) == 1));
}

TEST_CASE("fixture covers all partitions consistently") {
    auto fixture = load_mp_fixture(data_path("mp24_fixture.txt"));
    int exists = 0, direct = 0, gauge = 0, other = 0, open = 0, zero = 0;
    for (const auto& p : enumerate_mp_partitions()) {
        auto it = fixture.find(p);
        REQUIRE(it != fixture.end());
        const auto& row = it->second;
        if (row.status == "exists") ++exists;
        else if (row.status == "nonexistent-direct") ++direct;
        else if (row.status == "nonexistent-gauge") ++gauge;
        else if (row.status == "nonexistent-other") ++other;
        else if (row.status == "open") ++open;
        if (row.sigma_zero) {
            ++zero;
            CHECK(row.status != "exists");
        }
    }
    CHECK(exists == 112);
    CHECK(direct == 48);
    CHECK(gauge == 14);
    CHECK(other == 1);
    CHECK(open == 24);
    CHECK(zero == 47);
}

TEST_CASE("spot classifications") {
    // 14+2+2+2+2+2 drops to the single point {7}
    auto v = classify_mp_verdict({14, 2, 2, 2, 2, 2});
    REQUIRE(v.status == Verdict::Nonexistent);
    CHECK(v.chain[0].rule == "6.1a");
    CHECK((v.chain[0].profile == std::vector<Rat>{rat(7)}));

    // the footnote partition admits no obstruction
    CHECK(classify_mp_verdict({10, 6, 4, 2, 1, 1}).status == Verdict::Undecided);

    // one of the two partitions the classification leaves open
    CHECK(classify_mp_verdict({7, 7, 6, 2, 1, 1}).status == Verdict::Undecided);

    // gauge-parity case
    auto g = classify_mp_verdict({10, 6, 3, 3, 1, 1}, true);
    REQUIRE(g.status == Verdict::Nonexistent);
    bool gauge = false;
    for (const auto& s : g.chain) gauge = gauge || s.rule == "gauge-parity";
    CHECK(gauge);

    // eisenstein route on the [6]^3 entry
    auto e = classify_mp_verdict({6, 6, 6, 3, 2, 1}, true);
    REQUIRE(e.status == Verdict::Nonexistent);
    bool eis = false;
    for (const auto& s : e.chain) eis = eis || s.rule == "6.3-eisenstein";
    CHECK(eis);
}

TEST_CASE("character sum is a nonnegative integer at degree 24") {
    CharacterEngine eng;
    Int s = frobenius_count(IntPartition(12, 2), IntPartition(8, 3), {19, 1, 1, 1, 1, 1}, eng);
    CHECK(s >= 0);
}
