#include <catch2/catch_amalgamated.hpp>

#include "heun_atlas/lemmas.hpp"

using namespace heun;

namespace {
std::array<Rat, 3> T(long an, long ad, long bn, long bd, long cn, long cd) {
    return {rat(an, ad), rat(bn, bd), rat(cn, cd)};
}
}  // namespace

TEST_CASE("finite monodromy: tetrahedral parity rule") {
    CHECK(finite_monodromy(T(1, 3, 1, 3, 2, 3)).kind == Monodromy::Finite);
    CHECK(finite_monodromy(T(7, 3, 1, 3, 1, 3)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(1, 3, 1, 3, 1, 3)).kind == Monodromy::Infinite);  // Euclidean
    CHECK(finite_monodromy(T(4, 3, 1, 3, 1, 3)).kind == Monodromy::Finite);
}

TEST_CASE("finite monodromy: integer triples") {
    CHECK(finite_monodromy(T(2, 1, 2, 1, 5, 1)).kind == Monodromy::Infinite);  // triangle fails
    CHECK(finite_monodromy(T(1, 1, 1, 1, 1, 1)).kind == Monodromy::Finite);
    CHECK(finite_monodromy(T(2, 1, 2, 1, 3, 1)).kind == Monodromy::Finite);    // sum odd, triangle ok
    CHECK(finite_monodromy(T(2, 1, 2, 1, 4, 1)).kind == Monodromy::Infinite);  // even sum
}

TEST_CASE("finite monodromy: one integer and two half-odd entries") {
    CHECK(finite_monodromy(T(1, 1, 1, 2, 1, 2)).kind == Monodromy::Finite);  // k=0 < 1
    CHECK(finite_monodromy(T(2, 1, 1, 2, 5, 2)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(5, 1, 1, 2, 1, 2)).kind == Monodromy::Finite);
}

TEST_CASE("finite monodromy: half-odd with denominator-4 pair") {
    CHECK(finite_monodromy(T(3, 2, 1, 4, 1, 4)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(1, 2, 1, 4, 1, 4)).kind == Monodromy::Infinite);
}

TEST_CASE("finite monodromy: dihedral and exact Schwarz rows") {
    CHECK(finite_monodromy(T(1, 2, 1, 2, 1, 3)).kind == Monodromy::Finite);   // dihedral
    CHECK(finite_monodromy(T(1, 2, 1, 3, 1, 4)).kind == Monodromy::Finite);   // octahedral
    CHECK(finite_monodromy(T(1, 2, 1, 3, 1, 5)).kind == Monodromy::Finite);   // icosahedral
    CHECK(finite_monodromy(T(1, 2, 1, 3, 1, 6)).kind == Monodromy::Infinite); // Euclidean
    CHECK(finite_monodromy(T(1, 2, 1, 4, 1, 4)).kind == Monodromy::Infinite); // Euclidean
}

TEST_CASE("finite monodromy: icosahedral profiles from the degree-24 search") {
    CHECK(finite_monodromy(T(7, 5, 1, 5, 1, 5)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(6, 5, 2, 5, 1, 5)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(4, 5, 4, 5, 1, 5)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(4, 5, 3, 5, 2, 5)).kind == Monodromy::Infinite);
    // the exact Schwarz row XIII stays finite
    CHECK(finite_monodromy(T(4, 5, 1, 5, 1, 5)).kind == Monodromy::Finite);
}

TEST_CASE("finite monodromy: cyclic family stays undecided or finite") {
    CHECK(finite_monodromy(T(1, 1, 1, 3, 1, 3)).kind == Monodromy::Finite);  // E(1,b,b)
    // contiguous variants must not be declared infinite
    CHECK(finite_monodromy(T(3, 1, 1, 3, 1, 3)).kind != Monodromy::Infinite);
}

TEST_CASE("mixed integer profiles from the degree-24 lists are infinite") {
    CHECK(finite_monodromy(T(8, 3, 2, 1, 1, 3)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(7, 3, 2, 1, 2, 3)).kind == Monodromy::Infinite);
    CHECK(finite_monodromy(T(2, 1, 5, 3, 4, 3)).kind == Monodromy::Infinite);
    // but the H3 specialization profile admits a cyclic equation: no verdict
    CHECK(finite_monodromy(T(2, 1, 2, 3, 1, 3)).kind == Monodromy::Undecided);
}

TEST_CASE("isogeny counts") {
    CHECK(isogeny_count(Lattice::Gaussian, 3) == 0);
    CHECK(isogeny_count(Lattice::Gaussian, 5) == 2);
    CHECK(isogeny_count(Lattice::Gaussian, 6) == 0);
    CHECK(isogeny_count(Lattice::Eisenstein, 10) == 0);
    CHECK(isogeny_count(Lattice::Eisenstein, 7) == 2);
    CHECK(isogeny_count(Lattice::Eisenstein, 12) == 1);
    CHECK(isogeny_count(Lattice::Eisenstein, 24) == 0);
    for (long d = 3; d <= 1000; d += 4) CHECK(isogeny_count(Lattice::Gaussian, d) == 0);
    for (long d = 2; d <= 1000; d += 3) CHECK(isogeny_count(Lattice::Eisenstein, d) == 0);
}

TEST_CASE("lemma 6.1 on tiny profiles") {
    SingularityProfile p;
    p.base = T(1, 2, 1, 3, 1, 2);
    p.points = {{rat(3), true, false}};
    CHECK(lemma_logpoint(p).status == Verdict::Nonexistent);
    CHECK(lemma_logpoint(p).chain[0].rule == "6.1a");

    p.points = {{rat(1, 2), false, false}, {rat(7, 2), false, false}};
    CHECK(lemma_logpoint(p).status == Verdict::Nonexistent);
    CHECK(lemma_logpoint(p).chain[0].rule == "6.1b");

    p.points = {{rat(1, 3), false, false}, {rat(1, 3), false, false}};
    CHECK(lemma_logpoint(p).status == Verdict::Undecided);
}

TEST_CASE("specialization drop rules") {
    auto p = parse_pattern("[2]^6=[3]^4=7+3+1+1");
    auto prof = specialize(p, T(1, 2, 1, 3, 1, 3));
    CHECK((prof.all_diffs() == std::vector<Rat>{rat(1, 3), rat(1, 3), rat(7, 3)}));
    CHECK(!prof.any_log_risk());

    // alpha = 1 without the E(1,b,b) form: unramified points stay (possibly log)
    auto h1 = parse_pattern("[2]^6=[3]^4=9+1+1+1");
    auto prof1 = specialize(h1, T(1, 2, 1, 3, 1, 1));
    CHECK(prof1.points.size() == 4);
    CHECK(prof1.any_log_risk());

    // E(1,b,b): difference-1 points drop, multiples become apparent
    auto n23 = parse_pattern("[2]^3=[4]+2=4+1+1");
    auto prof2 = specialize(n23, T(1, 2, 1, 2, 1, 1));
    CHECK((prof2.all_diffs() == std::vector<Rat>{rat(2), rat(4)}));
    CHECK(!prof2.any_log_risk());
}

TEST_CASE("nonexistence search settles the unrealizable table rows") {
    struct Row {
        const char* pattern;
        const char* table_rule;
    };
    const Row rows[] = {
        {"[2]^6=[3]^4=7+3+1+1", "6.2a"},  // N1
        {"[2]^6=[3]^4=7+2+2+1", "6.1b"},  // N2
        {"[2]^6=[3]^4=6+4+1+1", "6.2b"},  // N3
        {"[2]^6=[3]^4=6+2+2+2", "6.1a"},  // N4
        {"[2]^6=[3]^4=5+4+2+1", "6.2d"},  // N5
        {"[2]^5=[3]^3+1=6+3+1", "6.3-eisenstein"},  // N10
        {"[2]^4=[3]^2+1+1=5+3", "6.2a"},  // N19
        {"[2]^4=[4]^2=5+1+1+1", "6.2c"},  // N21
        {"[2]^3=[4]+2=4+1+1", "6.1b"},    // N23
        {"[2]^2=3+1=2+2", "6.1a"},        // N27
    };
    for (const auto& row : rows) {
        auto verdict = nonexistence_search(parse_pattern(row.pattern), /*exhaustive=*/true);
        INFO(row.pattern);
        REQUIRE(verdict.status == Verdict::Nonexistent);
        bool found = false;
        for (const auto& step : verdict.chain) found = found || step.rule == row.table_rule;
        CHECK(found);
        for (const auto& step : verdict.chain)
            CHECK(replay_certificate(step, parse_pattern(row.pattern).degree));
    }
}

TEST_CASE("the realizable flagship stays undecided") {
    CHECK(nonexistence_search(parse_pattern("[2]^6=[3]^4=9+1+1+1")).status == Verdict::Undecided);
}

TEST_CASE("certificate chains are deterministic") {
    auto v1 = nonexistence_search(parse_pattern("[2]^6=[3]^4=7+3+1+1"));
    auto v2 = nonexistence_search(parse_pattern("[2]^6=[3]^4=7+3+1+1"));
    REQUIRE(v1.chain.size() == 1);
    CHECK(v1.chain[0].rule == v2.chain[0].rule);
    CHECK(v1.chain[0].profile == v2.chain[0].profile);
    CHECK(v1.chain[0].rule == "6.2a");  // first certificate matches the table
}

TEST_CASE("gauge contiguity test fires on the validated profile shapes") {
    // 10+6+[3]^2+1+1 at k=3 over E(1/2,1/3,1/3)
    SingularityProfile p;
    p.base = T(1, 2, 1, 3, 1, 3);
    p.degree = 24;
    p.points = {{rat(10, 3), false, false}, {rat(2), true, false},
                {rat(1, 3), false, false}, {rat(1, 3), false, false}};
    auto v = gauge_contiguity_test(p);
    CHECK(v.status == Verdict::Nonexistent);
    CHECK(v.chain[0].rule == "gauge-parity");

    // profile with no apparent singularities: no obstruction
    SingularityProfile q;
    q.base = T(1, 2, 1, 3, 1, 3);
    q.points = {{rat(1, 3), false, false}, {rat(1, 3), false, false}, {rat(2, 3), false, false}};
    CHECK(gauge_contiguity_test(q).status == Verdict::Undecided);
}
