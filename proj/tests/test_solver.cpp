#include <catch2/catch_amalgamated.hpp>

#include "heun_atlas/monodromy.hpp"
#include "heun_atlas/solver.hpp"

using namespace heun;

TEST_CASE("quadratic pattern solves to the square map") {
    auto sols = solve_belyi(parse_pattern("2=2=1+1"));
    REQUIRE(sols.size() == 1);
    CHECK(verify_covering(sols[0].map, parse_pattern("2=2=1+1")).passed());
}

TEST_CASE("cubic patterns") {
    auto s1 = solve_belyi(parse_pattern("3=2+1=2+1"));
    REQUIRE(s1.size() == 1);
    CHECK(verify_covering(s1[0].map, parse_pattern("3=2+1=2+1")).passed());
    CHECK(s1[0].field == "Q");

    auto s2 = solve_belyi(parse_pattern("3=3=1+1+1"));
    REQUIRE(s2.size() == 1);
}

TEST_CASE("quartic solutions match the catalog up to Mobius maps") {
    auto s47 = solve_belyi(parse_pattern("3+1=3+1=2+2"));
    REQUIRE(s47.size() == 1);
    CHECK(verify_covering(s47[0].map, parse_pattern("3+1=3+1=2+2")).passed());
}

TEST_CASE("unrealizable quartic pattern has no solution") {
    CHECK(solve_belyi(parse_pattern("[2]^2=3+1=2+2")).empty());
}

TEST_CASE("solver rejects degrees above six") {
    CHECK_THROWS_AS(solve_belyi(parse_pattern("[2]^3+1=[3]^2+1=6+1")), std::invalid_argument);
}

TEST_CASE("every degree <= 4 pattern yields orbit-count many solutions") {
    std::set<std::vector<IntPartition>> seen;
    for (const auto& [t, dmax] : enumerate_types()) {
        for (int d = 2; d <= std::min(dmax, 4); ++d) {
            for (const auto& marked : enumerate_patterns(t, d)) {
                auto fibers = marked.plain_fibers();
                if (!seen.insert(fibers).second) continue;
                BranchingPattern p;
                p.degree = d;
                for (int i = 0; i < 3; ++i) p.fibers[i] = Fiber{0, 0, fibers[i]};
                p.canonicalize();
                long orbits = count_triples(fibers).orbit_count;
                auto sols = solve_belyi(p);
                INFO(pattern_str(p));
                CHECK(long(sols.size()) == orbits);
                for (const auto& s : sols) CHECK(verify_covering(s.map, p).passed());
            }
        }
    }
}
