#include <catch2/catch_amalgamated.hpp>

#include "heun_atlas/monodromy.hpp"
#include "heun_atlas/patterns.hpp"

using namespace heun;

namespace {
std::vector<IntPartition> fibers(const char* a, const char* b, const char* c) {
    return {parse_partition(a), parse_partition(b), parse_partition(c)};
}
}  // namespace

TEST_CASE("conjugacy class enumeration sizes") {
    long n = 0;
    for_each_of_type({2, 2, 1}, [&](const Perm&) { ++n; });
    CHECK(n == 15);  // 5!/(2^2 2! 1) = 15
    CHECK((conjugacy_class_size({2, 2, 1}) == 15));
    n = 0;
    for_each_of_type({3, 1}, [&](const Perm& p) {
        ++n;
        CHECK((cycle_type(p) == IntPartition{3, 1}));
    });
    CHECK(n == 8);
}

TEST_CASE("small triple counts by brute force agreement") {
    // n=2: ((2),(2),(1,1)) -> one triple
    auto c = count_triples(fibers("2", "2", "1+1"));
    CHECK(c.raw_count == 1);
    CHECK(c.orbit_count == 1);

    // parity obstruction
    CHECK(count_triples(fibers("2", "2", "2")).raw_count == 0);
}

TEST_CASE("representatives satisfy the triple axioms") {
    auto c = count_triples(fibers("2^2", "3+1", "3+1"));
    REQUIRE(c.orbit_count >= 1);
    for (const auto& t : c.representatives) {
        CHECK(t.product_is_identity());
        CHECK(t.transitive());
        CHECK(cycle_type(t.sigma0) == parse_partition("2^2"));
        CHECK(cycle_type(t.sigma1) == parse_partition("3+1"));
        CHECK(cycle_type(t.sigma_inf) == parse_partition("3+1"));
        CHECK(genus(t) == 0);
    }
}

TEST_CASE("orbit counts for the crowded degree 12 pattern") {
    auto c = count_triples(fibers("2^6", "3^4", "9+1+1+1"));
    CHECK(c.orbit_count == 1);
}

TEST_CASE("unrealizable degree 12 pattern") {
    auto c = count_triples(fibers("2^6", "3^4", "7+3+1+1"));
    CHECK(c.orbit_count == 0);
}

TEST_CASE("conjugate pairs are counted twice") {
    CHECK(count_triples(fibers("2+2+2+1", "3+3+1", "6+1")).orbit_count == 2);  // degree 7
    CHECK(count_triples(fibers("4+1", "4+1", "2+2+1")).orbit_count == 2);      // degree 5
}

TEST_CASE("orbit count is independent of the fiber order") {
    auto f = fibers("2^2+1", "3+2", "4+1");
    long base = count_triples(f).orbit_count;
    std::sort(f.begin(), f.end());
    do {
        CHECK(count_triples(f).orbit_count == base);
    } while (std::next_permutation(f.begin(), f.end()));
}

TEST_CASE("genus computation") {
    PermTriple t;
    t.sigma0 = Perm(2);
    t.sigma0.img = {1, 0};
    t.sigma1 = Perm(2);
    t.sigma_inf = t.sigma0;  // (12) * id * (12) = id
    CHECK(t.product_is_identity());
    CHECK(genus(t) == 0);

    PermTriple u;  // three 3-cycles on 3 points: genus 1
    u.sigma0 = Perm(3);
    u.sigma0.img = {1, 2, 0};
    u.sigma1 = u.sigma0;
    u.sigma_inf = u.sigma0;
    CHECK(u.product_is_identity());
    CHECK(genus(u) == 1);
}

TEST_CASE("dessin order multisets match the triple") {
    auto c = count_triples(fibers("2^6", "3^4", "9+1+1+1"));
    REQUIRE(c.orbit_count == 1);
    Dessin d = dessin(c.representatives[0]);
    CHECK(order_multiset(d.black) == parse_partition("2^6"));
    CHECK(order_multiset(d.white) == parse_partition("3^4"));
    CHECK(order_multiset(d.faces) == parse_partition("9+1+1+1"));
    CHECK(d.genus == 0);
    CHECK(d.degree == 12);

    std::string dot = emit_dot(d);
    CHECK(dot.find("black0") != std::string::npos);
    CHECK(dot.find("white0") != std::string::npos);
    CHECK(dot == emit_dot(dessin(c.representatives[0])));  // deterministic
}

TEST_CASE("H32 dessin: one black vertex of order 2, two white, one face of order 2") {
    auto c = count_triples(fibers("2", "1+1", "2"));
    REQUIRE(c.orbit_count == 1);
    Dessin d = dessin(c.representatives[0]);
    CHECK((order_multiset(d.black) == IntPartition{2}));
    CHECK((order_multiset(d.white) == IntPartition{1, 1}));
    CHECK((order_multiset(d.faces) == IntPartition{2}));
}

TEST_CASE("block systems and factorization chains") {
    // H31-style degree 4: blocks of size 2 exist
    auto c4 = count_triples(fibers("2+2", "2+2", "2+2"));
    REQUIRE(c4.orbit_count == 1);
    auto systems = block_systems(c4.representatives[0]);
    CHECK(!systems.empty());
    CHECK((factorization_chains(c4.representatives[0]).count({2, 2}) == 1));

    // prime degree 3: none
    auto c3 = count_triples(fibers("3", "2+1", "2+1"));
    REQUIRE(c3.orbit_count == 1);
    CHECK(block_systems(c3.representatives[0]).empty());
    CHECK((*factorization_chains(c3.representatives[0]).begin() == std::vector<int>{3}));

    // H1: chain realizing 12 = 4*3
    auto c12 = count_triples(fibers("2^6", "3^4", "9+1+1+1"));
    auto chains = factorization_chains(c12.representatives[0]);
    CHECK((chains.count({3, 4}) == 1));
}

TEST_CASE("degree cap is enforced") {
    CHECK_THROWS_AS(count_triples(fibers("15", "15", "15")), std::invalid_argument);
}
