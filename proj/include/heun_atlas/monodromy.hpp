#pragma once

#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heun_atlas/perm.hpp"

namespace heun {

/// Monodromy triple of a covering: sigma0 * sigma1 * sigma_inf = id.
struct PermTriple {
    Perm sigma0, sigma1, sigma_inf;

    int degree() const { return sigma0.size(); }
    bool product_is_identity() const { return (sigma0 * (sigma1 * sigma_inf)).is_identity(); }
    bool transitive() const { return is_transitive({&sigma0, &sigma1}, degree()); }
};

/// 2 - 2g = (#cycles sigma0 + #cycles sigma1 + #cycles sigma_inf) - D
inline int genus(const PermTriple& t) {
    int c = int(cycles_of(t.sigma0).size() + cycles_of(t.sigma1).size() + cycles_of(t.sigma_inf).size());
    int euler = c - t.degree();
    if ((euler & 1) || euler > 2) throw std::domain_error("invalid triple: Euler count " + std::to_string(euler));
    return (2 - euler) / 2;
}

struct TripleCount {
    Int raw_count;                    // all triples with the given cycle types, connected or not
    long orbit_count = 0;             // connected triples up to simultaneous conjugation
    std::vector<PermTriple> representatives;  // one per orbit
};

constexpr int kMaxEnumerationDegree = 14;

/// Counts permutation triples (s0, s1, (s0 s1)^-1) with the three prescribed
/// cycle types. The class with the smallest size is enumerated against a fixed
/// canonical s0 from the second-smallest class; orbits of the transitive
/// matches under the centralizer of s0 give the covering count up to Mobius
/// equivalence.
inline TripleCount count_triples(std::vector<IntPartition> fibers) {
    if (fibers.size() != 3) throw std::invalid_argument("three fiber partitions required");
    const int n = partition_sum(fibers[0]);
    for (const auto& f : fibers)
        if (partition_sum(f) != n) throw std::invalid_argument("fiber partition sums differ");
    if (n > kMaxEnumerationDegree)
        throw std::invalid_argument("degree " + std::to_string(n) + " beyond enumeration bound");

    // order the roles: enumerate the smallest class, fix s0 in the second smallest
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return conjugacy_class_size(fibers[a]) < conjugacy_class_size(fibers[b]);
    });
    const IntPartition& enum_type = fibers[idx[0]];
    const IntPartition& fixed_type = fibers[idx[1]];
    const IntPartition& third_type = fibers[idx[2]];

    const Perm s0 = canonical_of_type(fixed_type);
    std::vector<Perm> matches;  // s1 candidates (transitive and not)
    long match_count = 0;
    std::vector<char> transitive_flag;
    for_each_of_type(enum_type, [&](const Perm& s1) {
        Perm prod = s0 * s1;
        if (cycle_type(prod) != third_type) return;
        ++match_count;
        matches.push_back(s1);
        transitive_flag.push_back(is_transitive({&s0, &s1}, n) ? 1 : 0);
    });

    TripleCount out;
    out.raw_count = conjugacy_class_size(fixed_type) * Int(match_count);

    // orbits of transitive matches under conjugation by the centralizer of s0
    std::map<Perm, int> index;
    for (size_t i = 0; i < matches.size(); ++i)
        if (transitive_flag[i]) index.emplace(matches[i], int(i));
    std::vector<Perm> gens = centralizer_generators(fixed_type);
    std::set<int> unseen;
    for (auto& [p, i] : index) unseen.insert(i);
    while (!unseen.empty()) {
        int root = *unseen.begin();
        std::queue<int> bfs;
        bfs.push(root);
        unseen.erase(root);
        while (!bfs.empty()) {
            int cur = bfs.front();
            bfs.pop();
            for (const Perm& g : gens) {
                Perm conj = g * matches[cur] * g.inverse();
                auto it = index.find(conj);
                if (it != index.end() && unseen.count(it->second)) {
                    unseen.erase(it->second);
                    bfs.push(it->second);
                }
            }
        }
        ++out.orbit_count;
        // rearrange (s0, match, completion) into the caller's fiber order: all
        // six slot assignments are reachable through rotations (which preserve
        // the identity product) and the inverting reversal.
        std::array<Perm, 3> base = {s0, matches[root], (s0 * matches[root]).inverse()};
        std::array<Perm, 3> rev = {base[2].inverse(), base[1].inverse(), base[0].inverse()};
        PermTriple t;
        bool placed = false;
        for (const auto& variant : {base, rev}) {
            for (int r = 0; r < 3 && !placed; ++r) {
                std::array<Perm, 3> cand = {variant[r % 3], variant[(r + 1) % 3], variant[(r + 2) % 3]};
                if (cycle_type(cand[0]) == fibers[0] && cycle_type(cand[1]) == fibers[1] &&
                    cycle_type(cand[2]) == fibers[2]) {
                    t.sigma0 = cand[0];
                    t.sigma1 = cand[1];
                    t.sigma_inf = cand[2];
                    placed = true;
                }
            }
            if (placed) break;
        }
        if (!placed) throw std::logic_error("representative reconstruction failed");
        out.representatives.push_back(t);
    }
    return out;
}

/// Bipartite map data of a triple: black vertices = cycles of sigma0, white =
/// cycles of sigma1, faces = cycles of sigma_inf, edges = the points.
struct Dessin {
    std::vector<std::vector<int>> black, white, faces;  // cycles, each a point list
    int degree = 0;
    int genus = 0;
};

inline Dessin dessin(const PermTriple& t) {
    Dessin d;
    d.black = cycles_of(t.sigma0);
    d.white = cycles_of(t.sigma1);
    d.faces = cycles_of(t.sigma_inf);
    d.degree = t.degree();
    d.genus = heun::genus(t);
    auto canon = [](std::vector<std::vector<int>>& cs) {
        std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
    };
    canon(d.black);
    canon(d.white);
    canon(d.faces);
    return d;
}

inline IntPartition order_multiset(const std::vector<std::vector<int>>& cs) {
    IntPartition p;
    for (const auto& c : cs) p.push_back(int(c.size()));
    return sorted_desc(p);
}

/// Deterministic DOT rendering: one node per vertex labeled by its order, one
/// edge per covering sheet, face orders in the graph label.
inline std::string emit_dot(const Dessin& d) {
    std::ostringstream os;
    os << "graph dessin {\n";
    std::vector<int> black_of(d.degree), white_of(d.degree);
    for (size_t i = 0; i < d.black.size(); ++i) {
        os << "  black" << i << " [shape=circle,style=filled,fillcolor=black,fontcolor=white,label=\""
           << d.black[i].size() << "\"];\n";
        for (int pt : d.black[i]) black_of[pt] = int(i);
    }
    for (size_t i = 0; i < d.white.size(); ++i) {
        os << "  white" << i << " [shape=circle,label=\"" << d.white[i].size() << "\"];\n";
        for (int pt : d.white[i]) white_of[pt] = int(i);
    }
    for (int pt = 0; pt < d.degree; ++pt)
        os << "  black" << black_of[pt] << " -- white" << white_of[pt] << " [label=\"" << pt << "\"];\n";
    os << "  label=\"faces: " << partition_str(order_multiset(d.faces)) << ", genus " << d.genus << "\";\n";
    os << "}\n";
    return os.str();
}

/// finest block system whose block contains {a, b}; blocks returned as a
/// point -> block id map, or empty when the closure is the full point set
inline std::vector<int> block_closure(const PermTriple& t, int a, int b) {
    int n = t.degree();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::queue<std::pair<int, int>> work;
    auto merge = [&](int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) {
            parent[rx] = ry;
            work.emplace(x, y);
        }
    };
    merge(a, b);
    const Perm* gens[2] = {&t.sigma0, &t.sigma1};
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop();
        for (const Perm* g : gens) merge((*g)(x), (*g)(y));
    }
    std::map<int, int> ids;
    std::vector<int> blk(n);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto [it, fresh] = ids.emplace(r, int(ids.size()));
        blk[i] = it->second;
    }
    if (int(ids.size()) == 1) return {};  // trivial: one block
    return blk;
}

struct BlockSystem {
    std::vector<int> block_of;  // point -> block id
    int blocks = 0;
    int block_size = 0;
};

/// all minimal nontrivial block systems of a transitive triple
inline std::vector<BlockSystem> block_systems(const PermTriple& t) {
    if (!t.transitive()) throw std::invalid_argument("block systems need a transitive action");
    int n = t.degree();
    std::set<std::vector<int>> seen;
    std::vector<BlockSystem> out;
    for (int j = 1; j < n; ++j) {
        auto blk = block_closure(t, 0, j);
        if (blk.empty()) continue;
        int nb = 1 + *std::max_element(blk.begin(), blk.end());
        if (nb == n) continue;  // singletons (cannot happen from a closure) guard
        if (!seen.insert(blk).second) continue;
        BlockSystem s;
        s.block_of = blk;
        s.blocks = nb;
        s.block_size = n / nb;
        out.push_back(std::move(s));
    }
    // keep only minimal systems: none strictly refined by another found system
    std::vector<BlockSystem> minimal;
    for (const auto& s : out) {
        bool is_min = true;
        for (const auto& r : out) {
            if (r.blocks <= s.blocks) continue;  // r finer iff more blocks
            // r refines s if every r-block sits inside one s-block
            std::map<int, int> image;
            bool refines = true;
            for (int i = 0; i < n && refines; ++i) {
                auto [it, fresh] = image.emplace(r.block_of[i], s.block_of[i]);
                if (!fresh && it->second != s.block_of[i]) refines = false;
            }
            if (refines) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(s);
    }
    return minimal;
}

inline PermTriple quotient_action(const PermTriple& t, const BlockSystem& s) {
    auto induce = [&](const Perm& g) {
        Perm q(s.blocks);
        for (int i = 0; i < t.degree(); ++i) q.img[s.block_of[i]] = s.block_of[g(i)];
        return q;
    };
    PermTriple q;
    q.sigma0 = induce(t.sigma0);
    q.sigma1 = induce(t.sigma1);
    q.sigma_inf = induce(t.sigma_inf);
    return q;
}

/// Multisets of indecomposable factor degrees achievable as towers of block
/// systems; {D} alone means the covering is indecomposable.
inline std::set<std::vector<int>> factorization_chains(const PermTriple& t) {
    std::set<std::vector<int>> out;
    auto systems = block_systems(t);
    if (systems.empty()) {
        out.insert({t.degree()});
        return out;
    }
    for (const auto& s : systems) {
        // minimal blocks: the inner factor of degree block_size is indecomposable
        for (auto chain : factorization_chains(quotient_action(t, s))) {
            chain.push_back(s.block_size);
            std::sort(chain.begin(), chain.end());
            out.insert(chain);
        }
    }
    return out;
}

}  // namespace heun
