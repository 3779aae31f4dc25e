#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "heun_atlas/partitions.hpp"

namespace heun {

/// Permutation of {0..n-1} as an image table.
struct Perm {
    std::vector<int> img;

    explicit Perm(int n = 0) : img(n) { std::iota(img.begin(), img.end(), 0); }
    int size() const { return int(img.size()); }
    int operator()(int i) const { return img[i]; }

    friend Perm operator*(const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
        Perm r(p.size());
        for (int i = 0; i < p.size(); ++i) r.img[i] = p.img[q.img[i]];
        return r;
    }
    Perm inverse() const {
        Perm r(size());
        for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
        return r;
    }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    friend bool operator==(const Perm& p, const Perm& q) { return p.img == q.img; }
    friend bool operator<(const Perm& p, const Perm& q) { return p.img < q.img; }
};

inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> cs;
    std::vector<bool> seen(p.size(), false);
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            c.push_back(j);
        }
        cs.push_back(std::move(c));
    }
    return cs;
}

inline IntPartition cycle_type(const Perm& p) {
    IntPartition t;
    for (const auto& c : cycles_of(p)) t.push_back(int(c.size()));
    return sorted_desc(t);
}

/// canonical permutation of the given cycle type: cycles laid out left to right
inline Perm canonical_of_type(const IntPartition& type) {
    Perm p(partition_sum(type));
    int pos = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p.img[pos + i] = pos + (i + 1) % len;
        pos += len;
    }
    return p;
}

/// Enumerates every permutation of the given cycle type on {0..n-1};
/// visit(const Perm&) is called once per element of the conjugacy class.
inline void for_each_of_type(const IntPartition& type, const std::function<void(const Perm&)>& visit) {
    int n = partition_sum(type);
    std::map<int, int> remaining;  // cycle length -> count still to place
    for (int len : type) ++remaining[len];
    Perm p(n);
    std::vector<bool> used(n, false);

    std::function<void(int)> place = [&](int placed) {
        if (placed == n) {
            visit(p);
            return;
        }
        int start = 0;
        while (used[start]) ++start;
        used[start] = true;
        for (auto& [len, cnt] : remaining) {
            if (cnt == 0) continue;
            --cnt;
            std::vector<int> cyc = {start};  // cycle buffer local to this level
            std::function<void(int)> extend = [&](int have) {
                if (have == len) {
                    for (int i = 0; i < len; ++i) p.img[cyc[i]] = cyc[(i + 1) % len];
                    place(placed + len);
                    return;
                }
                for (int v = start + 1; v < n; ++v) {
                    if (used[v]) continue;
                    used[v] = true;
                    cyc.push_back(v);
                    extend(have + 1);
                    cyc.pop_back();
                    used[v] = false;
                }
            };
            extend(1);
            ++cnt;
        }
        used[start] = false;
    };
    place(0);
}

/// Generators of the centralizer of a permutation laid out by canonical_of_type:
/// one rotation per cycle and one swap per adjacent pair of equal-length cycles.
inline std::vector<Perm> centralizer_generators(const IntPartition& type) {
    int n = partition_sum(type);
    std::vector<Perm> gens;
    std::vector<std::pair<int, int>> spans;  // (start, len)
    int pos = 0;
    for (int len : type) {
        spans.emplace_back(pos, len);
        if (len > 1) {
            Perm rot(n);
            for (int i = 0; i < len; ++i) rot.img[pos + i] = pos + (i + 1) % len;
            gens.push_back(rot);
        }
        pos += len;
    }
    for (size_t i = 0; i + 1 < spans.size(); ++i) {
        if (spans[i].second != spans[i + 1].second) continue;
        Perm swp(n);
        int len = spans[i].second;
        for (int j = 0; j < len; ++j) {
            swp.img[spans[i].first + j] = spans[i + 1].first + j;
            swp.img[spans[i + 1].first + j] = spans[i].first + j;
        }
        gens.push_back(swp);
    }
    return gens;
}

/// union-find transitivity of the group generated by the given permutations
inline bool is_transitive(const std::vector<const Perm*>& gens, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int comps = n;
    for (const Perm* g : gens)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find((*g)(i));
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    return comps == 1;
}

}  // namespace heun
