#pragma once

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "heun_atlas/monodromy.hpp"
#include "heun_atlas/patterns.hpp"
#include "heun_atlas/ratfun.hpp"

namespace heun {

/// Which target value each measured fiber partition landed on.
struct FiberAssignment {
    // assignment[j] = index of the pattern fiber matched by the measured
    // partition over target j (0 -> z=0, 1 -> z=1, 2 -> z=infinity)
    std::array<int, 3> assignment{0, 1, 2};
    std::array<IntPartition, 3> measured;  // over 0, 1, infinity
};

enum class VerifyStatus { Pass, DegreeMismatch, FiberMismatch, NotBelyi };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Pass;
    FiberAssignment fibers;
    std::string detail;
    bool passed() const { return status == VerifyStatus::Pass; }
};

/// Measures the partitions of D over z = 0, 1, infinity from the exact
/// factorization shape of num, num - den and den (with the point x = infinity
/// contributing the degree gap), then matches them against the pattern's
/// fibers in any order. Riemann-Hurwitz saturation of the measured data
/// certifies the map is Belyi without locating critical points.
inline VerifyResult verify_covering(const RatFun& map, const BranchingPattern& pattern) {
    VerifyResult res;
    const int D = map.map_degree();
    if (D != pattern.degree) {
        res.status = VerifyStatus::DegreeMismatch;
        res.detail = "map degree " + std::to_string(D) + " vs pattern degree " +
                     std::to_string(pattern.degree);
        return res;
    }
    auto measure = [&](const Poly& p) {
        IntPartition parts = root_partition(p);
        int d = p.degree();
        if (d < D) parts.push_back(D - d);
        return sorted_desc(parts);
    };
    res.fibers.measured[0] = measure(map.num());
    res.fibers.measured[1] = measure(map.num() - map.den());
    res.fibers.measured[2] = measure(map.den());

    int ram = 0;
    for (const auto& f : res.fibers.measured)
        for (int e : f) ram += e - 1;
    if (ram != 2 * D - 2) {
        res.status = VerifyStatus::NotBelyi;
        res.detail = "Riemann-Hurwitz defect " + std::to_string(2 * D - 2 - ram);
        return res;
    }

    std::array<IntPartition, 3> want;
    for (int i = 0; i < 3; ++i) want[i] = pattern.fibers[i].all_parts();
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& pi : perms) {
        if (res.fibers.measured[0] == want[pi[0]] && res.fibers.measured[1] == want[pi[1]] &&
            res.fibers.measured[2] == want[pi[2]]) {
            res.fibers.assignment = {pi[0], pi[1], pi[2]};
            return res;
        }
    }
    res.status = VerifyStatus::FiberMismatch;
    std::ostringstream os;
    os << "measured 0:" << partition_str(res.fibers.measured[0])
       << " 1:" << partition_str(res.fibers.measured[1])
       << " inf:" << partition_str(res.fibers.measured[2]);
    res.detail = os.str();
    return res;
}

struct CoveringRecord {
    std::string id;
    int degree = 0;
    BranchingPattern pattern;
    RatFun map;
    std::string field;                      // Q, Qw, Qi
    std::vector<std::string> composition;   // factor products, empty = indecomposable
    std::vector<std::string> tilings;       // Coxeter decomposition / divisible tiling labels
    int herfurtner = 0;                     // catalog index when <= 38
    int conjugate_count = 1;
};

inline std::vector<CoveringRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog: " + path);
    std::vector<CoveringRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::istringstream is(line);
        std::string col;
        while (std::getline(is, col, '|')) {
            size_t a = col.find_first_not_of(' ');
            size_t b = col.find_last_not_of(' ');
            cols.push_back(a == std::string::npos ? "" : col.substr(a, b - a + 1));
        }
        if (cols.size() != 7)
            throw std::runtime_error("catalog line " + std::to_string(lineno) + ": want 7 columns");
        try {
            CoveringRecord r;
            r.id = cols[0];
            r.degree = std::stoi(cols[1]);
            r.pattern = parse_pattern(cols[2]);
            r.field = cols[3];
            r.map = RatFun(parse_poly(cols[4]), parse_poly(cols[5]));
            auto md = nlohmann::json::parse(cols[6]);
            if (md.contains("composition") && md["composition"].is_array())
                for (const auto& c : md["composition"]) r.composition.push_back(c.get<std::string>());
            if (md.contains("tilings"))
                for (const auto& t : md["tilings"]) r.tilings.push_back(t.get<std::string>());
            if (md.contains("herfurtner")) r.herfurtner = md["herfurtner"].get<int>();
            if (md.contains("conjugates")) r.conjugate_count = md["conjugates"].get<int>();
            out.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error("catalog line " + std::to_string(lineno) + " (" + cols[0] +
                                     "): " + e.what());
        }
    }
    return out;
}

struct CatalogCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

inline std::vector<CatalogCheck> verify_catalog(const std::vector<CoveringRecord>& records) {
    std::vector<CatalogCheck> out;
    for (const auto& r : records) {
        auto v = verify_covering(r.map, r.pattern);
        out.push_back({r.id, v.passed(), v.detail});
    }
    return out;
}

/// parses a composition string "4*3" / "2*2*2" into its factor multiset
inline std::vector<int> composition_factors(const std::string& s) {
    std::vector<int> f;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '*')) f.push_back(std::stoi(tok));
    std::sort(f.begin(), f.end());
    return f;
}

struct CompositionReport {
    std::string id;
    bool pass = false;
    bool has_blocks = false;
    std::set<std::vector<int>> chains;
    std::string detail;
};

/// Confirms the record's composition claim combinatorially: a representative
/// monodromy triple must admit a block-system tower realizing each claimed
/// factor multiset, and "indecomposable" must coincide with primitivity.
inline CompositionReport check_composition_claim(const CoveringRecord& r) {
    CompositionReport rep;
    rep.id = r.id;
    auto count = count_triples(r.pattern.plain_fibers());
    if (count.representatives.empty()) {
        rep.detail = "no representative triple (pattern unrealizable)";
        return rep;
    }
    const PermTriple& t = count.representatives.front();
    rep.chains = factorization_chains(t);
    rep.has_blocks = !(rep.chains.size() == 1 && *rep.chains.begin() == std::vector<int>{r.degree});
    if (r.composition.empty()) {
        rep.pass = !rep.has_blocks;
        if (!rep.pass) rep.detail = "marked indecomposable but a block system exists";
        return rep;
    }
    if (!rep.has_blocks) {
        rep.detail = "marked composite but no nontrivial block system";
        return rep;
    }
    for (const auto& comp : r.composition) {
        auto want = composition_factors(comp);
        if (!rep.chains.count(want)) {
            rep.detail = "factor multiset " + comp + " not achievable";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace heun
