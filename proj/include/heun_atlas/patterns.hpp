#pragma once

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "heun_atlas/exponents.hpp"
#include "heun_atlas/partitions.hpp"

namespace heun {

/// Restricted exponent differences 1/k of the base hypergeometric equation.
/// The admissible types are (), (2), (3), (2,3), (2,4), (2,5), (2,6), (3,3),
/// (3,4), (4,4); types (1) and (2,2) lead to cyclic/dihedral monodromy and
/// are excluded from this classification.
struct RestrictionType {
    std::vector<int> ks;  // sorted ascending, size 0..2

    int free_params() const { return 3 - int(ks.size()); }
    friend bool operator==(const RestrictionType& x, const RestrictionType& y) { return x.ks == y.ks; }
    friend bool operator<(const RestrictionType& x, const RestrictionType& y) { return x.ks < y.ks; }
};

inline std::string type_str(const RestrictionType& t) {
    if (t.ks.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < t.ks.size(); ++i) {
        if (i) os << ",";
        os << t.ks[i];
    }
    return os.str();
}

inline RestrictionType parse_type(const std::string& s) {
    RestrictionType t;
    if (s.empty() || s == "()" || s == "-" || s == "none") return t;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) t.ks.push_back(std::stoi(tok));
    std::sort(t.ks.begin(), t.ks.end());
    return t;
}

/// One fiber of a branching pattern: bracketed parts (all equal to `mark`,
/// forced ordinary/irrelevant) plus plain parts carrying Heun singularities.
struct Fiber {
    int mark = 0;        // 0 when the fiber is unrestricted
    int bracketed = 0;   // number of bracketed parts, each equal to mark
    IntPartition plain;  // descending

    int sum() const { return mark * bracketed + partition_sum(plain); }
    IntPartition all_parts() const {
        IntPartition p = plain;
        for (int i = 0; i < bracketed; ++i) p.push_back(mark);
        return sorted_desc(p);
    }
    auto key() const { return std::make_tuple(mark == 0 ? 1 : 0, mark, bracketed, plain); }
    friend bool operator==(const Fiber& x, const Fiber& y) { return x.key() == y.key(); }
    friend bool operator<(const Fiber& x, const Fiber& y) { return x.key() < y.key(); }
};

struct BranchingPattern {
    int degree = 0;
    std::array<Fiber, 3> fibers;  // canonical: marked fibers first (mark ascending), then plain

    void canonicalize() {
        for (auto& f : fibers) f.plain = sorted_desc(f.plain);
        std::sort(fibers.begin(), fibers.end());
    }
    int unbracketed_count() const {
        int n = 0;
        for (const auto& f : fibers) n += int(f.plain.size());
        return n;
    }
    /// the three fiber partitions with bracket marks stripped, sorted
    std::vector<IntPartition> plain_fibers() const {
        std::vector<IntPartition> v;
        for (const auto& f : fibers) v.push_back(f.all_parts());
        std::sort(v.begin(), v.end());
        return v;
    }
    friend bool operator==(const BranchingPattern& x, const BranchingPattern& y) {
        return x.degree == y.degree && x.fibers == y.fibers;
    }
    friend bool operator<(const BranchingPattern& x, const BranchingPattern& y) {
        return std::tie(x.degree, x.fibers) < std::tie(y.degree, y.fibers);
    }
};

inline std::string fiber_str(const Fiber& f) {
    std::ostringstream os;
    if (f.bracketed > 0) {
        os << "[" << f.mark << "]";
        if (f.bracketed > 1) os << "^" << f.bracketed;
    }
    for (size_t i = 0; i < f.plain.size(); ++i) {
        if (i || f.bracketed) os << "+";
        os << f.plain[i];
    }
    return os.str();
}

inline std::string pattern_str(const BranchingPattern& p) {
    return fiber_str(p.fibers[0]) + "=" + fiber_str(p.fibers[1]) + "=" + fiber_str(p.fibers[2]);
}

/// "[2]^6=[3]^4=9+1+1+1", "[3]+2+1", "2=2=1+1"
inline BranchingPattern parse_pattern(const std::string& s) {
    std::vector<std::string> fs;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '=')) fs.push_back(tok);
    if (fs.size() != 3) throw std::invalid_argument("pattern needs three fibers: " + s);
    BranchingPattern p;
    for (int i = 0; i < 3; ++i) {
        Fiber f;
        std::istringstream fis(fs[i]);
        std::string part;
        while (std::getline(fis, part, '+')) {
            if (part.empty()) throw std::invalid_argument("bad pattern: " + s);
            if (part.front() == '[') {
                auto close = part.find(']');
                if (close == std::string::npos) throw std::invalid_argument("bad pattern: " + s);
                int k = std::stoi(part.substr(1, close - 1));
                int n = 1;
                std::string rest = part.substr(close + 1);
                if (!rest.empty()) {
                    if (rest[0] != '^') throw std::invalid_argument("bad pattern: " + s);
                    n = std::stoi(rest.substr(1));
                }
                if (f.bracketed > 0 && f.mark != k)
                    throw std::invalid_argument("mixed bracket marks in one fiber: " + s);
                f.mark = k;
                f.bracketed += n;
            } else {
                auto caret = part.find('^');
                if (caret != std::string::npos) {
                    int k = std::stoi(part.substr(0, caret));
                    int cnt = std::stoi(part.substr(caret + 1));
                    for (int j = 0; j < cnt; ++j) f.plain.push_back(k);
                } else {
                    f.plain.push_back(std::stoi(part));
                }
            }
        }
        p.fibers[i] = f;
    }
    p.degree = p.fibers[0].sum();
    for (const auto& f : p.fibers)
        if (f.sum() != p.degree) throw std::invalid_argument("fiber sums differ: " + s);
    p.canonicalize();
    return p;
}

/// 2(D-1) minus the total ramification over the three fibers; 0 means the
/// pattern saturates Riemann-Hurwitz (Belyi), a positive value counts forced
/// branch points away from the three base points.
inline int hurwitz_defect(const BranchingPattern& p) {
    int ram = 0;
    for (const auto& f : p.fibers)
        for (int e : f.all_parts()) ram += e - 1;
    return 2 * (p.degree - 1) - ram;
}

/// Admissible (type, max degree) pairs. Type () admits only the quadratic
/// covering; one restriction allows (2)->{3,4}, (3)->{3}; two restrictions
/// give the seven bounded families.
inline std::vector<std::pair<RestrictionType, int>> enumerate_types() {
    auto T = [](std::vector<int> ks) { return RestrictionType{std::move(ks)}; };
    return {
        {T({}), 2},     {T({2}), 4},    {T({3}), 3},    {T({2, 3}), 12}, {T({2, 4}), 8},
        {T({2, 5}), 6}, {T({2, 6}), 6}, {T({3, 3}), 6}, {T({3, 4}), 4},  {T({4, 4}), 4},
    };
}

inline std::optional<int> type_max_degree(const RestrictionType& t) {
    for (const auto& [type, dmax] : enumerate_types())
        if (type == t) return dmax;
    return std::nullopt;
}

/// All branching patterns for the given type and degree: Hurwitz-saturated
/// triples with exactly four unbracketed parts, every bracketed part equal to
/// the fiber's restriction, and no plain part equal to it (such a point would
/// be forced ordinary). Deduplicated as unordered marked fiber triples.
inline std::vector<BranchingPattern> enumerate_patterns(const RestrictionType& type, int D) {
    auto dmax = type_max_degree(type);
    if (!dmax) throw std::invalid_argument("unknown restriction type " + type_str(type));
    if (D < 2 || D > *dmax)
        throw std::invalid_argument("degree " + std::to_string(D) + " inadmissible for type " + type_str(type));

    std::set<BranchingPattern> out;
    auto emit = [&](std::array<Fiber, 3> fibers) {
        BranchingPattern p;
        p.degree = D;
        p.fibers = fibers;
        p.canonicalize();
        out.insert(p);
    };

    const int m = int(type.ks.size());
    if (m == 0) {
        if (D == 2) emit({Fiber{0, 0, {2}}, Fiber{0, 0, {2}}, Fiber{0, 0, {1, 1}}});
    } else if (m == 1) {
        const int k = type.ks[0];
        const int b = D - 2;
        if (b >= 1 && k * b <= D) {
            for (const auto& rest : partitions_avoiding(D - k * b, k)) {
                int u1 = int(rest.size());
                for (int u2 = 1; u2 <= 4 - u1 - 1; ++u2) {
                    int u3 = 4 - u1 - u2;
                    for (const auto& f2 : partitions_exact_parts(D, u2))
                        for (const auto& f3 : partitions_exact_parts(D, u3))
                            emit({Fiber{k, b, rest}, Fiber{0, 0, f2}, Fiber{0, 0, f3}});
                }
            }
        }
    } else {
        const int k = type.ks[0], l = type.ks[1];
        for (int bk = 1; k * bk <= D; ++bk) {
            int bl = D - 2 - bk;
            if (bl < 1 || l * bl > D) continue;
            for (const auto& restk : partitions_avoiding(D - k * bk, k)) {
                for (const auto& restl : partitions_avoiding(D - l * bl, l)) {
                    int u3 = 4 - int(restk.size()) - int(restl.size());
                    if (u3 < 1) continue;
                    for (const auto& f3 : partitions_exact_parts(D, u3))
                        emit({Fiber{k, bk, restk}, Fiber{l, bl, restl}, Fiber{0, 0, f3}});
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

/// Base exponent-difference forms in fiber order: restricted fibers carry the
/// constant 1/k; free fibers get the parameters a, b, g ordered by descending
/// part count (ties by ascending partition), matching the classification's
/// naming convention.
inline std::array<ExponentForm, 3> base_forms(const BranchingPattern& p) {
    std::array<ExponentForm, 3> base;
    std::vector<int> free_idx;
    for (int i = 0; i < 3; ++i) {
        if (p.fibers[i].mark > 0)
            base[i] = ExponentForm(rat(1, p.fibers[i].mark));
        else
            free_idx.push_back(i);
    }
    std::sort(free_idx.begin(), free_idx.end(), [&](int i, int j) {
        const auto &fi = p.fibers[i].plain, &fj = p.fibers[j].plain;
        if (fi.size() != fj.size()) return fi.size() > fj.size();
        return fi < fj;
    });
    for (size_t n = 0; n < free_idx.size(); ++n) base[free_idx[n]] = ExponentForm::param(int(n));
    return base;
}

struct HeunExponents {
    std::vector<ExponentForm> exponents;            // exactly 4, sorted
    std::vector<std::pair<int, int>> dropped;       // (fiber index, part) for bracketed parts
};

/// Transports the base exponent differences along the pattern: an unbracketed
/// part e over the form f contributes e*f; bracketed parts become ordinary or
/// irrelevant points and are reported in `dropped`. The base form over a
/// marked fiber must be the matching constant 1/k.
inline HeunExponents derive_heun_exponents(const std::array<ExponentForm, 3>& base,
                                           const BranchingPattern& p) {
    HeunExponents out;
    for (int i = 0; i < 3; ++i) {
        const Fiber& f = p.fibers[i];
        if (f.bracketed > 0) {
            ExponentForm want(rat(1, f.mark));
            if (!(base[i] == want))
                throw std::invalid_argument("bracketed fiber needs base form 1/" + std::to_string(f.mark));
            for (int n = 0; n < f.bracketed; ++n) out.dropped.emplace_back(i, f.mark);
        }
        for (int e : f.plain) out.exponents.push_back(e * base[i]);
    }
    if (out.exponents.size() != 4)
        throw std::invalid_argument("pattern does not have exactly 4 unbracketed parts");
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

inline HeunExponents heun_exponents(const BranchingPattern& p) {
    return derive_heun_exponents(base_forms(p), p);
}

inline std::string heun_str(const HeunExponents& h) {
    std::ostringstream os;
    for (size_t i = 0; i < h.exponents.size(); ++i) {
        if (i) os << ",";
        os << exponent_str(h.exponents[i]);
    }
    return os.str();
}

}  // namespace heun
