#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "heun_atlas/rational.hpp"

namespace heun {

/// weakly decreasing positive parts
using IntPartition = std::vector<int>;

inline int partition_sum(const IntPartition& p) {
    int s = 0;
    for (int e : p) s += e;
    return s;
}

inline IntPartition sorted_desc(IntPartition p) {
    std::sort(p.rbegin(), p.rend());
    return p;
}

/// all partitions of n, descending parts, deterministic order
inline std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// partitions of n into exactly k parts
inline std::vector<IntPartition> partitions_exact_parts(int n, int k) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int, int)> rec = [&](int rem, int maxp, int left) {
        if (left == 0) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (rem < left) return;
        for (int p = std::min(rem - (left - 1), maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p, left - 1);
            cur.pop_back();
        }
    };
    rec(n, n, k);
    return out;
}

/// partitions of n avoiding the part value `banned` (0 = no ban), any length
inline std::vector<IntPartition> partitions_avoiding(int n, int banned) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            if (p == banned) continue;
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// order of the centralizer of the class: z = prod k^{m_k} m_k!
inline Int centralizer_order(const IntPartition& p) {
    std::map<int, int> mult;
    for (int e : p) ++mult[e];
    Int z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(unsigned(m));
    }
    return z;
}

inline Int conjugacy_class_size(const IntPartition& p) {
    return factorial(unsigned(partition_sum(p))) / centralizer_order(p);
}

inline std::string partition_str(const IntPartition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << "+";
        os << p[i];
    }
    return os.str();
}

/// accepts "9+1+1+1" and the block form "2^12" / "2^12+3"
inline IntPartition parse_partition(const std::string& s) {
    IntPartition p;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '+')) {
        if (tok.empty()) throw std::invalid_argument("bad partition: " + s);
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            int k = std::stoi(tok.substr(0, caret));
            int n = std::stoi(tok.substr(caret + 1));
            if (k <= 0 || n <= 0) throw std::invalid_argument("bad partition: " + s);
            for (int i = 0; i < n; ++i) p.push_back(k);
        } else {
            int k = std::stoi(tok);
            if (k <= 0) throw std::invalid_argument("bad partition: " + s);
            p.push_back(k);
        }
    }
    return sorted_desc(p);
}

}  // namespace heun
