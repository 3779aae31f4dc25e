#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heun_atlas/partitions.hpp"

namespace heun {

/// Line-oriented disk cache "lambda : mu : value" with a versioned header.
/// Directory from HEUN_ATLAS_CACHE; silently disabled when unset.
class CharCache {
  public:
    static std::string cache_path() {
        const char* dir = std::getenv("HEUN_ATLAS_CACHE");
        if (!dir || !*dir) return {};
        return std::string(dir) + "/charcache.txt";
    }

    static std::map<std::pair<std::string, std::string>, Int> load() {
        std::map<std::pair<std::string, std::string>, Int> out;
        std::string path = cache_path();
        if (path.empty()) return out;
        std::ifstream in(path);
        if (!in) return out;
        std::string line;
        if (!std::getline(in, line) || line != kHeader) return out;
        while (std::getline(in, line)) {
            std::istringstream is(line);
            std::string lam, mu, val;
            if (std::getline(is, lam, ':') && std::getline(is, mu, ':') && std::getline(is, val))
                out[{strip(lam), strip(mu)}] = Int(strip(val));
        }
        return out;
    }

    static void store(const std::map<std::pair<std::string, std::string>, Int>& values) {
        std::string path = cache_path();
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) return;
        out << kHeader << "\n";
        for (const auto& [key, v] : values)
            out << key.first << " : " << key.second << " : " << v.get_str() << "\n";
    }

    static constexpr const char* kHeader = "# heun-atlas character cache v1";

  private:
    static std::string strip(const std::string& s) {
        size_t a = s.find_first_not_of(' ');
        size_t b = s.find_last_not_of(' ');
        if (a == std::string::npos) return {};
        return s.substr(a, b - a + 1);
    }
};

/// Symmetric group character values by the Murnaghan-Nakayama border-strip
/// recursion, memoized on (shape, class suffix). All arithmetic exact.
class CharacterEngine {
  public:
    /// chi_lambda(mu), |lambda| = |mu|
    Int character(const IntPartition& lambda, const IntPartition& mu) {
        if (partition_sum(lambda) != partition_sum(mu))
            throw std::invalid_argument("character: partition sizes differ");
        return mn(lambda, sorted_desc(mu), 0);
    }

    /// dimension chi_lambda(1^n) by the hook length formula; independent of the
    /// recursion, used as a cross-check
    static Int hook_dimension(const IntPartition& lambda) {
        int n = partition_sum(lambda);
        std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
        for (int r = 0; r < int(lambda.size()); ++r)
            for (int c = 0; c < lambda[r]; ++c) ++conj[c];
        Int hooks = 1;
        for (int r = 0; r < int(lambda.size()); ++r)
            for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c) + (conj[c] - r) - 1;
        return factorial(unsigned(n)) / hooks;
    }

    size_t memo_size() const { return memo_.size(); }

    /// warm the memo from the disk cache (HEUN_ATLAS_CACHE), if present
    void load_disk_cache() {
        for (const auto& [key, value] : CharCache::load()) {
            try {
                Key k{parse_partition(key.first), parse_partition(key.second)};
                std::lock_guard<std::mutex> lock(mu_);
                memo_.emplace(std::move(k), value);
            } catch (const std::exception&) {
                // stale cache lines are ignored
            }
        }
    }

    void save_disk_cache() {
        std::map<std::pair<std::string, std::string>, Int> out;
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [key, value] : memo_)
            out[{partition_str(key.first), partition_str(key.second)}] = value;
        CharCache::store(out);
    }

  private:
    // beta-set of the shape: strictly decreasing first-column hook lengths
    static std::vector<int> beta_set(const IntPartition& lambda) {
        std::vector<int> beta;
        int m = int(lambda.size());
        for (int i = 0; i < m; ++i) beta.push_back(lambda[i] + (m - 1 - i));
        return beta;  // strictly decreasing
    }
    static IntPartition from_beta(std::vector<int> beta) {
        std::sort(beta.rbegin(), beta.rend());
        IntPartition lam;
        int m = int(beta.size());
        for (int i = 0; i < m; ++i) {
            int part = beta[i] - (m - 1 - i);
            if (part > 0) lam.push_back(part);
        }
        return lam;
    }

    Int mn(const IntPartition& lambda, const IntPartition& mu, size_t at) {
        if (at == mu.size()) return lambda.empty() ? 1 : 0;
        if (lambda.empty()) return 0;
        Key key{lambda, {mu.begin() + long(at), mu.end()}};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        const int t = mu[at];
        Int total = 0;
        std::vector<int> beta = beta_set(lambda);
        for (size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - t;
            if (target < 0) continue;
            bool occupied = false;
            size_t crossings = 0;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (j == i) continue;
                if (beta[j] == target) occupied = true;
                if (beta[j] < beta[i] && beta[j] > target) ++crossings;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[i] = target;
            Int sub = mn(from_beta(nb), mu, at + 1);
            if (crossings & 1) total -= sub;
            else total += sub;
        }
        {
            std::lock_guard<std::mutex> lock(mu_);
            memo_.emplace(std::move(key), total);
        }
        return total;
    }

    using Key = std::pair<IntPartition, IntPartition>;
    std::map<Key, Int> memo_;
    std::mutex mu_;
};

/// Exact number of triples (s0, s1, s_inf) in S_n with the prescribed cycle
/// types and s0 s1 s_inf = id, connected or not:
///   N = (|C1||C2||C3|/n!) * sum_lambda chi(mu1) chi(mu2) chi(mu3) / chi(1^n).
/// The division by n! is performed last and must be exact.
inline Int frobenius_count(const IntPartition& mu1, const IntPartition& mu2, const IntPartition& mu3,
                           CharacterEngine& engine) {
    int n = partition_sum(mu1);
    if (partition_sum(mu2) != n || partition_sum(mu3) != n)
        throw std::invalid_argument("frobenius_count: partition sizes differ");
    Rat sum = 0;
    for (const auto& lambda : partitions_of(n)) {
        Int c1 = engine.character(lambda, mu1);
        if (c1 == 0) continue;
        Int c2 = engine.character(lambda, mu2);
        if (c2 == 0) continue;
        Int c3 = engine.character(lambda, mu3);
        if (c3 == 0) continue;
        sum += Rat(c1 * c2 * c3) / Rat(CharacterEngine::hook_dimension(lambda));
    }
    Rat total = Rat(conjugacy_class_size(mu1) * conjugacy_class_size(mu2) * conjugacy_class_size(mu3)) *
                sum / Rat(factorial(unsigned(n)));
    if (total.get_den() != 1) throw std::logic_error("frobenius_count: non-integral value");
    Int out = total.get_num();
    if (out < 0) throw std::logic_error("frobenius_count: negative value");
    return out;
}

}  // namespace heun
