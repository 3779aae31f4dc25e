#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heun_atlas/charcount.hpp"
#include "heun_atlas/lemmas.hpp"

namespace heun {

/// Branch data 2^12 = 3^8 = P of the degree-24 semi-stable classification.
struct MPRecord {
    IntPartition partition;      // P: exactly 6 parts summing to 24
    Int sigma_raw;               // triple count for (2^12, 3^8, P), connected or not
    Verdict verdict;             // aggregated over the specialization routes
    std::string paper_status;    // fixture: exists / nonexistent-direct / -gauge / -other / open
    bool sigma_zero_fixture = false;
};

/// all partitions of 24 into exactly 6 parts, descending, deterministic order
inline std::vector<IntPartition> enumerate_mp_partitions() { return partitions_exact_parts(24, 6); }

inline BranchingPattern mp_pattern(const IntPartition& P) {
    BranchingPattern p;
    p.degree = 24;
    p.fibers[0] = Fiber{2, 12, {}};
    p.fibers[1] = Fiber{3, 8, {}};
    p.fibers[2] = Fiber{0, 0, P};
    p.canonicalize();
    return p;
}

/// Runs the specialization scheme on one partition: for k = 1..6 the base
/// (1/2, 1/3, 1/k) sits over the three fibers, parts equal to k drop, integer
/// multiples become apparent, and the lemma rules plus the gauge test decide.
inline Verdict classify_mp_verdict(const IntPartition& P, bool exhaustive = false) {
    BranchingPattern pat = mp_pattern(P);
    Verdict out;
    for (int k = 1; k <= 6; ++k) {
        std::array<Rat, 3> values;
        for (int i = 0; i < 3; ++i) {
            if (pat.fibers[i].mark == 2) values[i] = rat(1, 2);
            else if (pat.fibers[i].mark == 3) values[i] = rat(1, 3);
            else values[i] = rat(1, k);
        }
        SingularityProfile prof = specialize(pat, values);
        if (auto step = decide_specialization(prof, /*with_gauge=*/true)) {
            out.status = Verdict::Nonexistent;
            out.chain.push_back(*step);
            if (!exhaustive) return out;
        }
    }
    return out;
}

struct MPFixtureRow {
    std::string status;
    bool sigma_zero = false;
};

inline std::map<IntPartition, MPFixtureRow> load_mp_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::map<IntPartition, MPFixtureRow> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string part, status, sz;
        if (!std::getline(is, part, '|') || !std::getline(is, status, '|') || !std::getline(is, sz))
            throw std::runtime_error("bad fixture line: " + line);
        auto strip = [](std::string s) {
            size_t a = s.find_first_not_of(' ');
            size_t b = s.find_last_not_of(' ');
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        out[parse_partition(strip(part))] = {strip(status), strip(sz) == "1"};
    }
    return out;
}

struct MPReport {
    std::vector<MPRecord> records;
    int total = 0;
    int sigma_zero = 0;
    int resolved_direct = 0;   // nonexistence via the plain lemma routes
    int resolved_gauge = 0;    // nonexistence needing the gauge-parity route
    std::vector<std::string> warnings;  // engine/fixture disagreements
};

/// Full degree-24 run: sigma for each partition through the character sum,
/// lemma verdicts, and the diff against the transcribed classification lists.
inline MPReport mp_report(CharacterEngine& engine, const std::string& fixture_path, int threads = 0) {
    MPReport rep;
    auto fixture = load_mp_fixture(fixture_path);
    auto partitions = enumerate_mp_partitions();
    rep.total = int(partitions.size());
    rep.records.resize(partitions.size());

    const IntPartition two12(12, 2), three8(8, 3);
    // warm the character cache (disk-backed when HEUN_ATLAS_CACHE is set) and
    // the memo for the two fixed classes before fanning out
    engine.load_disk_cache();
    engine.character({24}, two12);
    engine.character({24}, three8);

    unsigned nthreads = threads > 0 ? unsigned(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < partitions.size(); i = next++) {
            MPRecord r;
            r.partition = partitions[i];
            r.sigma_raw = frobenius_count(two12, three8, r.partition, engine);
            r.verdict = classify_mp_verdict(r.partition, /*exhaustive=*/true);
            auto it = fixture.find(r.partition);
            if (it != fixture.end()) {
                r.paper_status = it->second.status;
                r.sigma_zero_fixture = it->second.sigma_zero;
            }
            rep.records[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& r : rep.records) {
        bool zero = r.sigma_raw == 0;
        if (zero) ++rep.sigma_zero;
        bool gauge = false, direct = false;
        for (const auto& step : r.verdict.chain)
            (step.rule == "gauge-parity" ? gauge : direct) = true;
        if (r.verdict.status == Verdict::Nonexistent) {
            if (direct) ++rep.resolved_direct;
            else if (gauge) ++rep.resolved_gauge;
        }
        // diffs against the transcription
        if (zero != r.sigma_zero_fixture)
            rep.warnings.push_back(partition_str(r.partition) + ": sigma zero flag differs");
        if (r.paper_status == "exists") {
            if (zero)
                rep.warnings.push_back(partition_str(r.partition) + ": sigma 0 on an existing datum");
            if (r.verdict.status == Verdict::Nonexistent)
                rep.warnings.push_back(partition_str(r.partition) + ": engine disproves an existing datum");
        }
        if (r.paper_status == "nonexistent-direct" && !(r.verdict.status == Verdict::Nonexistent && direct))
            rep.warnings.push_back(partition_str(r.partition) + ": direct lemma case not resolved");
        if (r.paper_status == "nonexistent-gauge" && !(r.verdict.status == Verdict::Nonexistent && gauge))
            rep.warnings.push_back(partition_str(r.partition) + ": gauge case not resolved");
        if (r.paper_status == "nonexistent-other" && r.verdict.status != Verdict::Nonexistent)
            rep.warnings.push_back(partition_str(r.partition) + ": pull-back case not resolved");
    }
    engine.save_disk_cache();
    return rep;
}

}  // namespace heun
