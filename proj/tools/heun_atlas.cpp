// heun-atlas: classification toolkit for the parametric hypergeometric-to-Heun
// pull-back coverings: pattern enumeration, covering verification, triple
// counting, dessins, non-existence certificates and the degree-24 application.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "heun_atlas/belyi.hpp"
#include "heun_atlas/charcount.hpp"
#include "heun_atlas/lemmas.hpp"
#include "heun_atlas/monodromy.hpp"
#include "heun_atlas/mp24.hpp"
#include "heun_atlas/patterns.hpp"
#include "heun_atlas/solver.hpp"
#include "heun_atlas/tables.hpp"

using namespace heun;
using nlohmann::json;

namespace {

json verdict_json(const Verdict& v) {
    json chain = json::array();
    for (const auto& step : v.chain) {
        json base = json::array(), profile = json::array();
        for (const auto& b : step.base) base.push_back(rat_str(b));
        for (const auto& d : step.profile) profile.push_back(rat_str(d));
        chain.push_back({{"alpha", base}, {"profile", profile}, {"rule", step.rule}});
    }
    return {{"status", v.status == Verdict::Nonexistent ? "nonexistent" : "undecided"},
            {"chain", chain}};
}

json report_json(const RunReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        const char* st = c.status == CheckStatus::Pass ? "PASS"
                         : c.status == CheckStatus::Warn ? "WARN" : "FAIL";
        checks.push_back({{"name", c.name}, {"status", st}, {"detail", c.detail}});
    }
    return {{"schema", "heun-atlas/report/v1"},
            {"checks", checks},
            {"failures", rep.failures()},
            {"warnings", rep.warnings()}};
}

void print_report(const RunReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
        return;
    }
    for (const auto& c : rep.checks) {
        const char* st = c.status == CheckStatus::Pass ? "PASS"
                         : c.status == CheckStatus::Warn ? "WARN" : "FAIL";
        std::cout << st << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
    std::cout << rep.failures() << " failures, " << rep.warnings() << " warnings\n";
}

std::vector<CoveringRecord> the_catalog() { return load_catalog(data_dir() + "/catalog.txt"); }

const CoveringRecord* find_record(const std::vector<CoveringRecord>& cat, const std::string& id) {
    for (const auto& r : cat)
        if (r.id == id) return &r;
    return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heun-atlas: Belyi coverings behind parametric Gauss-to-Heun pull-backs"};
    app.require_subcommand(1);
    bool as_json = false;
    int threads = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--threads", threads, "worker thread cap (0 = hardware)");

    auto* cmd_types = app.add_subcommand("types", "admissible restriction types and degree bounds");

    std::string opt_type, opt_pattern, opt_id, opt_dot, opt_classes, opt_profile = "quick";
    int opt_degree = 0, opt_n = 24;
    bool opt_all = false, opt_exhaustive = false;
    auto* cmd_pat = app.add_subcommand("patterns", "enumerate branching patterns for a type/degree");
    cmd_pat->add_option("--type", opt_type, "restriction type, e.g. 2,3")->required();
    cmd_pat->add_option("--degree", opt_degree, "covering degree")->required();

    auto* cmd_verify = app.add_subcommand("verify", "verify catalog coverings against their patterns");
    cmd_verify->add_option("--id", opt_id, "covering id, e.g. H21");
    cmd_verify->add_flag("--all", opt_all, "verify the whole catalog");

    auto* cmd_solve = app.add_subcommand("solve", "solve for Belyi maps with a pattern (degree <= 6)");
    cmd_solve->add_option("--pattern", opt_pattern, "e.g. \"3=2+1=2+1\"")->required();

    auto* cmd_count = app.add_subcommand("count", "count monodromy triples for a pattern");
    cmd_count->add_option("--pattern", opt_pattern)->required();

    auto* cmd_dessin = app.add_subcommand("dessin", "emit the dessin of a covering as DOT");
    cmd_dessin->add_option("--id", opt_id, "catalog id");
    cmd_dessin->add_option("--pattern", opt_pattern, "or an explicit pattern");
    cmd_dessin->add_option("--dot", opt_dot, "output path (default stdout)");

    auto* cmd_nonexist = app.add_subcommand("nonexist", "run the non-existence engine on a pattern");
    cmd_nonexist->add_option("--type", opt_type, "restriction type (informational)");
    cmd_nonexist->add_option("--pattern", opt_pattern)->required();
    cmd_nonexist->add_flag("--exhaustive", opt_exhaustive, "collect all certificates");

    auto* cmd_sigma = app.add_subcommand("sigma", "character-sum triple count");
    cmd_sigma->add_option("--n", opt_n, "degree (informational, taken from the classes)");
    cmd_sigma->add_option("--classes", opt_classes, "three classes, e.g. \"2^12|3^8|10+6+4+2+1+1\"")
        ->required();

    auto* cmd_mp24 = app.add_subcommand("mp24", "degree-24 semi-stable classification report");
    std::string opt_out;
    cmd_mp24->add_option("--out", opt_out, "write the JSON report to a file");

    auto* cmd_tables = app.add_subcommand("tables", "regenerate the classification tables and diff");

    auto* cmd_all = app.add_subcommand("all", "run the verification pipeline");
    cmd_all->add_option("--profile", opt_profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_types) {
            json out = json::array();
            for (const auto& [t, dmax] : enumerate_types()) {
                if (as_json) out.push_back({{"type", type_str(t)}, {"max_degree", dmax}});
                else std::cout << type_str(t) << "  D <= " << dmax << "\n";
            }
            if (as_json) std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*cmd_pat) {
            auto ps = enumerate_patterns(parse_type(opt_type), opt_degree);
            json out = json::array();
            for (const auto& p : ps) {
                auto h = heun_exponents(p);
                if (as_json)
                    out.push_back({{"pattern", pattern_str(p)},
                                   {"heun", heun_str(h)},
                                   {"defect", hurwitz_defect(p)}});
                else std::cout << pattern_str(p) << "  ->  " << heun_str(h) << "\n";
            }
            if (as_json) std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*cmd_verify) {
            auto cat = the_catalog();
            json out = json::array();
            bool ok = true;
            bool any = false;
            for (const auto& r : cat) {
                if (!opt_all && r.id != opt_id) continue;
                any = true;
                auto v = verify_covering(r.map, r.pattern);
                ok = ok && v.passed();
                if (as_json) {
                    out.push_back({{"id", r.id},
                                   {"degree", r.degree},
                                   {"pattern", pattern_str(r.pattern)},
                                   {"pass", v.passed()},
                                   {"detail", v.detail}});
                } else {
                    std::cout << (v.passed() ? "PASS" : "FAIL") << "  " << r.id << "  "
                              << pattern_str(r.pattern);
                    if (!v.detail.empty()) std::cout << "  [" << v.detail << "]";
                    std::cout << "\n";
                }
            }
            if (!any) throw std::runtime_error("no such covering: " + opt_id);
            if (as_json) std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (*cmd_solve) {
            auto sols = solve_belyi(parse_pattern(opt_pattern));
            json out = json::array();
            for (const auto& s : sols) {
                if (as_json)
                    out.push_back({{"num", poly_str(s.map.num())},
                                   {"den", poly_str(s.map.den())},
                                   {"field", s.field}});
                else
                    std::cout << poly_str(s.map.num()) << " / " << poly_str(s.map.den())
                              << "   over " << s.field << "\n";
            }
            if (as_json) std::cout << out.dump(2) << "\n";
            else if (sols.empty()) std::cout << "no covering with this pattern\n";
            return 0;
        }
        if (*cmd_count) {
            auto p = parse_pattern(opt_pattern);
            auto c = count_triples(p.plain_fibers());
            if (as_json) {
                std::cout << json{{"pattern", pattern_str(p)},
                                  {"raw_count", c.raw_count.get_str()},
                                  {"orbit_count", c.orbit_count}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "raw triples " << c.raw_count.get_str() << ", coverings "
                          << c.orbit_count << "\n";
            }
            return 0;
        }
        if (*cmd_dessin) {
            std::vector<IntPartition> fibers;
            if (!opt_id.empty()) {
                auto cat = the_catalog();
                const auto* r = find_record(cat, opt_id);
                if (!r) throw std::runtime_error("unknown id " + opt_id);
                // black vertices over 0, white over 1, faces over infinity
                auto v = verify_covering(r->map, r->pattern);
                fibers = {v.fibers.measured[0], v.fibers.measured[1], v.fibers.measured[2]};
            } else if (!opt_pattern.empty()) {
                fibers = parse_pattern(opt_pattern).plain_fibers();
            } else {
                throw std::runtime_error("dessin needs --id or --pattern");
            }
            auto c = count_triples(fibers);
            if (c.representatives.empty()) throw std::runtime_error("pattern is unrealizable");
            std::string dot = emit_dot(dessin(c.representatives.front()));
            if (opt_dot.empty()) std::cout << dot;
            else std::ofstream(opt_dot) << dot;
            return 0;
        }
        if (*cmd_nonexist) {
            auto p = parse_pattern(opt_pattern);
            auto v = nonexistence_search(p, opt_exhaustive, /*with_gauge=*/p.degree == 24);
            if (as_json) {
                std::cout << verdict_json(v).dump(2) << "\n";
            } else if (v.status == Verdict::Nonexistent) {
                for (const auto& step : v.chain) {
                    std::cout << "nonexistent via " << step.rule << " at base (";
                    for (int i = 0; i < 3; ++i) std::cout << (i ? "," : "") << rat_str(step.base[i]);
                    std::cout << "), pulled-back (";
                    for (size_t i = 0; i < step.profile.size(); ++i)
                        std::cout << (i ? "," : "") << rat_str(step.profile[i]);
                    std::cout << ")\n";
                }
            } else {
                std::cout << "undecided\n";
            }
            return 0;
        }
        if (*cmd_sigma) {
            std::vector<IntPartition> classes;
            std::istringstream is(opt_classes);
            std::string tok;
            while (std::getline(is, tok, '|')) classes.push_back(parse_partition(tok));
            if (classes.size() != 3) throw std::runtime_error("need three classes");
            CharacterEngine eng;
            Int cnt = frobenius_count(classes[0], classes[1], classes[2], eng);
            if (as_json)
                std::cout << json{{"n", partition_sum(classes[0])}, {"count", cnt.get_str()}}.dump(2)
                          << "\n";
            else std::cout << cnt.get_str() << "\n";
            return 0;
        }
        if (*cmd_mp24) {
            CharacterEngine eng;
            auto rep = mp_report(eng, data_dir() + "/mp24_fixture.txt", threads);
            json recs = json::array();
            for (const auto& r : rep.records)
                recs.push_back({{"partition", partition_str(r.partition)},
                                {"sigma", r.sigma_raw.get_str()},
                                {"verdict", verdict_json(r.verdict)},
                                {"paper_status", r.paper_status}});
            json out = {{"schema", "heun-atlas/mp24/v1"},
                        {"total", rep.total},
                        {"sigma_zero", rep.sigma_zero},
                        {"resolved_direct", rep.resolved_direct},
                        {"resolved_gauge", rep.resolved_gauge},
                        {"warnings", rep.warnings},
                        {"records", recs}};
            if (!opt_out.empty()) std::ofstream(opt_out) << out.dump(2) << "\n";
            if (as_json && opt_out.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << rep.total << " branch data, " << rep.sigma_zero
                          << " with vanishing character sum\n"
                          << rep.resolved_direct << " settled by direct lemmas, "
                          << rep.resolved_gauge << " by the gauge route\n";
                for (const auto& w : rep.warnings) std::cout << "WARN " << w << "\n";
            }
            return rep.warnings.empty() ? 0 : 1;
        }
        if (*cmd_tables) {
            auto rep = reproduce_tables(data_dir());
            print_report(rep, as_json);
            return rep.failures() == 0 ? 0 : 1;
        }
        if (*cmd_all) {
            auto rep = run_all(opt_profile, threads);
            print_report(rep, as_json);
            return rep.failures() == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
