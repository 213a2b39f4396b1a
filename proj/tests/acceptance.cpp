// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <bitset>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "specalg/audit.hpp"
#include "specalg/cli.hpp"
#include "specalg/ia.hpp"
#include "specalg/laws.hpp"
#include "specalg/nfa.hpp"
#include "specalg/textio.hpp"

using namespace specalg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const LawVerdict* find_verdict(const AuditReport& r, LawId law) {
    for (const auto& v : r.verdicts)
        if (v.law == law) return &v;
    return nullptr;
}

// 1. full random FA audit: every law holds, PRECONG non-vacuously
void criterion1() {
    auto start = Clock::now();
    GenConfig cfg;
    cfg.theory = "fa";
    cfg.sample_count = 1000;
    cfg.seed = 1;
    cfg.max_states = 3;
    cfg.alphabet_size = 2;
    auto r = audit(make_handle(cfg), cfg);
    double secs = seconds_since(start);
    int holds = 0;
    for (const auto& v : r.verdicts)
        if (v.status == Status::Holds) ++holds;
    const auto* pc = find_verdict(r, LawId::PRECONG);
    bool ok = holds == kLawCount && !r.any_failure() && pc && pc->premise_hits >= 50 &&
              secs < 60.0;
    std::ostringstream d;
    d << "fa audit (1000 samples, seed 1): " << holds << "/" << kLawCount
      << " laws hold, PRECONG premise hits=" << (pc ? pc->premise_hits : 0) << ", "
      << secs << "s";
    report(1, ok, d.str());
}

// 2. composition refines conjunction on every FA pair with <= 2 states, 1 symbol
void criterion2() {
    auto start = Clock::now();
    GenConfig cfg;
    cfg.theory = "fa";
    cfg.max_states = 2;
    cfg.alphabet_size = 1;
    cfg.mode = GenMode::Exhaustive;
    auto v = check_law(make_handle(cfg), LawId::THM1, cfg);
    double secs = seconds_since(start);
    bool ok = v.status == Status::Holds && v.samples_checked == 196L * 196L &&
              v.inapplicable_count == 0 && secs < 10.0;
    std::ostringstream d;
    d << "A|B <= A&B on all " << v.samples_checked << " fa pairs: "
      << status_name(v.status) << ", " << secs << "s";
    report(2, ok, d.str());
}

// 3. MTS/meet exhaustive audit: PAR_UNIT fails with the minimal must-loop
//    witness, THM1 fails too, and the cross-check records both
void criterion3() {
    GenConfig cfg;
    cfg.theory = "mts";
    cfg.mts_rule = mts::Rule::Meet;
    cfg.max_states = 2;
    cfg.alphabet_size = 1;
    cfg.mode = GenMode::Exhaustive;
    auto r = audit(make_handle(cfg), cfg);
    const auto* pu = find_verdict(r, LawId::PAR_UNIT);
    const auto* t1 = find_verdict(r, LawId::THM1);
    bool minimal = false;
    if (pu && pu->witness.size() == 1) {
        auto parsed = parse_spec(pu->witness[0]);
        const auto& m = std::get<mts::Mts>(parsed.specs.at(0).value);
        minimal = m.states.size() == 1 && m.must.size() == 1 && m.may == m.must &&
                  m.must.count({0, 0, 0}) == 1;
    }
    bool ok = pu && pu->status == Status::Fails && minimal && t1 &&
              t1->status == Status::Fails && !t1->witness.empty() && r.thm2.applicable &&
              r.thm2.par_unit == "fails" && r.thm2.thm1 == "fails";
    std::ostringstream d;
    d << "mts/meet exhaustive: PAR_UNIT " << (pu ? status_name(pu->status) : "missing")
      << (minimal ? " with 1-state must-loop witness" : " (witness not minimal)") << ", THM1 "
      << (t1 ? status_name(t1->status) : "missing") << ", cross-check records both";
    report(3, ok, d.str());
}

// 4. MTS/join keeps the unit law on 1000 random samples
void criterion4() {
    GenConfig cfg;
    cfg.theory = "mts";
    cfg.mts_rule = mts::Rule::Join;
    cfg.sample_count = 1000;
    cfg.seed = 1;
    auto v = check_law(make_handle(cfg), LawId::PAR_UNIT, cfg);
    bool ok = v.status == Status::Holds && v.samples_checked == 1000;
    std::ostringstream d;
    d << "mts/join PAR_UNIT over " << v.samples_checked
      << " samples: " << status_name(v.status);
    report(4, ok, d.str());
}

// 5. quotient laws on FA: defining property 500/500 and maximality on
//    500 premise-hitting triples
void criterion5() {
    auto start = Clock::now();
    GenConfig cfg;
    cfg.theory = "fa";
    cfg.max_states = 3;
    cfg.alphabet_size = 2;
    cfg.seed = 1;
    auto t = make_handle(cfg);

    int def_ok = 0;
    for (int i = 0; i < 500; ++i) {
        std::vector<Spec> args = {gen_random(cfg, 2 * i), gen_random(cfg, 2 * i + 1)};
        if (law_predicate(t, LawId::CONJ_QUOT_DEF, args).value == Tri::True) ++def_ok;
    }

    int max_hits = 0, max_ok = 0;
    for (std::uint64_t i = 0; max_hits < 500 && i < 200000; ++i) {
        std::vector<Spec> args = {gen_random(cfg, 1000000 + 3 * i),
                                  gen_random(cfg, 1000001 + 3 * i),
                                  gen_random(cfg, 1000002 + 3 * i)};
        auto out = law_predicate(t, LawId::THM4_MAX, args);
        if (out.value == Tri::Undefined || !out.premise_hit) continue;
        ++max_hits;
        if (out.value == Tri::True) ++max_ok;
    }
    double secs = seconds_since(start);
    bool ok = def_ok == 500 && max_hits == 500 && max_ok == 500 && secs < 60.0;
    std::ostringstream d;
    d << "quotient defining property " << def_ok << "/500, maximality " << max_ok << "/"
      << max_hits << " premise-hitting triples, " << secs << "s";
    report(5, ok, d.str());
}

// 6. associativity of conjunction and composition on 500 seeded triples
void criterion6() {
    GenConfig cfg;
    cfg.theory = "fa";
    cfg.max_states = 3;
    cfg.alphabet_size = 2;
    cfg.seed = 1;
    auto run_500 = [](const TheoryHandle& t, const GenConfig& c, LawId law) {
        int ok = 0;
        for (int i = 0; i < 500; ++i) {
            std::vector<Spec> args = {gen_random(c, 3 * i), gen_random(c, 3 * i + 1),
                                      gen_random(c, 3 * i + 2)};
            if (law_predicate(t, law, args).value != Tri::False) ++ok;
        }
        return ok;
    };
    auto fa_t = make_handle(cfg);
    int fa5 = run_500(fa_t, cfg, LawId::THM5_ASSOC);
    int fa6 = run_500(fa_t, cfg, LawId::THM6_ASSOC);

    GenConfig mc = cfg;
    mc.theory = "mts";
    mc.mts_rule = mts::Rule::Meet;
    int mm5 = run_500(make_handle(mc), mc, LawId::THM5_ASSOC);
    mc.mts_rule = mts::Rule::Join;
    int mj5 = run_500(make_handle(mc), mc, LawId::THM5_ASSOC);

    bool ok = fa5 == 500 && fa6 == 500 && mm5 == 500 && mj5 == 500;
    std::ostringstream d;
    d << "associativity: fa THM5 " << fa5 << "/500, fa THM6 " << fa6 << "/500, mts/meet THM5 "
      << mm5 << "/500, mts/join THM5 " << mj5 << "/500";
    report(6, ok, d.str());
}

// 7. optimistic/pessimistic/component compatibility pattern on P/Q
void criterion7() {
    const std::string file =
        "spec P\n"
        "theory ia\n"
        "inputs go\n"
        "outputs msg\n"
        "states p0,p1,p2\n"
        "initial p0\n"
        "i p0 go p1\n"
        "o p1 msg p2\n"
        "end\n"
        "\n"
        "spec Q\n"
        "theory ia\n"
        "inputs msg\n"
        "states q0\n"
        "initial q0\n"
        "end\n";
    auto path = std::string("acceptance_pq.spec");
    {
        std::ofstream f(path);
        f << file;
    }
    auto exit_of = [&](const std::string& mode) {
        std::ostringstream out, err;
        return run_cli({"compat", path, "--left", "P", "--right", "Q", "--mode", mode}, out,
                       err);
    };
    int opt = exit_of("optimistic");
    int pes = exit_of("pessimistic");
    int comp = exit_of("component");
    bool ok = opt == 0 && pes == 1 && comp == 1;
    std::ostringstream d;
    d << "P/Q compat exits: optimistic=" << opt << " pessimistic=" << pes
      << " component=" << comp << " (want 0/1/1)";
    report(7, ok, d.str());
}

// 8. every candidate in the bounded ia family is defeated
void criterion8() {
    auto start = Clock::now();
    auto table = ia::no_universal_witness({2, 2});
    double secs = seconds_since(start);
    auto family_size = ia::enumerate_family(2, 2).size();
    std::size_t defeated = 0;
    for (const auto& e : table)
        if (e.reason != "not defeated") ++defeated;
    bool ok = table.size() == family_size && defeated == table.size() && secs < 120.0;
    std::ostringstream d;
    d << defeated << "/" << table.size() << " candidates defeated (family size " << family_size
      << "), " << secs << "s";
    report(8, ok, d.str());
}

// 9. identical flags -> byte-identical JSON modulo durationMs
void criterion9() {
    auto strip = [](std::string s) {
        return std::regex_replace(s, std::regex("\"durationMs\": \\d+"), "\"durationMs\": 0");
    };
    bool ok = true;
    std::vector<std::vector<std::string>> runs = {
        {"audit", "--theory", "fa", "--samples", "200", "--seed", "3", "--format", "json"},
        {"audit", "--theory", "mts", "--mts-rule", "meet", "--samples", "200", "--seed", "3",
         "--format", "json"},
        {"audit", "--theory", "mts", "--mts-rule", "join", "--samples", "200", "--seed", "3",
         "--format", "json"},
        {"audit", "--theory", "ia", "--samples", "200", "--seed", "3", "--format", "json"},
    };
    for (const auto& args : runs) {
        std::ostringstream o1, e1, o2, e2;
        run_cli(args, o1, e1);
        run_cli(args, o2, e2);
        if (strip(o1.str()) != strip(o2.str())) ok = false;
    }
    report(9, ok, "repeated audits are byte-identical modulo durationMs (4 configurations)");
}

// 10. refinement vs the word oracle on every pair with <= 2 states, 2 symbols
void criterion10() {
    auto start = Clock::now();
    GenConfig cfg;
    cfg.theory = "fa";
    cfg.max_states = 2;
    cfg.alphabet_size = 2;
    cfg.mode = GenMode::Exhaustive;
    auto universe = enumerate_all(cfg);

    // fingerprint each bounded language: one bit per word of length <= 6
    // over 2 symbols (2^7 - 1 = 127 words)
    std::vector<std::vector<int>> words;
    {
        std::vector<std::vector<int>> frontier = {{}};
        for (int len = 0; len <= 6; ++len) {
            std::vector<std::vector<int>> next;
            for (auto& w : frontier) {
                words.push_back(w);
                if (len < 6)
                    for (int s = 0; s < 2; ++s) {
                        auto v = w;
                        v.push_back(s);
                        next.push_back(std::move(v));
                    }
            }
            frontier = std::move(next);
        }
    }
    std::vector<std::bitset<127>> lang(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        auto ws = fa::words_upto(std::get<fa::Nfa>(universe[i]), 6);
        for (std::size_t k = 0; k < words.size(); ++k)
            if (ws.count(words[k])) lang[i].set(k);
    }

    long disagreements = 0;
    long pairs = 0;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const auto& a = std::get<fa::Nfa>(universe[i]);
        for (std::size_t j = 0; j < universe.size(); ++j) {
            ++pairs;
            bool exact = fa::refines(a, std::get<fa::Nfa>(universe[j]));
            bool bounded = (lang[i] & ~lang[j]).none();
            if (exact != bounded) ++disagreements;
        }
    }
    double secs = seconds_since(start);
    bool ok = disagreements == 0;
    std::ostringstream d;
    d << "refinement vs word oracle (n=6) on " << pairs << " pairs: " << disagreements
      << " disagreements, " << secs << "s";
    report(10, ok, d.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
    return g_failures == 0 ? 0 : 1;
}
