#include "specalg/audit.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "specalg/errors.hpp"
#include "specalg/textio.hpp"

namespace specalg {

namespace {

// splitmix64: platform-independent, unlike <random> distributions
std::uint64_t sm64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct Rng {
    std::uint64_t state;
    std::uint64_t next() { return sm64(state); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

Rng rng_for(const GenConfig& cfg, std::uint64_t index) {
    std::uint64_t s = cfg.seed ^ 0xA5A5A5A5A5A5A5A5ULL;
    (void)sm64(s);
    s ^= (index + 1) * 0x9E3779B97F4A7C15ULL;
    (void)sm64(s);
    return Rng{s};
}

std::vector<std::string> state_names(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("s" + std::to_string(i));
    return v;
}

Spec gen_fa(const GenConfig& cfg, Rng& rng) {
    fa::Nfa n;
    n.alphabet = default_alphabet(cfg.alphabet_size);
    int ns = 1 + static_cast<int>(rng.below(cfg.max_states));
    n.states = state_names(ns);
    for (int s = 0; s < ns; ++s)
        if (rng.chance(1, 2)) n.initial.insert(s);
    if (n.initial.empty()) n.initial.insert(static_cast<int>(rng.below(ns)));
    for (int s = 0; s < ns; ++s)
        if (rng.chance(1, 2)) n.accepting.insert(s);
    for (int s = 0; s < ns; ++s)
        for (int sym = 0; sym < cfg.alphabet_size; ++sym)
            for (int d = 0; d < ns; ++d)
                if (rng.chance(3, 10)) n.transitions.insert({s, sym, d});
    return n;
}

Spec gen_mts(const GenConfig& cfg, Rng& rng) {
    auto alphabet = default_alphabet(cfg.alphabet_size);
    if (rng.chance(1, 16)) return mts::bottom(alphabet);
    mts::Mts m;
    m.alphabet = alphabet;
    int ns = 1 + static_cast<int>(rng.below(cfg.max_states));
    m.states = state_names(ns);
    for (int s = 0; s < ns; ++s)
        if (rng.chance(1, 2)) m.initial.insert(s);
    if (m.initial.empty()) m.initial.insert(static_cast<int>(rng.below(ns)));
    // deterministic by construction: one draw per (state, symbol)
    for (int s = 0; s < ns; ++s) {
        for (int sym = 0; sym < cfg.alphabet_size; ++sym) {
            std::uint64_t kind = rng.below(4);  // 0,1 none; 2 may; 3 must
            if (kind < 2) continue;
            int d = static_cast<int>(rng.below(ns));
            m.may.insert({s, sym, d});
            if (kind == 3) m.must.insert({s, sym, d});
        }
    }
    return m;
}

Spec gen_ia(const GenConfig& cfg, Rng& rng) {
    ia::InterfaceAutomaton a;
    auto actions = default_alphabet(cfg.alphabet_size);
    std::vector<std::string> present;
    for (const auto& x : actions) {
        std::uint64_t role = rng.below(5);  // 0 absent; 1,2 input; 3,4 output
        if (role == 0) continue;
        present.push_back(x);
        (role <= 2 ? a.inputs : a.outputs).push_back(x);
    }
    int ns = 1 + static_cast<int>(rng.below(cfg.max_states));
    a.states = state_names(ns);
    a.initial = static_cast<int>(rng.below(ns));
    for (int s = 0; s < ns; ++s)
        for (const auto& x : present)
            if (rng.chance(1, 2)) a.transitions.insert({s, x, static_cast<int>(rng.below(ns))});
    return a;
}

}  // namespace

TheoryHandle make_handle(const GenConfig& cfg) {
    if (cfg.theory == "fa") return make_fa_theory(default_alphabet(cfg.alphabet_size));
    if (cfg.theory == "mts") return make_mts_theory(default_alphabet(cfg.alphabet_size), cfg.mts_rule);
    if (cfg.theory == "ia") return make_ia_theory();
    throw std::invalid_argument("unknown theory: " + cfg.theory);
}

Spec gen_random(const GenConfig& cfg, std::uint64_t index) {
    if (cfg.max_states < 1 || cfg.alphabet_size < 1)
        throw std::invalid_argument("maxStates and alphabetSize must be >= 1");
    Rng rng = rng_for(cfg, index);
    if (cfg.theory == "fa") return gen_fa(cfg, rng);
    if (cfg.theory == "mts") return gen_mts(cfg, rng);
    if (cfg.theory == "ia") return gen_ia(cfg, rng);
    throw std::invalid_argument("unknown theory: " + cfg.theory);
}

namespace {

std::vector<Spec> enumerate_fa(const GenConfig& cfg) {
    std::vector<Spec> out;
    auto alphabet = default_alphabet(cfg.alphabet_size);
    for (int n = 1; n <= cfg.max_states; ++n) {
        auto names = state_names(n);
        int edges = n * cfg.alphabet_size * n;
        for (unsigned init = 1; init < (1u << n); ++init) {
            for (unsigned acc = 0; acc < (1u << n); ++acc) {
                for (std::uint64_t tr = 0; tr < (1ull << edges); ++tr) {
                    fa::Nfa a;
                    a.alphabet = alphabet;
                    a.states = names;
                    for (int s = 0; s < n; ++s) {
                        if (init & (1u << s)) a.initial.insert(s);
                        if (acc & (1u << s)) a.accepting.insert(s);
                    }
                    int bit = 0;
                    for (int s = 0; s < n; ++s)
                        for (int sym = 0; sym < cfg.alphabet_size; ++sym)
                            for (int d = 0; d < n; ++d, ++bit)
                                if (tr & (1ull << bit)) a.transitions.insert({s, sym, d});
                    out.push_back(std::move(a));
                }
            }
        }
    }
    return out;
}

std::vector<Spec> enumerate_mts(const GenConfig& cfg) {
    std::vector<Spec> out;
    auto alphabet = default_alphabet(cfg.alphabet_size);
    out.push_back(mts::bottom(alphabet));
    for (int n = 1; n <= cfg.max_states; ++n) {
        auto names = state_names(n);
        int slots = n * cfg.alphabet_size;
        // per (state, symbol): none, may->d or must->d for each target d
        std::uint64_t options = 1 + 2ull * n;
        std::uint64_t combos = 1;
        for (int i = 0; i < slots; ++i) combos *= options;
        for (unsigned init = 1; init < (1u << n); ++init) {
            for (std::uint64_t code = 0; code < combos; ++code) {
                mts::Mts m;
                m.alphabet = alphabet;
                m.states = names;
                for (int s = 0; s < n; ++s)
                    if (init & (1u << s)) m.initial.insert(s);
                std::uint64_t c = code;
                for (int s = 0; s < n; ++s) {
                    for (int sym = 0; sym < cfg.alphabet_size; ++sym) {
                        int opt = static_cast<int>(c % options);
                        c /= options;
                        if (opt == 0) continue;
                        int d = (opt - 1) % n;
                        m.may.insert({s, sym, d});
                        if ((opt - 1) / n == 1) m.must.insert({s, sym, d});
                    }
                }
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Spec> enumerate_all(const GenConfig& cfg) {
    if (cfg.max_states > 2 || cfg.alphabet_size > 2) throw EnumerationBound();
    if (cfg.max_states < 1) return {};
    if (cfg.theory == "fa") return enumerate_fa(cfg);
    if (cfg.theory == "mts") return enumerate_mts(cfg);
    if (cfg.theory == "ia") {
        std::vector<Spec> out;
        for (auto& a : ia::enumerate_family(cfg.max_states, cfg.alphabet_size))
            out.push_back(std::move(a));
        return out;
    }
    throw std::invalid_argument("unknown theory: " + cfg.theory);
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

// single-step reduction candidates for one specification, canonical order
std::vector<Spec> reductions(const Spec& spec) {
    std::vector<Spec> out;
    if (const auto* n = std::get_if<fa::Nfa>(&spec)) {
        for (const auto& t : n->transitions) {
            fa::Nfa c = *n;
            c.transitions.erase(t);
            out.push_back(std::move(c));
        }
        for (int s = 0; s < static_cast<int>(n->states.size()); ++s) {
            if (n->initial.count(s) || n->states.size() == 1) continue;
            fa::Nfa c;
            c.alphabet = n->alphabet;
            std::vector<int> remap(n->states.size(), -1);
            for (int i = 0; i < static_cast<int>(n->states.size()); ++i) {
                if (i == s) continue;
                remap[i] = static_cast<int>(c.states.size());
                c.states.push_back(n->states[i]);
            }
            for (int i : n->initial) c.initial.insert(remap[i]);
            for (int i : n->accepting)
                if (i != s) c.accepting.insert(remap[i]);
            for (const auto& t : n->transitions)
                if (t.src != s && t.dst != s) c.transitions.insert({remap[t.src], t.sym, remap[t.dst]});
            out.push_back(std::move(c));
        }
    } else if (const auto* m = std::get_if<mts::Mts>(&spec)) {
        if (m->inconsistent) return out;
        for (const auto& t : m->must) {  // demote must to may
            mts::Mts c = *m;
            c.must.erase(t);
            out.push_back(std::move(c));
        }
        for (const auto& t : m->may) {
            if (m->must.count(t)) continue;
            mts::Mts c = *m;
            c.may.erase(t);
            out.push_back(std::move(c));
        }
        for (int s = 0; s < static_cast<int>(m->states.size()); ++s) {
            if (m->initial.count(s) || m->states.size() == 1) continue;
            mts::Mts c;
            c.alphabet = m->alphabet;
            std::vector<int> remap(m->states.size(), -1);
            for (int i = 0; i < static_cast<int>(m->states.size()); ++i) {
                if (i == s) continue;
                remap[i] = static_cast<int>(c.states.size());
                c.states.push_back(m->states[i]);
            }
            for (int i : m->initial) c.initial.insert(remap[i]);
            for (const auto& t : m->may) {
                if (t.src == s || t.dst == s) continue;
                fa::Transition tr{remap[t.src], t.sym, remap[t.dst]};
                c.may.insert(tr);
                if (m->must.count(t)) c.must.insert(tr);
            }
            out.push_back(std::move(c));
        }
    } else {
        const auto& a = std::get<ia::InterfaceAutomaton>(spec);
        for (const auto& t : a.transitions) {
            ia::InterfaceAutomaton c = a;
            c.transitions.erase(t);
            out.push_back(std::move(c));
        }
        for (int s = 0; s < static_cast<int>(a.states.size()); ++s) {
            if (s == a.initial || a.states.size() == 1) continue;
            ia::InterfaceAutomaton c;
            c.inputs = a.inputs;
            c.outputs = a.outputs;
            c.internals = a.internals;
            std::vector<int> remap(a.states.size(), -1);
            for (int i = 0; i < static_cast<int>(a.states.size()); ++i) {
                if (i == s) continue;
                remap[i] = static_cast<int>(c.states.size());
                c.states.push_back(a.states[i]);
            }
            c.initial = remap[a.initial];
            for (const auto& t : a.transitions)
                if (t.src != s && t.dst != s)
                    c.transitions.insert({remap[t.src], t.action, remap[t.dst]});
            out.push_back(std::move(c));
        }
        // drop an unused action from the signature
        auto drop_unused = [&](const std::vector<std::string>& list) {
            for (const auto& x : list) {
                bool used = false;
                for (const auto& t : a.transitions)
                    if (t.action == x) { used = true; break; }
                if (used) continue;
                ia::InterfaceAutomaton c = a;
                auto strip = [&](std::vector<std::string>& v) {
                    std::erase(v, x);
                };
                strip(c.inputs);
                strip(c.outputs);
                strip(c.internals);
                out.push_back(std::move(c));
            }
        };
        drop_unused(a.inputs);
        drop_unused(a.outputs);
        drop_unused(a.internals);
    }
    return out;
}

bool still_false(const TheoryHandle& t, LawId law, const std::vector<Spec>& args) {
    return law_predicate(t, law, args).value == Tri::False;
}

}  // namespace

std::vector<Spec> shrink(const TheoryHandle& t, LawId law, std::vector<Spec> witness) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < witness.size() && !changed; ++k) {
            for (auto& cand : reductions(witness[k])) {
                std::vector<Spec> trial = witness;
                trial[k] = std::move(cand);
                if (still_false(t, law, trial)) {
                    witness = std::move(trial);
                    changed = true;
                    break;
                }
            }
        }
    }
    return witness;
}

LawVerdict check_law(const TheoryHandle& t, LawId law, const GenConfig& cfg) {
    LawVerdict v;
    v.law = law;
    v.tracks_premise = law_has_premise(law);
    int arity = law_arity(law);

    auto evaluate = [&](const std::vector<Spec>& args) -> bool /* stop */ {
        ++v.samples_checked;
        LawOutcome out = law_predicate(t, law, args);
        if (out.value == Tri::Undefined) {
            ++v.inapplicable_count;
            return false;
        }
        if (v.tracks_premise && out.premise_hit) ++v.premise_hits;
        if (out.value == Tri::False) {
            auto w = shrink(t, law, args);
            for (std::size_t i = 0; i < w.size(); ++i)
                v.witness.push_back(render_spec(w[i], "w" + std::to_string(i)));
            v.status = Status::Fails;
            return true;
        }
        return false;
    };

    if (cfg.mode == GenMode::Random) {
        for (int i = 0; i < cfg.sample_count; ++i) {
            std::vector<Spec> args;
            std::uint64_t base = (static_cast<std::uint64_t>(law) << 32) +
                                 static_cast<std::uint64_t>(i) * 8;
            for (int k = 0; k < arity; ++k) args.push_back(gen_random(cfg, base + k));
            if (evaluate(args)) break;
        }
    } else {
        auto universe = enumerate_all(cfg);
        if (universe.empty()) {
            v.status = Status::Inapplicable;
            return v;
        }
        double total = 1;
        for (int k = 0; k < arity; ++k) total *= static_cast<double>(universe.size());
        if (total > static_cast<double>(1 << 24)) throw EnumerationBound();
        std::vector<std::size_t> odo(arity, 0);
        while (true) {
            std::vector<Spec> args;
            for (int k = 0; k < arity; ++k) args.push_back(universe[odo[k]]);
            if (evaluate(args)) break;
            int k = arity - 1;
            for (; k >= 0; --k) {
                if (++odo[k] < universe.size()) break;
                odo[k] = 0;
            }
            if (k < 0) break;
        }
    }

    if (v.status != Status::Fails) {
        long applicable = v.samples_checked - v.inapplicable_count;
        v.status = applicable > 0 ? Status::Holds : Status::Inapplicable;
        // an implication audited on purely vacuous evidence proves nothing
        if (law == LawId::PRECONG && v.status == Status::Holds && v.premise_hits < 50)
            v.status = Status::Inapplicable;
    }
    return v;
}

bool AuditReport::any_failure() const {
    for (const auto& v : verdicts)
        if (v.status == Status::Fails) return true;
    return false;
}

namespace {

std::string find_status(const AuditReport& r, LawId law) {
    for (const auto& v : r.verdicts)
        if (v.law == law) return status_name(v.status);
    return "missing";
}

Thm2CrossCheck cross_check(const AuditReport& r) {
    Thm2CrossCheck c;
    c.par_unit = find_status(r, LawId::PAR_UNIT);
    c.thm1 = find_status(r, LawId::THM1);
    c.precong = find_status(r, LawId::PRECONG);
    c.conj_glb = find_status(r, LawId::CONJ_GLB);
    if (c.par_unit == "inapplicable" || c.thm1 == "inapplicable") {
        c.applicable = false;
        c.observation = "unit or composition-vs-conjunction law inapplicable; cross-check skipped";
        return c;
    }
    c.applicable = true;
    if (c.par_unit == "fails" && c.thm1 == "fails")
        c.observation =
            "PAR_UNIT fails and a THM1 counterexample was found in the same budget: the unit "
            "law is necessary for composition to refine conjunction";
    else if (c.par_unit == "fails")
        c.observation = "PAR_UNIT fails but no THM1 counterexample surfaced within budget";
    else if (c.thm1 == "fails")
        c.observation =
            "THM1 fails although PAR_UNIT holds: check PRECONG/CONJ_GLB, one of the remaining "
            "premises must fail (precongruence: " + c.precong + ", glb: " + c.conj_glb + ")";
    else
        c.observation = "PAR_UNIT and THM1 both hold, as the unit argument predicts";
    return c;
}

}  // namespace

AuditReport audit(const TheoryHandle& t, const GenConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    AuditReport r;
    r.config = cfg;
    for (LawId law : all_laws()) r.verdicts.push_back(check_law(t, law, cfg));
    r.thm2 = cross_check(r);
    r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return r;
}

std::string report_to_json(const AuditReport& r) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"theory", r.config.theory},
        {"mtsRule", r.config.mts_rule == mts::Rule::Meet ? "meet" : "join"},
        {"samples", r.config.sample_count},
        {"seed", r.config.seed},
        {"maxStates", r.config.max_states},
        {"alphabetSize", r.config.alphabet_size},
        {"mode", r.config.mode == GenMode::Random ? "random" : "exhaustive"},
    };
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json jv;
        jv["law"] = law_name(v.law);
        jv["status"] = status_name(v.status);
        jv["samplesChecked"] = v.samples_checked;
        jv["inapplicableCount"] = v.inapplicable_count;
        if (v.tracks_premise) jv["premiseHits"] = v.premise_hits;
        if (!v.witness.empty()) jv["witness"] = v.witness;
        j["verdicts"].push_back(std::move(jv));
    }
    j["thm2CrossCheck"] = {
        {"applicable", r.thm2.applicable},
        {"parUnit", r.thm2.par_unit},
        {"thm1", r.thm2.thm1},
        {"precong", r.thm2.precong},
        {"conjGlb", r.thm2.conj_glb},
        {"observation", r.thm2.observation},
    };
    j["durationMs"] = r.duration_ms;
    return j.dump(2) + "\n";
}

std::string report_to_text(const AuditReport& r) {
    std::ostringstream os;
    os << "audit theory=" << r.config.theory;
    if (r.config.theory == "mts")
        os << " rule=" << (r.config.mts_rule == mts::Rule::Meet ? "meet" : "join");
    os << " mode=" << (r.config.mode == GenMode::Random ? "random" : "exhaustive")
       << " samples=" << r.config.sample_count << " seed=" << r.config.seed
       << " maxStates=" << r.config.max_states << " alphabetSize=" << r.config.alphabet_size
       << "\n\n";
    for (const auto& v : r.verdicts) {
        os << law_name(v.law);
        for (std::size_t i = law_name(v.law).size(); i < 14; ++i) os << ' ';
        os << status_name(v.status) << "  checked=" << v.samples_checked
           << " inapplicable=" << v.inapplicable_count;
        if (v.tracks_premise) os << " premiseHits=" << v.premise_hits;
        os << "\n";
        if (!v.witness.empty()) {
            os << "  counterexample:\n";
            for (const auto& w : v.witness) {
                std::istringstream ws(w);
                std::string ln;
                while (std::getline(ws, ln)) os << "    " << ln << "\n";
            }
        }
    }
    os << "\nthm2CrossCheck: " << r.thm2.observation << "\n";
    os << "duration: " << r.duration_ms << " ms\n";
    return os.str();
}

}  // namespace specalg
