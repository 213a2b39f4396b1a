#include "specalg/ia.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "specalg/errors.hpp"

namespace specalg::ia {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

bool disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    for (const auto& x : a)
        if (contains(b, x)) return false;
    return true;
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

}  // namespace

std::optional<Kind> InterfaceAutomaton::kind(const std::string& action) const {
    if (contains(inputs, action)) return Kind::Input;
    if (contains(outputs, action)) return Kind::Output;
    if (contains(internals, action)) return Kind::Internal;
    return std::nullopt;
}

bool InterfaceAutomaton::same_signature(const InterfaceAutomaton& o) const {
    return inputs == o.inputs && outputs == o.outputs && internals == o.internals;
}

void validate(const InterfaceAutomaton& a) {
    if (!disjoint(a.inputs, a.outputs) || !disjoint(a.inputs, a.internals) ||
        !disjoint(a.outputs, a.internals))
        throw std::invalid_argument("ia: signature sets overlap");
    if (a.states.empty()) throw std::invalid_argument("ia: no states");
    if (a.initial < 0 || a.initial >= static_cast<int>(a.states.size()))
        throw std::invalid_argument("ia: initial out of range");
    std::set<std::pair<int, std::string>> seen;
    for (const auto& t : a.transitions) {
        if (t.src < 0 || t.src >= static_cast<int>(a.states.size()) || t.dst < 0 ||
            t.dst >= static_cast<int>(a.states.size()))
            throw std::invalid_argument("ia: transition out of range");
        if (!a.kind(t.action)) throw std::invalid_argument("ia: undeclared action " + t.action);
        if (!seen.insert({t.src, t.action}).second)
            throw std::invalid_argument("ia: nondeterministic on " + t.action);
    }
}

bool composable(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
    if (!disjoint(a.outputs, b.outputs)) return false;
    auto sig_b = sorted_union(sorted_union(b.inputs, b.outputs), b.internals);
    auto sig_a = sorted_union(sorted_union(a.inputs, a.outputs), a.internals);
    return disjoint(a.internals, sig_b) && disjoint(b.internals, sig_a);
}

namespace {

std::optional<int> step(const InterfaceAutomaton& m, int s, const std::string& action) {
    auto it = m.transitions.lower_bound({s, action, 0});
    if (it != m.transitions.end() && it->src == s && it->action == action) return it->dst;
    return std::nullopt;
}

}  // namespace

ProductWithErrors product(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
    if (!composable(a, b)) throw ControlConflict();
    auto ext_a = sorted_union(a.inputs, a.outputs);
    auto ext_b = sorted_union(b.inputs, b.outputs);
    std::vector<std::string> shared;
    std::set_intersection(ext_a.begin(), ext_a.end(), ext_b.begin(), ext_b.end(),
                          std::back_inserter(shared));

    ProductWithErrors out;
    InterfaceAutomaton& r = out.automaton;
    {
        auto in = sorted_union(a.inputs, b.inputs);
        auto outp = sorted_union(a.outputs, b.outputs);
        std::set_difference(in.begin(), in.end(), shared.begin(), shared.end(),
                            std::back_inserter(r.inputs));
        std::set_difference(outp.begin(), outp.end(), shared.begin(), shared.end(),
                            std::back_inserter(r.outputs));
        r.internals = sorted_union(sorted_union(a.internals, b.internals), shared);
    }

    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> work;
    auto intern = [&](std::pair<int, int> p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(r.states.size());
        index.emplace(p, id);
        r.states.push_back(a.states[p.first] + "~" + b.states[p.second]);
        out.provenance.push_back(p);
        work.push_back(p);
        return id;
    };
    r.initial = intern({a.initial, b.initial});
    while (!work.empty()) {
        auto [s, t] = work.front();
        work.pop_front();
        int id = index.at({s, t});
        for (const auto& x : shared) {
            auto na = step(a, s, x);
            auto nb = step(b, t, x);
            bool err = (a.kind(x) == Kind::Output && na && !nb) ||
                       (b.kind(x) == Kind::Output && nb && !na);
            if (err) out.error_states.insert(id);
            if (na && nb) r.transitions.insert({id, x, intern({*na, *nb})});
        }
        auto interleave = [&](const InterfaceAutomaton& m, int ms, bool left) {
            for (const auto& t2 : m.transitions) {
                if (t2.src != ms) continue;
                if (contains(shared, t2.action)) continue;
                int dst = left ? intern({t2.dst, t}) : intern({s, t2.dst});
                r.transitions.insert({id, t2.action, dst});
            }
        };
        interleave(a, s, true);
        interleave(b, t, false);
    }
    return out;
}

namespace {

// least set containing `seed` and closed under "has an attacking
// transition into the set", where `attacking` selects the action kinds
// the forcing player controls
std::set<int> attractor(const InterfaceAutomaton& m, const std::set<int>& seed,
                        const std::set<Kind>& attacking) {
    std::set<int> bad = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : m.transitions) {
            if (!bad.count(t.dst) || bad.count(t.src)) continue;
            if (attacking.count(*m.kind(t.action)) && bad.insert(t.src).second) changed = true;
        }
    }
    return bad;
}

std::optional<InterfaceAutomaton> remove_states(const InterfaceAutomaton& m,
                                                const std::set<int>& bad) {
    if (bad.count(m.initial)) return std::nullopt;
    InterfaceAutomaton r;
    r.inputs = m.inputs;
    r.outputs = m.outputs;
    r.internals = m.internals;
    std::map<int, int> remap;
    for (int s = 0; s < static_cast<int>(m.states.size()); ++s) {
        if (bad.count(s)) continue;
        remap[s] = static_cast<int>(r.states.size());
        r.states.push_back(m.states[s]);
    }
    r.initial = remap.at(m.initial);
    for (const auto& t : m.transitions) {
        if (bad.count(t.src) || bad.count(t.dst)) continue;
        r.transitions.insert({remap.at(t.src), t.action, remap.at(t.dst)});
    }
    return r;
}

}  // namespace

std::optional<InterfaceAutomaton> env_prune(const ProductWithErrors& prod) {
    auto bad = attractor(prod.automaton, prod.error_states, {Kind::Output, Kind::Internal});
    return remove_states(prod.automaton, bad);
}

std::optional<InterfaceAutomaton> comp_prune(const ProductWithErrors& prod) {
    auto bad = attractor(prod.automaton, prod.error_states, {Kind::Input});
    return remove_states(prod.automaton, bad);
}

std::optional<InterfaceAutomaton> pessimistic(const InterfaceAutomaton& a,
                                              const InterfaceAutomaton& b) {
    auto prod = product(a, b);
    auto bad = attractor(prod.automaton, prod.error_states,
                         {Kind::Input, Kind::Output, Kind::Internal});
    return remove_states(prod.automaton, bad);
}

std::optional<InterfaceAutomaton> optimistic(const InterfaceAutomaton& a,
                                             const InterfaceAutomaton& b) {
    return env_prune(product(a, b));
}

bool refines(const InterfaceAutomaton& a, const InterfaceAutomaton& b) {
    if (!a.same_signature(b)) throw SignatureMismatch();
    std::size_t na = a.states.size(), nb = b.states.size();
    std::vector<std::vector<bool>> rel(na, std::vector<bool>(nb, true));
    auto actions = sorted_union(sorted_union(a.inputs, a.outputs), a.internals);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < na; ++s) {
            for (std::size_t t = 0; t < nb; ++t) {
                if (!rel[s][t]) continue;
                bool ok = true;
                for (const auto& x : actions) {
                    auto sa = step(a, static_cast<int>(s), x);
                    auto tb = step(b, static_cast<int>(t), x);
                    if (a.kind(x) == Kind::Input) {
                        // inputs of the abstract side must stay accepted
                        if (tb && (!sa || !rel[*sa][*tb])) { ok = false; break; }
                    } else {
                        // outputs/internals of the refined side must stay allowed
                        if (sa && (!tb || !rel[*sa][*tb])) { ok = false; break; }
                    }
                }
                if (!ok) { rel[s][t] = false; changed = true; }
            }
        }
    }
    return rel[a.initial][b.initial];
}

std::vector<InterfaceAutomaton> enumerate_family(int max_states, int action_count) {
    if (max_states > 2 || action_count > 2) throw EnumerationBound();
    std::vector<std::string> action_names;
    for (int i = 0; i < action_count; ++i) action_names.push_back(std::string(1, char('a' + i)));

    std::vector<InterfaceAutomaton> out;
    // signature: each action is absent, an input, or an output
    std::vector<int> roles(action_count, 0);
    auto next_roles = [&]() {
        for (int i = 0; i < action_count; ++i) {
            if (++roles[i] < 3) return true;
            roles[i] = 0;
        }
        return false;
    };
    do {
        std::vector<std::string> acts;
        InterfaceAutomaton base;
        for (int i = 0; i < action_count; ++i) {
            if (roles[i] == 0) continue;
            acts.push_back(action_names[i]);
            (roles[i] == 1 ? base.inputs : base.outputs).push_back(action_names[i]);
        }
        for (int n = 1; n <= max_states; ++n) {
            base.states.clear();
            for (int s = 0; s < n; ++s) base.states.push_back("s" + std::to_string(s));
            int slots = n * static_cast<int>(acts.size());
            // per (state, action): no edge, or a deterministic edge to any state
            std::vector<int> choice(slots, 0);
            while (true) {
                InterfaceAutomaton cand = base;
                cand.transitions.clear();
                for (int k = 0; k < slots; ++k) {
                    if (choice[k] == 0) continue;
                    int s = k / static_cast<int>(acts.size());
                    const auto& x = acts[k % acts.size()];
                    cand.transitions.insert({s, x, choice[k] - 1});
                }
                out.push_back(std::move(cand));
                int k = 0;
                for (; k < slots; ++k) {
                    if (++choice[k] <= n) break;
                    choice[k] = 0;
                }
                if (k == slots) break;
            }
            if (slots == 0) continue;  // the no-transition automaton was emitted once
        }
    } while (next_roles());
    return out;
}

std::vector<UniversalDefeat> no_universal_witness(const UniversalSearchBounds& bounds) {
    std::vector<UniversalDefeat> table;
    if (bounds.max_states <= 0 || bounds.action_count <= 0) return table;
    auto family = enumerate_family(bounds.max_states, bounds.action_count);
    for (const auto& cand : family) {
        UniversalDefeat entry;
        entry.candidate = cand;
        bool defeated = false;
        // prefer a same-signature refinement failure over a bare mismatch
        for (const auto& a : family) {
            if (!a.same_signature(cand)) continue;
            if (!refines(a, cand)) {
                entry.witness = a;
                entry.reason = "refinement fails";
                defeated = true;
                break;
            }
        }
        if (!defeated) {
            for (const auto& a : family) {
                if (a.same_signature(cand)) continue;
                entry.witness = a;
                entry.reason = "signature mismatch";
                defeated = true;
                break;
            }
        }
        if (!defeated) entry.reason = "not defeated";  // would contradict the bounded claim
        table.push_back(std::move(entry));
    }
    return table;
}

}  // namespace specalg::ia
