#include "specalg/mts.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include "specalg/errors.hpp"

namespace specalg::mts {

void validate(const Mts& m) {
    if (m.alphabet.empty()) throw std::invalid_argument("mts: empty alphabet");
    if (m.inconsistent) {
        if (!m.states.empty() || !m.initial.empty() || !m.may.empty() || !m.must.empty())
            throw std::invalid_argument("mts: bottom must be empty");
        return;
    }
    if (m.initial.empty()) throw std::invalid_argument("mts: empty initial set");
    auto in_range = [&](int s) { return s >= 0 && s < static_cast<int>(m.states.size()); };
    for (int s : m.initial)
        if (!in_range(s)) throw std::invalid_argument("mts: initial state out of range");
    for (const auto& t : m.may)
        if (!in_range(t.src) || !in_range(t.dst) || t.sym < 0 ||
            t.sym >= static_cast<int>(m.alphabet.size()))
            throw std::invalid_argument("mts: transition out of range");
    for (const auto& t : m.must)
        if (!m.may.count(t)) throw std::invalid_argument("mts: must not subset of may");
}

Mts universal(const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    Mts u;
    u.alphabet = alphabet;
    u.states = {"u0"};
    u.initial = {0};
    for (int s = 0; s < static_cast<int>(alphabet.size()); ++s) u.may.insert({0, s, 0});
    return u;
}

Mts bottom(const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    Mts b;
    b.alphabet = alphabet;
    b.inconsistent = true;
    return b;
}

bool is_bottom(const Mts& m) { return m.inconsistent; }

bool is_deterministic(const Mts& m) {
    std::set<std::pair<int, int>> seen;
    for (const auto& t : m.may)
        if (!seen.insert({t.src, t.sym}).second) return false;
    return true;
}

namespace {

void require_same_alphabet(const Mts& a, const Mts& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
}

std::vector<std::vector<std::vector<int>>> succ_table(const Mts& m, const std::set<Transition>& ts) {
    std::vector<std::vector<std::vector<int>>> succ(
        m.states.size(), std::vector<std::vector<int>>(m.alphabet.size()));
    for (const auto& t : ts) succ[t.src][t.sym].push_back(t.dst);
    return succ;
}

}  // namespace

bool refines(const Mts& a, const Mts& b) {
    require_same_alphabet(a, b);
    if (a.inconsistent) return true;
    if (b.inconsistent) return false;
    auto may_a = succ_table(a, a.may), must_a = succ_table(a, a.must);
    auto may_b = succ_table(b, b.may), must_b = succ_table(b, b.must);
    std::size_t na = a.states.size(), nb = b.states.size();
    std::vector<std::vector<bool>> rel(na, std::vector<bool>(nb, true));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < na; ++s) {
            for (std::size_t t = 0; t < nb; ++t) {
                if (!rel[s][t]) continue;
                bool ok = true;
                for (std::size_t sym = 0; ok && sym < a.alphabet.size(); ++sym) {
                    for (int sa : may_a[s][sym]) {
                        bool matched = false;
                        for (int tb : may_b[t][sym])
                            if (rel[sa][tb]) { matched = true; break; }
                        if (!matched) { ok = false; break; }
                    }
                    if (!ok) break;
                    for (int tb : must_b[t][sym]) {
                        bool matched = false;
                        for (int sa : must_a[s][sym])
                            if (rel[sa][tb]) { matched = true; break; }
                        if (!matched) { ok = false; break; }
                    }
                }
                if (!ok) { rel[s][t] = false; changed = true; }
            }
        }
    }
    for (int s : a.initial) {
        bool matched = false;
        for (int t : b.initial)
            if (rel[s][t]) { matched = true; break; }
        if (!matched) return false;
    }
    return true;
}

Mts prune(const Mts& m, const std::set<int>& bad) {
    if (m.inconsistent) return m;
    // must-backward closure of the bad set
    std::set<int> removed = bad;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : m.must)
            if (removed.count(t.dst) && removed.insert(t.src).second) changed = true;
    }
    std::set<int> alive;
    for (int s : m.initial)
        if (!removed.count(s)) alive.insert(s);
    if (alive.empty()) return bottom(m.alphabet);

    Mts r;
    r.alphabet = m.alphabet;
    std::map<int, int> remap;
    for (int s = 0; s < static_cast<int>(m.states.size()); ++s) {
        if (removed.count(s)) continue;
        remap[s] = static_cast<int>(r.states.size());
        r.states.push_back(m.states[s]);
    }
    for (int s : alive) r.initial.insert(remap.at(s));
    for (const auto& t : m.may) {
        if (removed.count(t.src) || removed.count(t.dst)) continue;
        r.may.insert({remap.at(t.src), t.sym, remap.at(t.dst)});
        if (m.must.count(t)) r.must.insert({remap.at(t.src), t.sym, remap.at(t.dst)});
    }
    return r;
}

Mts conjoin(const Mts& a, const Mts& b) {
    require_same_alphabet(a, b);
    if (a.inconsistent || b.inconsistent) return bottom(a.alphabet);
    if (!is_deterministic(a) || !is_deterministic(b)) throw NondeterministicMts();

    auto edge = [](const Mts& m, int s, int sym) -> std::optional<Transition> {
        auto it = m.may.lower_bound({s, sym, 0});
        if (it != m.may.end() && it->src == s && it->sym == sym) return *it;
        return std::nullopt;
    };

    Mts r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> work;
    auto intern = [&](std::pair<int, int> p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(r.states.size());
        index.emplace(p, id);
        r.states.push_back(a.states[p.first] + "~" + b.states[p.second]);
        work.push_back(p);
        return id;
    };
    for (int i : a.initial)
        for (int j : b.initial) r.initial.insert(intern({i, j}));

    std::set<int> inconsistent_pairs;
    while (!work.empty()) {
        auto [s, t] = work.front();
        work.pop_front();
        int id = index.at({s, t});
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            auto ea = edge(a, s, static_cast<int>(sym));
            auto eb = edge(b, t, static_cast<int>(sym));
            bool must_a = ea && a.must.count(*ea);
            bool must_b = eb && b.must.count(*eb);
            if ((must_a && !eb) || (must_b && !ea)) {
                inconsistent_pairs.insert(id);  // required action disallowed by the other view
                continue;
            }
            if (ea && eb) {
                int dst = intern({ea->dst, eb->dst});
                Transition tr{id, static_cast<int>(sym), dst};
                r.may.insert(tr);
                if (must_a || must_b) r.must.insert(tr);
            }
        }
    }
    return prune(r, inconsistent_pairs);
}

Mts compose(const Mts& a, const Mts& b, Rule rule) {
    require_same_alphabet(a, b);
    if (a.inconsistent || b.inconsistent) return bottom(a.alphabet);
    auto may_a = succ_table(a, a.may), may_b = succ_table(b, b.may);

    Mts r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> work;
    auto intern = [&](std::pair<int, int> p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(r.states.size());
        index.emplace(p, id);
        r.states.push_back(a.states[p.first] + "~" + b.states[p.second]);
        work.push_back(p);
        return id;
    };
    for (int i : a.initial)
        for (int j : b.initial) r.initial.insert(intern({i, j}));
    while (!work.empty()) {
        auto [s, t] = work.front();
        work.pop_front();
        int id = index.at({s, t});
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            for (int sa : may_a[s][sym]) {
                for (int tb : may_b[t][sym]) {
                    bool must_a = a.must.count({s, static_cast<int>(sym), sa}) > 0;
                    bool must_b = b.must.count({t, static_cast<int>(sym), tb}) > 0;
                    int dst = intern({sa, tb});
                    Transition tr{id, static_cast<int>(sym), dst};
                    r.may.insert(tr);
                    bool required = rule == Rule::Meet ? (must_a && must_b) : (must_a || must_b);
                    if (required) r.must.insert(tr);
                }
            }
        }
    }
    return r;
}

Mts disjoin(const Mts& a, const Mts& b) {
    require_same_alphabet(a, b);
    if (a.inconsistent) return b;
    if (b.inconsistent) return a;
    Mts r;
    r.alphabet = a.alphabet;
    for (const auto& n : a.states) r.states.push_back("l_" + n);
    for (const auto& n : b.states) r.states.push_back("r_" + n);
    int off = static_cast<int>(a.states.size());
    for (int s : a.initial) r.initial.insert(s);
    for (int s : b.initial) r.initial.insert(s + off);
    for (const auto& t : a.may) r.may.insert(t);
    for (const auto& t : a.must) r.must.insert(t);
    for (const auto& t : b.may) r.may.insert({t.src + off, t.sym, t.dst + off});
    for (const auto& t : b.must) r.must.insert({t.src + off, t.sym, t.dst + off});
    return r;
}

}  // namespace specalg::mts
