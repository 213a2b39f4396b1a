#include "specalg/nfa.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include "specalg/errors.hpp"

namespace specalg::fa {

std::size_t max_det_states() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("SPECALG_MAX_DET_STATES")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4096);
    }();
    return cap;
}

void validate(const Nfa& a) {
    if (a.alphabet.empty()) throw std::invalid_argument("nfa: empty alphabet");
    if (a.initial.empty()) throw std::invalid_argument("nfa: empty initial set");
    auto in_range = [&](int s) { return s >= 0 && s < static_cast<int>(a.states.size()); };
    for (int s : a.initial)
        if (!in_range(s)) throw std::invalid_argument("nfa: initial state out of range");
    for (int s : a.accepting)
        if (!in_range(s)) throw std::invalid_argument("nfa: accepting state out of range");
    for (const auto& t : a.transitions)
        if (!in_range(t.src) || !in_range(t.dst) || t.sym < 0 ||
            t.sym >= static_cast<int>(a.alphabet.size()))
            throw std::invalid_argument("nfa: transition out of range");
}

Nfa universal(const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    Nfa u;
    u.alphabet = alphabet;
    u.states = {"u0"};
    u.initial = {0};
    u.accepting = {0};
    for (int s = 0; s < static_cast<int>(alphabet.size()); ++s)
        u.transitions.insert({0, s, 0});
    return u;
}

Nfa empty(const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    Nfa e;
    e.alphabet = alphabet;
    e.states = {"e0"};
    e.initial = {0};
    return e;
}

namespace {

void require_same_alphabet(const Nfa& a, const Nfa& b) {
    if (a.alphabet != b.alphabet) throw AlphabetMismatch();
}

// successor table: per state, per symbol, sorted target list
std::vector<std::vector<std::vector<int>>> succ_table(const Nfa& a) {
    std::vector<std::vector<std::vector<int>>> succ(
        a.states.size(), std::vector<std::vector<int>>(a.alphabet.size()));
    for (const auto& t : a.transitions) succ[t.src][t.sym].push_back(t.dst);
    return succ;
}

struct Dfa {
    std::vector<std::set<int>> subsets;      // subset per det state, BFS order
    std::vector<std::vector<int>> next;      // [det state][sym] -> det state (complete)
    std::vector<bool> accepting;
    int initial = 0;
};

Dfa determinize(const Nfa& a, std::size_t cap) {
    if (cap == 0) cap = max_det_states();
    auto succ = succ_table(a);
    Dfa d;
    std::map<std::set<int>, int> index;
    auto intern = [&](std::set<int> s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(d.subsets.size());
        if (d.subsets.size() + 1 > cap) throw StateBlowup(cap);
        index.emplace(s, id);
        d.subsets.push_back(std::move(s));
        return id;
    };
    d.initial = intern(a.initial);
    for (std::size_t q = 0; q < d.subsets.size(); ++q) {
        d.next.emplace_back(a.alphabet.size(), 0);
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            std::set<int> nxt;
            for (int s : d.subsets[q])
                for (int t : succ[s][sym]) nxt.insert(t);
            d.next[q][static_cast<int>(sym)] = intern(std::move(nxt));
        }
    }
    d.accepting.resize(d.subsets.size(), false);
    for (std::size_t q = 0; q < d.subsets.size(); ++q)
        for (int s : d.subsets[q])
            if (a.accepting.count(s)) d.accepting[q] = true;
    return d;
}

}  // namespace

bool refines(const Nfa& a, const Nfa& b, std::size_t cap) {
    require_same_alphabet(a, b);
    Dfa db = determinize(b, cap);
    auto succ = succ_table(a);
    // reachable pairs (a state, det-b state); a counterexample word exists
    // iff some reachable pair is a-accepting and det-b-rejecting
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> work;
    for (int s : a.initial) {
        if (seen.insert({s, db.initial}).second) work.push_back({s, db.initial});
    }
    while (!work.empty()) {
        auto [s, q] = work.front();
        work.pop_front();
        if (a.accepting.count(s) && !db.accepting[q]) return false;
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            int nq = db.next[q][static_cast<int>(sym)];
            for (int ns : succ[s][sym])
                if (seen.insert({ns, nq}).second) work.push_back({ns, nq});
        }
    }
    return true;
}

namespace {

Nfa product(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    auto sa = succ_table(a), sb = succ_table(b);
    Nfa r;
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
        auto p = work.front();
        work.pop_front();
        int id = index.at(p);
        if (a.accepting.count(p.first) && b.accepting.count(p.second)) r.accepting.insert(id);
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym)
            for (int na : sa[p.first][sym])
                for (int nb : sb[p.second][sym])
                    r.transitions.insert({id, static_cast<int>(sym), intern({na, nb})});
    }
    return r;
}

}  // namespace

Nfa conjoin(const Nfa& a, const Nfa& b) { return product(a, b); }
Nfa compose(const Nfa& a, const Nfa& b) { return product(a, b); }

Nfa disjoin(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Nfa r;
    r.alphabet = a.alphabet;
    for (const auto& n : a.states) r.states.push_back("l_" + n);
    for (const auto& n : b.states) r.states.push_back("r_" + n);
    int off = static_cast<int>(a.states.size());
    for (int s : a.initial) r.initial.insert(s);
    for (int s : b.initial) r.initial.insert(s + off);
    for (int s : a.accepting) r.accepting.insert(s);
    for (int s : b.accepting) r.accepting.insert(s + off);
    for (const auto& t : a.transitions) r.transitions.insert(t);
    for (const auto& t : b.transitions) r.transitions.insert({t.src + off, t.sym, t.dst + off});
    return r;
}

Nfa complement(const Nfa& a, std::size_t cap) {
    Dfa d = determinize(a, cap);
    Nfa r;
    r.alphabet = a.alphabet;
    for (std::size_t q = 0; q < d.subsets.size(); ++q) {
        r.states.push_back("d" + std::to_string(q));
        if (!d.accepting[q]) r.accepting.insert(static_cast<int>(q));
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym)
            r.transitions.insert(
                {static_cast<int>(q), static_cast<int>(sym), d.next[q][static_cast<int>(sym)]});
    }
    r.initial = {d.initial};
    return r;
}

Nfa conj_quotient(const Nfa& b, const Nfa& a, std::size_t cap) {
    require_same_alphabet(a, b);
    return complement(conjoin(a, complement(b, cap)), cap);
}

Nfa par_quotient(const Nfa& b, const Nfa& a, std::size_t cap) {
    return conj_quotient(b, a, cap);
}

std::set<std::vector<int>> words_upto(const Nfa& a, int n) {
    std::set<std::vector<int>> out;
    auto succ = succ_table(a);
    auto accepts_from = [&](const std::set<int>& states) {
        for (int s : states)
            if (a.accepting.count(s)) return true;
        return false;
    };
    // breadth-first over words, re-simulating reachability per prefix
    std::deque<std::pair<std::vector<int>, std::set<int>>> work;
    work.push_back({{}, a.initial});
    while (!work.empty()) {
        auto [word, reach] = work.front();
        work.pop_front();
        if (accepts_from(reach)) out.insert(word);
        if (static_cast<int>(word.size()) == n) continue;
        for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
            std::set<int> nxt;
            for (int s : reach)
                for (int t : succ[s][sym]) nxt.insert(t);
            if (nxt.empty()) continue;  // dead prefix, no extension accepted
            auto w = word;
            w.push_back(static_cast<int>(sym));
            work.push_back({std::move(w), std::move(nxt)});
        }
    }
    return out;
}

}  // namespace specalg::fa
