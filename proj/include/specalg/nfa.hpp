#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace specalg::fa {

struct Transition {
    int src;
    int sym;
    int dst;
    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton over a fixed, nonempty alphabet.
/// Specification under language-inclusion refinement. Initial is a
/// nonempty *set* of states so disjunction is a plain disjoint union.
struct Nfa {
    std::vector<std::string> alphabet;  // sorted, unique, nonempty
    std::vector<std::string> states;    // sorted for parsed/generated values
    std::set<int> initial;
    std::set<int> accepting;
    std::set<Transition> transitions;

    bool operator==(const Nfa&) const = default;
};

/// Throws std::invalid_argument if structural invariants are violated.
void validate(const Nfa& a);

Nfa universal(const std::vector<std::string>& alphabet);
Nfa empty(const std::vector<std::string>& alphabet);

/// L(a) subseteq L(b)? Emptiness of L(a) & ~L(b) via subset construction
/// on b. cap = 0 uses the configured determinization cap.
bool refines(const Nfa& a, const Nfa& b, std::size_t cap = 0);

/// Synchronous product; L = L(a) & L(b).
Nfa conjoin(const Nfa& a, const Nfa& b);

/// Same construction as conjoin; a distinct operation so the parallel
/// laws are audited independently of the conjunction laws.
Nfa compose(const Nfa& a, const Nfa& b);

/// Disjoint union; L = L(a) | L(b).
Nfa disjoin(const Nfa& a, const Nfa& b);

/// Complete deterministic automaton accepting the complement language.
Nfa complement(const Nfa& a, std::size_t cap = 0);

/// Largest X with L(a) & L(x) subseteq L(b): ~(L(a) & ~L(b)).
Nfa conj_quotient(const Nfa& b, const Nfa& a, std::size_t cap = 0);
Nfa par_quotient(const Nfa& b, const Nfa& a, std::size_t cap = 0);

/// Brute-force oracle: all words of length <= n in L(a), by direct NFA
/// simulation over every word. Independent of the refinement path.
std::set<std::vector<int>> words_upto(const Nfa& a, int n);

/// Determinization cap: SPECALG_MAX_DET_STATES or 4096.
std::size_t max_det_states();

}  // namespace specalg::fa
