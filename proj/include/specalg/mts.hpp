#pragma once

#include <set>
#include <string>
#include <vector>

#include "specalg/nfa.hpp"  // reuses fa::Transition

namespace specalg::mts {

using Transition = fa::Transition;

enum class Rule { Meet, Join };

/// Modal transition system: may = allowed, must = required, must subseteq
/// may. The distinguished inconsistent value (bottom) is the null element
/// of conjunction; it carries an alphabet and nothing else.
struct Mts {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::set<int> initial;
    std::set<Transition> may;
    std::set<Transition> must;
    bool inconsistent = false;

    bool operator==(const Mts&) const = default;
};

void validate(const Mts& m);

Mts universal(const std::vector<std::string>& alphabet);
Mts bottom(const std::vector<std::string>& alphabet);

bool is_bottom(const Mts& m);

/// Per (state, action) at most one may-successor. Initial-set
/// nondeterminism does not count.
bool is_deterministic(const Mts& m);

/// Modal refinement: greatest fixpoint relation where every may of the
/// left is simulated by a may of the right and every must of the right
/// is matched by a must of the left. Bottom refines everything; only
/// bottom refines bottom.
bool refines(const Mts& a, const Mts& b);

/// Consistency-pruned conjunction (glb) of deterministic MTS.
Mts conjoin(const Mts& a, const Mts& b);

/// Synchronous composition. meet: must needs both musts. join: must when
/// at least one must and both may. No inconsistency pruning.
Mts compose(const Mts& a, const Mts& b, Rule rule);

/// Disjoint union (lub); bottom is its unit.
Mts disjoin(const Mts& a, const Mts& b);

/// Backward-pruning kernel: removes the must-closure of `bad`, deletes
/// may edges into the removed set, collapses to bottom if no initial
/// state survives.
Mts prune(const Mts& m, const std::set<int>& bad);

}  // namespace specalg::mts
