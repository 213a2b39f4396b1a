#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace specalg::ia {

enum class Kind { Input, Output, Internal };

struct Transition {
    int src;
    std::string action;
    int dst;
    auto operator<=>(const Transition&) const = default;
};

/// Two-player automaton: inputs are environment moves, outputs and
/// internals are component moves. Deterministic per (state, action);
/// not input-enabled — missing inputs create error states in products.
struct InterfaceAutomaton {
    std::vector<std::string> inputs;     // sorted, pairwise disjoint sets
    std::vector<std::string> outputs;
    std::vector<std::string> internals;
    std::vector<std::string> states;
    int initial = 0;
    std::set<Transition> transitions;

    bool operator==(const InterfaceAutomaton&) const = default;

    std::optional<Kind> kind(const std::string& action) const;
    bool same_signature(const InterfaceAutomaton& other) const;
};

void validate(const InterfaceAutomaton& a);

struct ProductWithErrors {
    InterfaceAutomaton automaton;
    std::set<int> error_states;
    std::vector<std::pair<int, int>> provenance;  // product state -> (a state, b state)
};

/// No control conflict: disjoint outputs, internals private to each side.
bool composable(const InterfaceAutomaton& a, const InterfaceAutomaton& b);

/// Raw product: shared actions synchronize and become internal; an error
/// state is one where a shared action is output-enabled on one side and
/// not input-enabled on the other. Throws ControlConflict.
ProductWithErrors product(const InterfaceAutomaton& a, const InterfaceAutomaton& b);

/// Optimistic pruning: attractor of the errors under component moves
/// (outputs/internals); the environment may withhold inputs leading in.
/// nullopt = incompatible (no helpful context exists).
std::optional<InterfaceAutomaton> env_prune(const ProductWithErrors& prod);

/// Dual pruning: attractor under environment moves (inputs); the
/// component may withhold its own moves leading in.
std::optional<InterfaceAutomaton> comp_prune(const ProductWithErrors& prod);

/// Pessimistic composition: drop every state from which an error is
/// reachable at all. Throws ControlConflict.
std::optional<InterfaceAutomaton> pessimistic(const InterfaceAutomaton& a,
                                              const InterfaceAutomaton& b);

/// env_prune(product(a, b)). Throws ControlConflict.
std::optional<InterfaceAutomaton> optimistic(const InterfaceAutomaton& a,
                                             const InterfaceAutomaton& b);

/// Alternating refinement: a refined interface accepts at least the
/// abstract one's inputs and emits at most its outputs/internals.
/// Throws SignatureMismatch.
bool refines(const InterfaceAutomaton& a, const InterfaceAutomaton& b);

struct UniversalSearchBounds {
    int max_states = 2;
    int action_count = 2;
};

struct UniversalDefeat {
    InterfaceAutomaton candidate;
    InterfaceAutomaton witness;
    std::string reason;  // "signature mismatch" or "refinement fails"
};

/// Exhaustive bounded search showing no candidate in the family is
/// refined by every automaton of the family.
std::vector<UniversalDefeat> no_universal_witness(const UniversalSearchBounds& bounds);

/// Every structurally valid automaton of the bounded family, canonical order.
std::vector<InterfaceAutomaton> enumerate_family(int max_states, int action_count);

}  // namespace specalg::ia
