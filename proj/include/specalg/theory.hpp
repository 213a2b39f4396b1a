#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "specalg/ia.hpp"
#include "specalg/mts.hpp"
#include "specalg/nfa.hpp"

namespace specalg {

using Spec = std::variant<fa::Nfa, mts::Mts, ia::InterfaceAutomaton>;

/// Three-valued outcome: Undefined marks partiality (signature mismatch,
/// control conflict, absent capability) so it never masquerades as a
/// law violation.
enum class Tri { False, True, Undefined };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

/// Capability record binding one theory's operations for the audit.
/// Absent std::function members / empty optionals mean the theory lacks
/// the capability; laws needing it come out inapplicable.
struct TheoryHandle {
    std::string name;

    std::function<Tri(const Spec&, const Spec&)> refines;
    std::function<bool(const Spec&, const Spec&)> composable;
    // nullopt = incompatible (a modeled outcome, not an error)
    std::function<std::optional<Spec>(const Spec&, const Spec&)> compose;

    std::function<Spec(const Spec&, const Spec&)> conjoin;
    std::function<Spec(const Spec&, const Spec&)> disjoin;
    std::function<Spec(const Spec&, const Spec&)> conj_quotient;  // (b, a) -> largest x, a&x <= b
    std::function<Spec(const Spec&, const Spec&)> par_quotient;

    std::optional<Spec> universal;
    std::optional<Spec> null_spec;
};

TheoryHandle make_fa_theory(const std::vector<std::string>& alphabet);
TheoryHandle make_mts_theory(const std::vector<std::string>& alphabet, mts::Rule rule);
TheoryHandle make_ia_theory();

/// Alphabet {"a", "b", ...} of the given size.
std::vector<std::string> default_alphabet(int size);

}  // namespace specalg
