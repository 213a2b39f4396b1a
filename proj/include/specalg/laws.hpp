#pragma once

#include <span>
#include <string>
#include <vector>

#include "specalg/theory.hpp"

namespace specalg {

/// The runtime-checkable laws. A1, A4, A9 and A17 are structural
/// (existence of the relation/operators) and live as TheoryHandle
/// capabilities instead.
enum class LawId {
    REFL,
    TRANS,
    UNIV,
    CONJ_TOTAL,
    CONJ_COMM,
    CONJ_LB,
    CONJ_GLB,
    PAR_TOTAL,
    PAR_COMM,
    PRECONG,
    PAR_UNIT,
    THM1,
    CONJ_QUOT_DEF,
    PAR_QUOT_DEF,
    THM3,
    CONJ_NULL,
    DISJ_LUB,
    DISJ_UB,
    DISTRIB,
    THM4_MAX,
    THM5_ASSOC,
    PAR_IDEMP,
    THM6_ASSOC,
};

inline constexpr int kLawCount = 23;

const std::vector<LawId>& all_laws();
std::string law_name(LawId law);
LawId law_from_name(const std::string& name);

/// Number of specification arguments the law quantifies over.
int law_arity(LawId law);

/// True when the law is an implication; such laws report how often the
/// premise was actually hit.
bool law_has_premise(LawId law);

struct LawOutcome {
    Tri value = Tri::Undefined;
    bool premise_hit = true;  // only meaningful for implication laws
};

/// Evaluates one law instance. Undefined when a required capability is
/// absent or the tuple is outside the operators' domain.
LawOutcome law_predicate(const TheoryHandle& t, LawId law, std::span<const Spec> args);

/// Mutual refinement; Undefined when refinement is undefined either way.
Tri equiv(const TheoryHandle& t, const Spec& a, const Spec& b);

}  // namespace specalg
