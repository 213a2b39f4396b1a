#include "specalg/laws.hpp"

#include <map>
#include <stdexcept>

#include "specalg/errors.hpp"

namespace specalg {

namespace {

const std::map<LawId, std::string>& name_table() {
    static const std::map<LawId, std::string> t = {
        {LawId::REFL, "REFL"},
        {LawId::TRANS, "TRANS"},
        {LawId::UNIV, "UNIV"},
        {LawId::CONJ_TOTAL, "CONJ_TOTAL"},
        {LawId::CONJ_COMM, "CONJ_COMM"},
        {LawId::CONJ_LB, "CONJ_LB"},
        {LawId::CONJ_GLB, "CONJ_GLB"},
        {LawId::PAR_TOTAL, "PAR_TOTAL"},
        {LawId::PAR_COMM, "PAR_COMM"},
        {LawId::PRECONG, "PRECONG"},
        {LawId::PAR_UNIT, "PAR_UNIT"},
        {LawId::THM1, "THM1"},
        {LawId::CONJ_QUOT_DEF, "CONJ_QUOT_DEF"},
        {LawId::PAR_QUOT_DEF, "PAR_QUOT_DEF"},
        {LawId::THM3, "THM3"},
        {LawId::CONJ_NULL, "CONJ_NULL"},
        {LawId::DISJ_LUB, "DISJ_LUB"},
        {LawId::DISJ_UB, "DISJ_UB"},
        {LawId::DISTRIB, "DISTRIB"},
        {LawId::THM4_MAX, "THM4_MAX"},
        {LawId::THM5_ASSOC, "THM5_ASSOC"},
        {LawId::PAR_IDEMP, "PAR_IDEMP"},
        {LawId::THM6_ASSOC, "THM6_ASSOC"},
    };
    return t;
}

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::Undefined || b == Tri::Undefined) return Tri::Undefined;
    if (a == Tri::False || b == Tri::False) return Tri::False;
    return Tri::True;
}

}  // namespace

const std::vector<LawId>& all_laws() {
    static const std::vector<LawId> laws = [] {
        std::vector<LawId> v;
        for (const auto& [id, name] : name_table()) v.push_back(id);
        return v;
    }();
    return laws;
}

std::string law_name(LawId law) { return name_table().at(law); }

LawId law_from_name(const std::string& name) {
    for (const auto& [id, n] : name_table())
        if (n == name) return id;
    throw std::invalid_argument("unknown law: " + name);
}

int law_arity(LawId law) {
    switch (law) {
        case LawId::REFL:
        case LawId::UNIV:
        case LawId::PAR_UNIT:
        case LawId::CONJ_NULL:
        case LawId::PAR_IDEMP:
            return 1;
        case LawId::CONJ_TOTAL:
        case LawId::CONJ_COMM:
        case LawId::CONJ_LB:
        case LawId::PAR_TOTAL:
        case LawId::PAR_COMM:
        case LawId::THM1:
        case LawId::CONJ_QUOT_DEF:
        case LawId::PAR_QUOT_DEF:
        case LawId::THM3:
        case LawId::DISJ_UB:
            return 2;
        case LawId::TRANS:
        case LawId::CONJ_GLB:
        case LawId::PRECONG:
        case LawId::DISJ_LUB:
        case LawId::THM4_MAX:
        case LawId::THM5_ASSOC:
        case LawId::THM6_ASSOC:
        case LawId::DISTRIB:
            return 3;
    }
    return 0;
}

bool law_has_premise(LawId law) {
    switch (law) {
        case LawId::TRANS:
        case LawId::CONJ_GLB:
        case LawId::PRECONG:
        case LawId::DISJ_LUB:
        case LawId::THM4_MAX:
            return true;
        default:
            return false;
    }
}

Tri equiv(const TheoryHandle& t, const Spec& a, const Spec& b) {
    return tri_and(t.refines(a, b), t.refines(b, a));
}

namespace {

LawOutcome eval(const TheoryHandle& t, LawId law, std::span<const Spec> args) {
    auto ref = [&](const Spec& a, const Spec& b) { return t.refines(a, b); };
    auto undefined = [] { return LawOutcome{Tri::Undefined, true}; };
    auto plain = [](Tri v) { return LawOutcome{v, true}; };
    auto implication = [&](Tri premise, auto conclusion) -> LawOutcome {
        if (premise == Tri::Undefined) return {Tri::Undefined, false};
        if (premise == Tri::False) return {Tri::True, false};
        return {conclusion(), true};
    };

    switch (law) {
        case LawId::REFL:
            return plain(ref(args[0], args[0]));
        case LawId::TRANS:
            return implication(tri_and(ref(args[0], args[1]), ref(args[1], args[2])),
                               [&] { return ref(args[0], args[2]); });
        case LawId::UNIV:
            if (!t.universal) return undefined();
            return plain(ref(args[0], *t.universal));
        case LawId::CONJ_TOTAL: {
            if (!t.conjoin) return undefined();
            if (!t.composable(args[0], args[1])) return undefined();
            (void)t.conjoin(args[0], args[1]);
            return plain(Tri::True);
        }
        case LawId::CONJ_COMM: {
            if (!t.conjoin || !t.composable(args[0], args[1])) return undefined();
            return plain(ref(t.conjoin(args[0], args[1]), t.conjoin(args[1], args[0])));
        }
        case LawId::CONJ_LB: {
            if (!t.conjoin || !t.composable(args[0], args[1])) return undefined();
            Spec ab = t.conjoin(args[0], args[1]);
            return plain(tri_and(ref(ab, args[0]), ref(ab, args[1])));
        }
        case LawId::CONJ_GLB: {
            if (!t.conjoin || !t.composable(args[0], args[1])) return undefined();
            return implication(tri_and(ref(args[2], args[0]), ref(args[2], args[1])),
                               [&] { return ref(args[2], t.conjoin(args[0], args[1])); });
        }
        case LawId::PAR_TOTAL:
            return plain(tri(t.composable(args[0], args[1])));
        case LawId::PAR_COMM: {
            if (!t.composable(args[0], args[1])) return undefined();
            auto ab = t.compose(args[0], args[1]);
            auto ba = t.compose(args[1], args[0]);
            if (!ab && !ba) return plain(Tri::True);  // incompatible both ways
            if (!ab || !ba) return plain(Tri::False);
            return plain(ref(*ab, *ba));
        }
        case LawId::PRECONG: {
            if (!t.composable(args[0], args[2]) || !t.composable(args[1], args[2]))
                return undefined();
            return implication(ref(args[0], args[1]), [&]() -> Tri {
                auto ac = t.compose(args[0], args[2]);
                auto bc = t.compose(args[1], args[2]);
                if (!ac && !bc) return Tri::True;
                if (!ac || !bc) return Tri::Undefined;
                return ref(*ac, *bc);
            });
        }
        case LawId::PAR_UNIT: {
            if (!t.universal || !t.composable(args[0], *t.universal)) return undefined();
            auto au = t.compose(args[0], *t.universal);
            if (!au) return undefined();
            return plain(ref(*au, args[0]));
        }
        case LawId::THM1: {
            if (!t.conjoin || !t.composable(args[0], args[1])) return undefined();
            auto ab = t.compose(args[0], args[1]);
            if (!ab) return undefined();
            return plain(ref(*ab, t.conjoin(args[0], args[1])));
        }
        case LawId::CONJ_QUOT_DEF: {
            if (!t.conjoin || !t.conj_quotient || !t.composable(args[0], args[1]))
                return undefined();
            Spec q = t.conj_quotient(args[1], args[0]);
            return plain(ref(t.conjoin(args[0], q), args[1]));
        }
        case LawId::PAR_QUOT_DEF: {
            if (!t.par_quotient || !t.composable(args[0], args[1])) return undefined();
            Spec q = t.par_quotient(args[1], args[0]);
            if (!t.composable(args[0], q)) return undefined();
            auto c = t.compose(args[0], q);
            if (!c) return undefined();
            return plain(ref(*c, args[1]));
        }
        case LawId::THM3: {
            if (!t.conj_quotient || !t.par_quotient || !t.composable(args[0], args[1]))
                return undefined();
            return plain(
                ref(t.conj_quotient(args[1], args[0]), t.par_quotient(args[1], args[0])));
        }
        case LawId::CONJ_NULL: {
            if (!t.conjoin || !t.null_spec) return undefined();
            return plain(ref(t.conjoin(args[0], *t.null_spec), *t.null_spec));
        }
        case LawId::DISJ_LUB: {
            if (!t.disjoin || !t.composable(args[0], args[1])) return undefined();
            return implication(tri_and(ref(args[0], args[2]), ref(args[1], args[2])),
                               [&] { return ref(t.disjoin(args[0], args[1]), args[2]); });
        }
        case LawId::DISJ_UB: {
            if (!t.disjoin || !t.composable(args[0], args[1])) return undefined();
            Spec d = t.disjoin(args[0], args[1]);
            return plain(tri_and(ref(args[0], d), ref(args[1], d)));
        }
        case LawId::DISTRIB: {
            // premise-free equivalent of the implication form: taking the
            // implication's bound to be the right-hand side recovers this,
            // and transitivity recovers the implication from it
            if (!t.conjoin || !t.disjoin) return undefined();
            if (!t.composable(args[0], args[1]) || !t.composable(args[0], args[2]))
                return undefined();
            Spec lhs = t.conjoin(args[0], t.disjoin(args[1], args[2]));
            Spec rhs = t.disjoin(t.conjoin(args[0], args[1]), t.conjoin(args[0], args[2]));
            return plain(ref(lhs, rhs));
        }
        case LawId::THM4_MAX: {
            if (!t.conjoin || !t.conj_quotient || !t.composable(args[0], args[1]) ||
                !t.composable(args[0], args[2]))
                return undefined();
            return implication(ref(t.conjoin(args[0], args[2]), args[1]), [&] {
                return ref(args[2], t.conj_quotient(args[1], args[0]));
            });
        }
        case LawId::THM5_ASSOC: {
            if (!t.conjoin || !t.composable(args[0], args[1]) ||
                !t.composable(args[1], args[2]))
                return undefined();
            return plain(ref(t.conjoin(t.conjoin(args[0], args[1]), args[2]),
                             t.conjoin(args[0], t.conjoin(args[1], args[2]))));
        }
        case LawId::PAR_IDEMP: {
            if (!t.composable(args[0], args[0])) return undefined();
            auto aa = t.compose(args[0], args[0]);
            if (!aa) return undefined();
            return plain(ref(args[0], *aa));
        }
        case LawId::THM6_ASSOC: {
            if (!t.composable(args[0], args[1])) return undefined();
            auto ab = t.compose(args[0], args[1]);
            if (!ab) return undefined();
            if (!t.composable(args[1], args[2])) return undefined();
            auto bc = t.compose(args[1], args[2]);
            if (!bc) return undefined();
            if (!t.composable(*ab, args[2]) || !t.composable(args[0], *bc)) return undefined();
            auto left = t.compose(*ab, args[2]);
            auto right = t.compose(args[0], *bc);
            if (!left && !right) return plain(Tri::True);
            if (!left || !right) return plain(Tri::Undefined);
            return plain(ref(*left, *right));
        }
    }
    return {Tri::Undefined, false};
}

}  // namespace

LawOutcome law_predicate(const TheoryHandle& t, LawId law, std::span<const Spec> args) {
    if (static_cast<int>(args.size()) != law_arity(law))
        throw std::invalid_argument("law arity mismatch");
    try {
        return eval(t, law, args);
    } catch (const AlphabetMismatch&) {
        return {Tri::Undefined, false};
    } catch (const SignatureMismatch&) {
        return {Tri::Undefined, false};
    } catch (const ControlConflict&) {
        return {Tri::Undefined, false};
    } catch (const NondeterministicMts&) {
        return {Tri::Undefined, false};
    } catch (const StateBlowup&) {
        return {Tri::Undefined, false};
    }
}

}  // namespace specalg
