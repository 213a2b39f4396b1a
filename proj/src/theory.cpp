#include "specalg/theory.hpp"

#include "specalg/errors.hpp"

namespace specalg {

std::vector<std::string> default_alphabet(int size) {
    std::vector<std::string> a;
    for (int i = 0; i < size; ++i) a.push_back(std::string(1, char('a' + i)));
    return a;
}

TheoryHandle make_fa_theory(const std::vector<std::string>& alphabet) {
    TheoryHandle t;
    t.name = "fa";
    t.refines = [](const Spec& a, const Spec& b) {
        const auto& x = std::get<fa::Nfa>(a);
        const auto& y = std::get<fa::Nfa>(b);
        if (x.alphabet != y.alphabet) return Tri::Undefined;
        return tri(fa::refines(x, y));
    };
    t.composable = [](const Spec& a, const Spec& b) {
        return std::get<fa::Nfa>(a).alphabet == std::get<fa::Nfa>(b).alphabet;
    };
    t.compose = [](const Spec& a, const Spec& b) -> std::optional<Spec> {
        return fa::compose(std::get<fa::Nfa>(a), std::get<fa::Nfa>(b));
    };
    t.conjoin = [](const Spec& a, const Spec& b) -> Spec {
        return fa::conjoin(std::get<fa::Nfa>(a), std::get<fa::Nfa>(b));
    };
    t.disjoin = [](const Spec& a, const Spec& b) -> Spec {
        return fa::disjoin(std::get<fa::Nfa>(a), std::get<fa::Nfa>(b));
    };
    t.conj_quotient = [](const Spec& b, const Spec& a) -> Spec {
        return fa::conj_quotient(std::get<fa::Nfa>(b), std::get<fa::Nfa>(a));
    };
    t.par_quotient = [](const Spec& b, const Spec& a) -> Spec {
        return fa::par_quotient(std::get<fa::Nfa>(b), std::get<fa::Nfa>(a));
    };
    t.universal = Spec(fa::universal(alphabet));
    t.null_spec = Spec(fa::empty(alphabet));
    return t;
}

TheoryHandle make_mts_theory(const std::vector<std::string>& alphabet, mts::Rule rule) {
    TheoryHandle t;
    t.name = rule == mts::Rule::Meet ? "mts/meet" : "mts/join";
    t.refines = [](const Spec& a, const Spec& b) {
        const auto& x = std::get<mts::Mts>(a);
        const auto& y = std::get<mts::Mts>(b);
        if (x.alphabet != y.alphabet) return Tri::Undefined;
        return tri(mts::refines(x, y));
    };
    t.composable = [](const Spec& a, const Spec& b) {
        return std::get<mts::Mts>(a).alphabet == std::get<mts::Mts>(b).alphabet;
    };
    t.compose = [rule](const Spec& a, const Spec& b) -> std::optional<Spec> {
        return Spec(mts::compose(std::get<mts::Mts>(a), std::get<mts::Mts>(b), rule));
    };
    t.conjoin = [](const Spec& a, const Spec& b) -> Spec {
        return mts::conjoin(std::get<mts::Mts>(a), std::get<mts::Mts>(b));
    };
    t.disjoin = [](const Spec& a, const Spec& b) -> Spec {
        return mts::disjoin(std::get<mts::Mts>(a), std::get<mts::Mts>(b));
    };
    t.universal = Spec(mts::universal(alphabet));
    t.null_spec = Spec(mts::bottom(alphabet));
    return t;
}

TheoryHandle make_ia_theory() {
    TheoryHandle t;
    t.name = "ia";
    t.refines = [](const Spec& a, const Spec& b) {
        const auto& x = std::get<ia::InterfaceAutomaton>(a);
        const auto& y = std::get<ia::InterfaceAutomaton>(b);
        if (!x.same_signature(y)) return Tri::Undefined;
        return tri(ia::refines(x, y));
    };
    t.composable = [](const Spec& a, const Spec& b) {
        return ia::composable(std::get<ia::InterfaceAutomaton>(a),
                              std::get<ia::InterfaceAutomaton>(b));
    };
    t.compose = [](const Spec& a, const Spec& b) -> std::optional<Spec> {
        auto r = ia::optimistic(std::get<ia::InterfaceAutomaton>(a),
                                std::get<ia::InterfaceAutomaton>(b));
        if (!r) return std::nullopt;
        return Spec(std::move(*r));
    };
    // no universal, null, disjunction, conjunction or quotients: the
    // two-player setting is exactly where these are missing
    return t;
}

}  // namespace specalg
