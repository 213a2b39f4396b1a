#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "specalg/laws.hpp"

using namespace specalg;
using namespace specalg::testing;

namespace {

LawOutcome eval(const TheoryHandle& t, LawId law, std::vector<Spec> args) {
    return law_predicate(t, law, args);
}

}  // namespace

TEST_CASE("law table is consistent") {
    CHECK(all_laws().size() == kLawCount);
    for (LawId law : all_laws()) {
        CHECK(law_from_name(law_name(law)) == law);
        CHECK(law_arity(law) >= 1);
        CHECK(law_arity(law) <= 3);
    }
    CHECK(law_arity(LawId::REFL) == 1);
    CHECK(law_arity(LawId::TRANS) == 3);
    CHECK(law_arity(LawId::CONJ_COMM) == 2);
    CHECK(law_arity(LawId::DISTRIB) == 3);
    CHECK(law_has_premise(LawId::TRANS));
    CHECK(law_has_premise(LawId::PRECONG));
    CHECK(law_has_premise(LawId::CONJ_GLB));
    CHECK(law_has_premise(LawId::DISJ_LUB));
    CHECK(law_has_premise(LawId::THM4_MAX));
    CHECK_FALSE(law_has_premise(LawId::REFL));
    CHECK_FALSE(law_has_premise(LawId::DISTRIB));
    CHECK_THROWS_AS(law_from_name("NOT_A_LAW"), std::invalid_argument);
}

TEST_CASE("fa theory satisfies the laws on hand-picked tuples") {
    auto t = make_fa_theory({"a"});
    Spec a = astar(), aa = aastar(), ja = just_a();

    CHECK(eval(t, LawId::REFL, {a}).value == Tri::True);
    CHECK(eval(t, LawId::UNIV, {aa}).value == Tri::True);
    CHECK(eval(t, LawId::CONJ_COMM, {a, aa}).value == Tri::True);
    CHECK(eval(t, LawId::CONJ_LB, {a, aa}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_COMM, {a, ja}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_UNIT, {aa}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_IDEMP, {a}).value == Tri::True);
    CHECK(eval(t, LawId::CONJ_QUOT_DEF, {aa, ja}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_QUOT_DEF, {aa, ja}).value == Tri::True);
    CHECK(eval(t, LawId::THM1, {a, aa}).value == Tri::True);
    CHECK(eval(t, LawId::THM3, {a, aa}).value == Tri::True);
    CHECK(eval(t, LawId::CONJ_NULL, {aa}).value == Tri::True);
    CHECK(eval(t, LawId::DISJ_UB, {a, aa}).value == Tri::True);
    CHECK(eval(t, LawId::DISTRIB, {a, aa, ja}).value == Tri::True);
    CHECK(eval(t, LawId::THM5_ASSOC, {a, aa, ja}).value == Tri::True);
    CHECK(eval(t, LawId::THM6_ASSOC, {a, aa, ja}).value == Tri::True);
}

TEST_CASE("implication laws report premise hits") {
    auto t = make_fa_theory({"a"});
    Spec a = astar(), aa = aastar(), ja = just_a();

    // aa <= a and a <= a: premise hit, conclusion holds
    auto hit = eval(t, LawId::TRANS, {aa, a, a});
    CHECK(hit.value == Tri::True);
    CHECK(hit.premise_hit);

    // a <= aa is false: vacuously true, premise not hit
    auto miss = eval(t, LawId::TRANS, {a, aa, ja});
    CHECK(miss.value == Tri::True);
    CHECK_FALSE(miss.premise_hit);

    auto glb = eval(t, LawId::CONJ_GLB, {a, Spec(fa::universal({"a"})), aa});
    CHECK(glb.value == Tri::True);
    CHECK(glb.premise_hit);

    auto pc = eval(t, LawId::PRECONG, {aa, a, ja});
    CHECK(pc.value == Tri::True);
    CHECK(pc.premise_hit);
}

TEST_CASE("equiv is mutual refinement") {
    auto t = make_fa_theory({"a"});
    Spec a = astar(), aa = aastar();
    CHECK(equiv(t, a, a) == Tri::True);
    CHECK(equiv(t, a, aa) == Tri::False);
    CHECK(equiv(t, Spec(fa::conjoin(astar(), aastar())), aa) == Tri::True);
}

TEST_CASE("mts meet rule breaks the parallel unit law") {
    auto t = make_mts_theory({"a"}, mts::Rule::Meet);
    // must_loop | U keeps the may loop but loses the must: not equivalent
    CHECK(eval(t, LawId::PAR_UNIT, {Spec(must_loop())}).value == Tri::False);
    CHECK(eval(t, LawId::PAR_UNIT, {Spec(may_loop())}).value == Tri::True);
    CHECK(eval(t, LawId::THM1, {Spec(must_loop()), Spec(no_edges())}).value == Tri::False);
}

TEST_CASE("mts join rule keeps the parallel unit law") {
    auto t = make_mts_theory({"a"}, mts::Rule::Join);
    CHECK(eval(t, LawId::PAR_UNIT, {Spec(must_loop())}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_UNIT, {Spec(may_loop())}).value == Tri::True);
    CHECK(eval(t, LawId::PAR_UNIT, {Spec(no_edges())}).value == Tri::True);
    // but independence of implementations is lost
    CHECK(eval(t, LawId::THM1, {Spec(no_edges()), Spec(must_loop())}).value == Tri::False);
}

TEST_CASE("mts laws that hold under both rules") {
    for (auto rule : {mts::Rule::Meet, mts::Rule::Join}) {
        auto t = make_mts_theory({"a"}, rule);
        Spec ml = must_loop(), yl = may_loop(), ne = no_edges();
        CHECK(eval(t, LawId::REFL, {ml}).value == Tri::True);
        CHECK(eval(t, LawId::UNIV, {ne}).value == Tri::True);
        CHECK(eval(t, LawId::CONJ_COMM, {ml, yl}).value == Tri::True);
        CHECK(eval(t, LawId::CONJ_LB, {ml, yl}).value == Tri::True);
        CHECK(eval(t, LawId::CONJ_NULL, {yl}).value == Tri::True);
        CHECK(eval(t, LawId::PAR_COMM, {ml, ne}).value == Tri::True);
        CHECK(eval(t, LawId::DISJ_UB, {ml, ne}).value == Tri::True);
        CHECK(eval(t, LawId::THM5_ASSOC, {ml, yl, ne}).value == Tri::True);
    }
}

TEST_CASE("mts quotients are absent, so quotient laws are undefined") {
    auto t = make_mts_theory({"a"}, mts::Rule::Meet);
    CHECK(eval(t, LawId::CONJ_QUOT_DEF, {Spec(may_loop()), Spec(must_loop())}).value ==
          Tri::Undefined);
    CHECK(eval(t, LawId::PAR_QUOT_DEF, {Spec(may_loop()), Spec(must_loop())}).value ==
          Tri::Undefined);
    CHECK(eval(t, LawId::THM3, {Spec(may_loop()), Spec(must_loop())}).value == Tri::Undefined);
    CHECK(eval(t, LawId::THM4_MAX,
               {Spec(may_loop()), Spec(must_loop()), Spec(no_edges())}).value == Tri::Undefined);
}

TEST_CASE("ia theory: partiality shows up as Undefined, not failure") {
    auto t = make_ia_theory();
    Spec p = producer(), q = deaf_consumer(), q2 = consumer();

    CHECK(eval(t, LawId::REFL, {p}).value == Tri::True);
    // no universal element
    CHECK(eval(t, LawId::UNIV, {p}).value == Tri::Undefined);
    CHECK(eval(t, LawId::PAR_UNIT, {p}).value == Tri::Undefined);
    // no conjunction capability
    CHECK(eval(t, LawId::CONJ_COMM, {p, q}).value == Tri::Undefined);
    // signature mismatch in refinement: undefined, never false
    CHECK(eval(t, LawId::TRANS, {p, q, q2}).value == Tri::Undefined);
    // non-composable pair: composition is not total here
    CHECK(eval(t, LawId::PAR_TOTAL, {p, p}).value == Tri::False);
    CHECK(eval(t, LawId::PAR_TOTAL, {p, q2}).value == Tri::True);
    // commutativity is checked only where both sides exist
    CHECK(eval(t, LawId::PAR_COMM, {p, q2}).value == Tri::True);
    // non-composable pairs are out of the operator's domain entirely
    CHECK(eval(t, LawId::PAR_COMM, {p, p}).value == Tri::Undefined);
}

TEST_CASE("precongruence law on ia composition") {
    auto t = make_ia_theory();
    Spec q = deaf_consumer(), q2 = consumer(), p = producer();
    // q2 <= q, so q2 | p and q | p must stay related where defined
    auto out = eval(t, LawId::PRECONG, {Spec(q2), Spec(q), p});
    CHECK(out.value == Tri::True);
    CHECK(out.premise_hit);
}
