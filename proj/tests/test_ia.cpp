#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "specalg/errors.hpp"
#include "specalg/ia.hpp"

using namespace specalg;
using namespace specalg::testing;

TEST_CASE("signatures and composability") {
    auto p = producer();
    auto q = deaf_consumer();
    CHECK(p.kind("go") == ia::Kind::Input);
    CHECK(p.kind("msg") == ia::Kind::Output);
    CHECK_FALSE(p.kind("nope").has_value());
    CHECK(ia::composable(p, q));
    CHECK_FALSE(ia::composable(p, p));  // shared output "msg"

    ia::InterfaceAutomaton hidden = q;
    hidden.inputs = {};
    hidden.internals = {"msg"};
    CHECK_FALSE(ia::composable(p, hidden));  // internal leaks into p's signature
}

TEST_CASE("product marks missing-input error states") {
    auto prod = ia::product(producer(), deaf_consumer());
    // shared action msg becomes internal
    CHECK(prod.automaton.internals == std::vector<std::string>{"msg"});
    CHECK(prod.automaton.inputs == std::vector<std::string>{"go"});
    CHECK(prod.automaton.outputs.empty());
    // (p1, q0) is the error: P wants to emit msg, Q cannot take it
    REQUIRE(prod.error_states.size() == 1);
    int err = *prod.error_states.begin();
    auto pv = prod.provenance[static_cast<std::size_t>(err)];
    CHECK(pv == std::pair<int, int>{1, 0});
}

TEST_CASE("product with the willing consumer has no errors") {
    auto prod = ia::product(producer(), consumer());
    CHECK(prod.error_states.empty());
    // go then (internal) msg are both present
    CHECK(prod.automaton.transitions.size() == 2);
}

TEST_CASE("optimistic composition: environment can steer around the error") {
    auto opt = ia::optimistic(producer(), deaf_consumer());
    REQUIRE(opt.has_value());
    // the go-input into the error region is withheld; one silent state remains
    CHECK(opt->transitions.empty());
    CHECK(opt->states.size() == 1);
}

TEST_CASE("pessimistic composition: any path to an error is fatal") {
    CHECK_FALSE(ia::pessimistic(producer(), deaf_consumer()).has_value());
    auto ok = ia::pessimistic(producer(), consumer());
    REQUIRE(ok.has_value());
    CHECK(ok->transitions.size() == 2);
}

TEST_CASE("component-side pruning is the dual of optimistic") {
    auto prod = ia::product(producer(), deaf_consumer());
    // the move into the error is the input "go": the component cannot
    // withhold it, so the attractor over inputs swallows the initial state
    CHECK_FALSE(ia::comp_prune(prod).has_value());
    CHECK(ia::env_prune(prod).has_value());
}

TEST_CASE("control conflicts throw") {
    CHECK_THROWS_AS(ia::product(producer(), producer()), ControlConflict);
    CHECK_THROWS_AS(ia::optimistic(producer(), producer()), ControlConflict);
    CHECK_THROWS_AS(ia::pessimistic(producer(), producer()), ControlConflict);
}

TEST_CASE("alternating refinement") {
    auto q = deaf_consumer();
    auto q2 = consumer();
    // q2 accepts more inputs than q: q2 refines q, not conversely
    CHECK(ia::refines(q2, q));
    CHECK_FALSE(ia::refines(q, q2));
    CHECK(ia::refines(q, q));
    CHECK(ia::refines(q2, q2));

    // fewer outputs refine more outputs
    ia::InterfaceAutomaton chatty;
    chatty.outputs = {"msg"};
    chatty.states = {"s0"};
    chatty.initial = 0;
    chatty.transitions = {{0, "msg", 0}};
    ia::InterfaceAutomaton quiet = chatty;
    quiet.transitions.clear();
    CHECK(ia::refines(quiet, chatty));
    CHECK_FALSE(ia::refines(chatty, quiet));

    CHECK_THROWS_AS(ia::refines(producer(), deaf_consumer()), SignatureMismatch);
}

TEST_CASE("refinement contravariance is per-direction, not symmetric") {
    // mixed signature: input a, output b
    ia::InterfaceAutomaton full;
    full.inputs = {"a"};
    full.outputs = {"b"};
    full.states = {"s0"};
    full.initial = 0;
    full.transitions = {{0, "a", 0}, {0, "b", 0}};
    ia::InterfaceAutomaton in_only = full;
    in_only.transitions = {{0, "a", 0}};
    ia::InterfaceAutomaton out_only = full;
    out_only.transitions = {{0, "b", 0}};

    CHECK(ia::refines(in_only, full));        // inputs kept, output dropped
    CHECK_FALSE(ia::refines(full, in_only));  // emits b the abstract side lacks
    CHECK_FALSE(ia::refines(out_only, full)); // drops a required input
    CHECK(ia::refines(full, out_only));       // adds an input, keeps the output
}

TEST_CASE("enumerate_family counts and bounds") {
    // 1 state, 1 action: roles {absent, input, output} x targets {none, s0}
    // with absent forcing no edge: 1 + 2*2 = 5
    auto fam1 = ia::enumerate_family(1, 1);
    CHECK(fam1.size() == 5);
    for (const auto& a : fam1) ia::validate(a);
    // canonical order and no duplicates
    auto sorted = fam1;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::tuple(x.inputs, x.outputs, x.states, x.initial,
                          std::vector(x.transitions.begin(), x.transitions.end())) <
               std::tuple(y.inputs, y.outputs, y.states, y.initial,
                          std::vector(y.transitions.begin(), y.transitions.end()));
    });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    auto fam = ia::enumerate_family(2, 2);
    CHECK(fam.size() == 386);
    CHECK_THROWS_AS(ia::enumerate_family(3, 2), EnumerationBound);
    CHECK_THROWS_AS(ia::enumerate_family(2, 3), EnumerationBound);
}

TEST_CASE("no candidate is universal in the bounded family") {
    auto defeats = ia::no_universal_witness({1, 1});
    CHECK(defeats.size() == 5);
    for (const auto& d : defeats) {
        CHECK(d.reason != "not defeated");
        if (d.reason == "refinement fails") {
            CHECK(d.witness.same_signature(d.candidate));
            CHECK_FALSE(ia::refines(d.witness, d.candidate));
        } else {
            CHECK(d.reason == "signature mismatch");
            CHECK_FALSE(d.witness.same_signature(d.candidate));
        }
    }
}
