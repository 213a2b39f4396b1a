#pragma once

#include <string>
#include <vector>

#include "specalg/ia.hpp"
#include "specalg/mts.hpp"
#include "specalg/nfa.hpp"

namespace specalg::testing {

// acceptor of a* over {a}
inline fa::Nfa astar() {
    fa::Nfa n;
    n.alphabet = {"a"};
    n.states = {"s0"};
    n.initial = {0};
    n.accepting = {0};
    n.transitions = {{0, 0, 0}};
    return n;
}

// acceptor of (aa)* over {a}
inline fa::Nfa aastar() {
    fa::Nfa n;
    n.alphabet = {"a"};
    n.states = {"s0", "s1"};
    n.initial = {0};
    n.accepting = {0};
    n.transitions = {{0, 0, 1}, {1, 0, 0}};
    return n;
}

// acceptor of exactly {a}
inline fa::Nfa just_a() {
    fa::Nfa n;
    n.alphabet = {"a"};
    n.states = {"s0", "s1"};
    n.initial = {0};
    n.accepting = {1};
    n.transitions = {{0, 0, 1}};
    return n;
}

inline mts::Mts must_loop(const std::string& sym = "a") {
    mts::Mts m;
    m.alphabet = {sym};
    m.states = {"s0"};
    m.initial = {0};
    m.may = {{0, 0, 0}};
    m.must = {{0, 0, 0}};
    return m;
}

inline mts::Mts may_loop(const std::string& sym = "a") {
    mts::Mts m = must_loop(sym);
    m.must.clear();
    return m;
}

inline mts::Mts no_edges(const std::string& sym = "a") {
    mts::Mts m = must_loop(sym);
    m.may.clear();
    m.must.clear();
    return m;
}

// P: p0 -go?-> p1 -msg!-> p2, in {go}, out {msg}
inline ia::InterfaceAutomaton producer() {
    ia::InterfaceAutomaton p;
    p.inputs = {"go"};
    p.outputs = {"msg"};
    p.states = {"p0", "p1", "p2"};
    p.initial = 0;
    p.transitions = {{0, "go", 1}, {1, "msg", 2}};
    return p;
}

// Q: single state, in {msg}, no transitions
inline ia::InterfaceAutomaton deaf_consumer() {
    ia::InterfaceAutomaton q;
    q.inputs = {"msg"};
    q.states = {"q0"};
    q.initial = 0;
    return q;
}

// Q': q0 -msg?-> q1
inline ia::InterfaceAutomaton consumer() {
    ia::InterfaceAutomaton q;
    q.inputs = {"msg"};
    q.states = {"q0", "q1"};
    q.initial = 0;
    q.transitions = {{0, "msg", 1}};
    return q;
}

}  // namespace specalg::testing
