// automaton.hpp -- bottom-up tree automata over ranked vocabularies:
// runs and membership, epsilon elimination, determinization, product,
// emptiness and bounded language enumeration.

#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fcm/rewrite.hpp"
#include "fcm/term.hpp"

namespace fcm {

struct State {
    std::string name;

    friend auto operator<=>(const State&, const State&) = default;
};

/// f(q1, ..., qn) -> target, with |args| = arity of symbol.
struct NormalizedTransition {
    std::string symbol;
    std::vector<State> args;
    State target;

    friend auto operator<=>(const NormalizedTransition&, const NormalizedTransition&) = default;
};

/// source -> target between states.
struct EpsilonTransition {
    State source;
    State target;

    friend auto operator<=>(const EpsilonTransition&, const EpsilonTransition&) = default;
};

using Transition = std::variant<NormalizedTransition, EpsilonTransition>;

/// A (bottom-up, possibly nondeterministic) finite tree automaton.
/// Immutable after construction; construction validates that final states
/// and transition states are declared and that transition symbols exist in
/// the vocabulary at the right arity.
class TreeAutomaton {
public:
    TreeAutomaton(Vocabulary vocabulary, std::vector<State> states, std::set<State> final,
                  std::vector<Transition> transitions);

    const Vocabulary& vocabulary() const { return vocabulary_; }
    const std::vector<State>& states() const { return states_; }
    const std::set<State>& final() const { return final_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    bool has_epsilon() const;

private:
    Vocabulary vocabulary_;
    std::vector<State> states_;
    std::set<State> final_;
    std::vector<Transition> transitions_;
};

/// {q | t =>* q}, computed bottom-up with epsilon closure at every node.
/// t must be ground and over the automaton's vocabulary.
std::set<State> reachable_states(const TreeAutomaton& a, const Term& t);

/// t is accepted in some final state.
bool accepts(const TreeAutomaton& a, const Term& t);

/// t reaches the given state.
bool accepts_in(const TreeAutomaton& a, const Term& t, const State& q);

/// Language-equivalent automaton without epsilon transitions.
TreeAutomaton eliminate_epsilon(const TreeAutomaton& a);

/// Language-equivalent automaton that is epsilon-free, bottom-up
/// deterministic and complete: for every symbol and argument tuple there
/// is exactly one transition (a non-final sink absorbs the rest).
TreeAutomaton determinize(const TreeAutomaton& a);

/// Automaton recognizing L(a1) of L(a2) intersected. Inputs are
/// epsilon-eliminated first; vocabularies must agree.
TreeAutomaton product(const TreeAutomaton& a1, const TreeAutomaton& a2);

/// True iff no final state is reachable in the bottom-up fixpoint.
bool is_empty(const TreeAutomaton& a);

/// {t in L(a) | depth(t) <= max_depth}, in term order.
std::vector<Term> enumerate_language(const TreeAutomaton& a, int max_depth);

} // namespace fcm
