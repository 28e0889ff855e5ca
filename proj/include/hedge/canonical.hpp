#ifndef HEDGE_CANONICAL_HPP
#define HEDGE_CANONICAL_HPP

#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge {

// Renumbers an automaton by its own structure: breadth-first from the
// initial (then tree initial) states, letters in alphabet order, apply
// arguments in discovery order. States not reachable that way are dropped.
// Deterministic isomorphic automata come out byte-identical under
// serialize().
Nfa canonical_form(const Nfa& a);
Sha canonical_form(const Sha& a);

}  // namespace hedge

#endif
