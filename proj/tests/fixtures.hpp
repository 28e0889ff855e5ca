#ifndef HEDGE_TESTS_FIXTURES_HPP
#define HEDGE_TESTS_FIXTURES_HPP

#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace fixtures {

// The running example: a 3-state, 4-rule NFA for (x + eps)(x a)* with two
// initial states. Display names follow the usual drawing (states 2, 3, 4);
// dense ids are 0, 1, 2.
inline hedge::Nfa a0() {
  hedge::Nfa a;
  a.alphabet = hedge::Alphabet({"a", "x"});
  a.num_states = 3;
  a.names = {"2", "3", "4"};
  a.initial = {0, 2};  // displayed 2 and 4
  a.final = {0};       // displayed 2
  a.rules = {
      {0, 1, 1},  // 2 -x-> 3
      {1, 0, 0},  // 3 -a-> 2
      {2, 1, 0},  // 4 -x-> 2
      {2, 1, 1},  // 4 -x-> 3
  };
  a.normalize();
  return a;
}

// A DFA over {a} + {x} that is schema-clean for one-x but not perfect: it
// accepts the non-V-structure "x a x a", and state 1 is reached by both
// "a" and "x a". Language: (a + xa)(xa)*.
inline hedge::Dfa clean_but_not_perfect() {
  hedge::Dfa d;
  d.alphabet = hedge::Alphabet({"a", "x"});
  d.num_states = 3;
  d.initial = {0};
  d.final = {1};
  d.rules = {
      {0, 0, 1},  // 0 -a-> 1
      {0, 1, 2},  // 0 -x-> 2
      {1, 1, 2},  // 1 -x-> 2
      {2, 0, 1},  // 2 -a-> 1
  };
  d.normalize();
  return d;
}

// A0 and one-x over a one-letter alphabet drive most worked examples.
inline hedge::Alphabet sigma_a() { return hedge::Alphabet({"a"}); }

}  // namespace fixtures

#endif
