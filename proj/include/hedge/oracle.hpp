#ifndef HEDGE_ORACLE_HPP
#define HEDGE_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hedge/nested_word.hpp"
#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge::oracle {

struct EnumerationBound {
  size_t max_word_length = 0;
  size_t max_hedge_items = 0;
  size_t max_depth = 0;
};

// All words of length <= bound.max_word_length in length-then-lexicographic
// order (lexicographic by alphabet declaration order), each exactly once.
// The visitor returns false to stop early; the function returns false iff
// it was stopped.
bool enum_words(const Alphabet& sigma, const EnumerationBound& bound,
                const std::function<bool(const Word&)>& visit);

// All hedges with <= max_hedge_items items (letters and trees, counted
// recursively) and depth <= max_depth, each exactly once. Order: by total
// item count ascending; within a count, a hedge comes before another if its
// first item is a letter and the other's is a tree, or both first items are
// of the same kind and the earlier one is smaller (letters by alphabet
// order, trees by contents size then recursively), ties broken by the rest.
bool enum_hedges(const Alphabet& sigma, const EnumerationBound& bound,
                 const std::function<bool(const NestedWord&)>& visit);

// Number of hedges with exactly `items` items and depth <= max_depth, by
// the counting recurrence; cross-checks enum_hedges.
uint64_t count_hedges(size_t alphabet_size, size_t items, size_t max_depth);

// Textbook full powerset construction: one state per non-empty subset of
// source states (including inaccessible ones), encoded by bitmask order.
// Language equals L(a) exactly. Independent of the worklist determinizer.
// Throws if a has more than 12 states.
Dfa naive_determinize(const Nfa& a);

// Accessible part of a word automaton: BFS from the initial states.
Nfa accessible_part(const Nfa& a);

// States reachable from the initial states via rules (words), or from the
// initial and tree initial states via internal and apply rules (SHAs).
StateSet reachable_states(const Nfa& a);
StateSet reachable_states(const Sha& a);

struct WordCounterexample {
  Word word;
  bool in_first = false;
  bool in_second = false;
};

// True iff no word within the bound distinguishes a and b; otherwise the
// first counterexample in enumeration order. Alphabets must agree.
std::optional<WordCounterexample> lang_equal_bounded(const Nfa& a, const Nfa& b,
                                                     const EnumerationBound& bound);

struct HedgeCounterexample {
  NestedWord hedge;
  bool in_first = false;
  bool in_second = false;
};

std::optional<HedgeCounterexample> lang_equal_bounded(const Sha& a, const Sha& b,
                                                      const EnumerationBound& bound);

// State bijection between two deterministic accessible automata, found by
// parallel exploration from the initial states; absent if they are not
// isomorphic. Throws std::invalid_argument if either input is
// nondeterministic, has unreachable states, or exceeds 64 states.
std::optional<std::vector<StateId>> iso_check(const Nfa& a, const Nfa& b);
std::optional<std::vector<StateId>> iso_check(const Sha& a, const Sha& b);

}  // namespace hedge::oracle

#endif
