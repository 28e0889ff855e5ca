#ifndef HEDGE_NFA_HPP
#define HEDGE_NFA_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hedge/alphabet.hpp"

namespace hedge {

// Sorted, duplicate-free set of state ids.
using StateSet = std::vector<StateId>;

struct Rule {
  StateId src;
  SymbolId letter;
  StateId dst;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// Nondeterministic finite automaton on words. States are dense ids
// 0..num_states-1; missing transitions mean rejection (no implicit
// completion). `names` is optional display metadata and does not take
// part in equality.
struct Nfa {
  Alphabet alphabet;
  uint32_t num_states = 0;
  std::vector<std::string> names;  // empty, or one entry per state
  StateSet initial;
  StateSet final;
  std::vector<Rule> rules;  // kept sorted and duplicate-free

  // Sorts rules and state sets, validates references; call after building
  // one by hand. Throws std::invalid_argument on dangling references or
  // duplicate rules.
  void normalize();

  friend bool operator==(const Nfa& a, const Nfa& b) {
    return a.alphabet == b.alphabet && a.num_states == b.num_states &&
           a.initial == b.initial && a.final == b.final && a.rules == b.rules;
  }

  // |A| = |Q| + |Delta|.
  size_t size() const { return num_states + rules.size(); }

  std::string state_name(StateId q) const;
};

// A DFA is an Nfa satisfying is_deterministic(); checked at the boundaries
// that require it.
using Dfa = Nfa;

// Dense result-state id -> canonical sorted subset of source states.
struct SubsetStateMap {
  std::vector<StateSet> subsets;
};

// Dense pair-state id -> (left source state, right source state).
struct PairStateMap {
  std::vector<std::pair<StateId, StateId>> pairs;
  uint32_t left_num_states = 0;
  uint32_t right_num_states = 0;
};

// The alignment judgments Q ~ s of schema-based determinization. One
// result state per distinct subset (in `states`); `alignments` records
// every stored judgment (result state id, schema state) in discovery
// order -- one agenda push each.
struct AlignmentMap {
  SubsetStateMap states;
  std::vector<std::pair<StateId, StateId>> alignments;
};

// Agenda/store instrumentation for the worklist constructions.
struct RunStats {
  uint64_t agenda_pushes = 0;
  uint64_t agenda_pops = 0;
  uint64_t rules_emitted = 0;
};

// Cooperative cancellation for long constructions; checked periodically in
// the agenda loops.
struct Deadline {
  int64_t expires_at_ns = 0;  // steady clock
  static Deadline after_seconds(double s);
  bool expired() const;
};

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- Runs and acceptance ---------------------------------------------------

// All states reachable from `from` by reading w; the empty word returns
// `from` unchanged.
StateSet run_word(const Nfa& a, const StateSet& from, std::span<const SymbolId> w);

// Convenience: tokenizes against a.alphabet (throws naming an unknown letter).
StateSet run_word(const Nfa& a, const StateSet& from, std::string_view text);

bool accepts(const Nfa& a, std::span<const SymbolId> w);
bool accepts(const Nfa& a, std::string_view text);

// At most one initial state and at most one rule per (state, letter).
bool is_deterministic(const Nfa& a);

// --- Constructions ----------------------------------------------------------

struct DeterminizeResult {
  Dfa dfa;
  SubsetStateMap map;
  RunStats stats;
};

// Accessible determinization: subset construction restricted to subsets
// reachable from the initial subset. Empty initial set gives the
// zero-state automaton.
DeterminizeResult determinize(const Nfa& a, const Deadline* deadline = nullptr);

struct ProductResult {
  Nfa automaton;
  PairStateMap map;
  RunStats stats;
};

// Accessible product: pairs reachable from the initial pairs; recognizes
// L(a) n L(s). Throws std::invalid_argument on alphabet mismatch.
ProductResult product(const Nfa& a, const Nfa& s, const Deadline* deadline = nullptr);

// First-component projection of a paired automaton. State ids of the left
// source automaton are preserved; states without any surviving marking
// stay isolated. A zero-state input projects to the zero-state automaton.
Nfa project_first(const Nfa& paired, const PairStateMap& map);

struct CleanResult {
  Nfa automaton;
  RunStats stats;
};

// Schema-based cleaning scl_S(a) = project_first(product(a, s)). The schema
// must be deterministic. Stats are those of the underlying product run.
CleanResult schema_clean(const Nfa& a, const Dfa& schema, const Deadline* deadline = nullptr);

struct SchemaDetResult {
  Dfa dfa;
  AlignmentMap map;
  RunStats stats;
};

// Schema-based determinization det_S(a): subset construction that only
// materializes subsets alignable to a schema state. Equals
// schema_clean(determinize(a), s) by construction.
SchemaDetResult schema_determinize(const Nfa& a, const Dfa& schema,
                                   const Deadline* deadline = nullptr);

// --- Helpers ----------------------------------------------------------------

// States that carry any marking: initial, final, or touched by a rule.
StateSet live_states(const Nfa& a);

// Restricts to `keep` (old ids, in the order given) and renumbers densely.
// Rules touching dropped states are dropped.
Nfa restrict_states(const Nfa& a, const StateSet& keep);

// Display name "{n1,n2}" for a subset, using source display names.
std::string subset_display_name(const Nfa& source, const StateSet& subset);

}  // namespace hedge

#endif
