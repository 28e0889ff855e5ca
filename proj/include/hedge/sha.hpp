#ifndef HEDGE_SHA_HPP
#define HEDGE_SHA_HPP

#include <string>
#include <vector>

#include "hedge/nested_word.hpp"
#include "hedge/nfa.hpp"

namespace hedge {

struct ApplyRule {
  StateId left;  // state of the nested word so far
  StateId arg;   // state the subtree evaluated to
  StateId dst;
  friend auto operator<=>(const ApplyRule&, const ApplyRule&) = default;
};

// Stepwise hedge automaton: an NFA extended with tree initial states and
// ternary apply rules (left, arg, dst).
struct Sha {
  Alphabet alphabet;
  uint32_t num_states = 0;
  std::vector<std::string> names;
  StateSet initial;
  StateSet final;
  StateSet tree_initial;
  std::vector<Rule> rules;
  std::vector<ApplyRule> apply_rules;

  void normalize();

  friend bool operator==(const Sha& a, const Sha& b) {
    return a.alphabet == b.alphabet && a.num_states == b.num_states &&
           a.initial == b.initial && a.final == b.final &&
           a.tree_initial == b.tree_initial && a.rules == b.rules &&
           a.apply_rules == b.apply_rules;
  }

  // |A| = |Q| + |Delta|, internal and apply rules both counted.
  size_t size() const { return num_states + rules.size() + apply_rules.size(); }

  std::string state_name(StateId q) const;
};

using Dsha = Sha;

// --- Evaluation --------------------------------------------------------------

// Letters step via internal rules; a tree item is evaluated from the tree
// initial states and consumed through the apply rules; the empty hedge
// returns `from` unchanged. Throws on letters outside the alphabet.
StateSet eval_hedge(const Sha& a, const StateSet& from, const NestedWord& h);

bool accepts_nested(const Sha& a, const NestedWord& h);

// At most one initial and one tree initial state; internal rules a partial
// function on Q x Sigma; apply rules a partial function on Q x Q.
bool is_deterministic_sha(const Sha& a);

// --- Constructions -----------------------------------------------------------

struct ShaDeterminizeResult {
  Dsha dsha;
  SubsetStateMap map;
  RunStats stats;
};

ShaDeterminizeResult determinize_sha(const Sha& a, const Deadline* deadline = nullptr);

struct ShaProductResult {
  Sha automaton;
  PairStateMap map;
  RunStats stats;
};

ShaProductResult product_sha(const Sha& a, const Sha& s, const Deadline* deadline = nullptr);

Sha project_first_sha(const Sha& paired, const PairStateMap& map);

struct ShaCleanResult {
  Sha automaton;
  RunStats stats;
};

ShaCleanResult schema_clean_sha(const Sha& a, const Dsha& schema,
                                const Deadline* deadline = nullptr);

struct ShaSchemaDetResult {
  Dsha dsha;
  AlignmentMap map;
  RunStats stats;
};

ShaSchemaDetResult schema_determinize_sha(const Sha& a, const Dsha& schema,
                                          const Deadline* deadline = nullptr);

// --- Helpers -----------------------------------------------------------------

StateSet live_states(const Sha& a);
Sha restrict_states(const Sha& a, const StateSet& keep);

// Any NFA is a SHA with no tree initial states and no apply rules, and
// conversely for SHAs of that shape.
Sha embed_nfa(const Nfa& a);
Nfa word_part(const Sha& a);

}  // namespace hedge

#endif
