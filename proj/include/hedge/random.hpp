#ifndef HEDGE_RANDOM_HPP
#define HEDGE_RANDOM_HPP

#include <random>

#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge {

using Rng = std::mt19937_64;

// Alphabet {a, b, c, ...} of the given size (at most 26).
Alphabet letters_alphabet(size_t size);

struct RandomAutomatonParams {
  uint32_t max_states = 6;
  double rule_density = 0.5;   // probability per (src, letter, dst) triple
  double apply_density = 0.1;  // probability per (left, arg, dst) triple (SHAs)
  double initial_probability = 0.4;
  double final_probability = 0.4;
};

// Uniform state count 1..max_states; every rule triple kept with
// rule_density; every state initial/final independently.
Nfa random_nfa(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p);

// Deterministic by construction: per (state, letter) a transition is drawn
// with rule_density and its target uniformly; at most one initial state
// (absent with small probability to exercise the degenerate cases).
Dfa random_dfa(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p);

Sha random_sha(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p);

Dsha random_dsha(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p);

// Random hedge with at most the given number of items and depth.
NestedWord random_hedge(Rng& rng, const Alphabet& sigma, size_t max_items, size_t max_depth);

}  // namespace hedge

#endif
