#include "hedge/random.hpp"

#include <stdexcept>

namespace hedge {

Alphabet letters_alphabet(size_t size) {
  if (size > 26) throw std::invalid_argument("letters_alphabet: at most 26 symbols");
  std::vector<std::string> symbols;
  for (size_t i = 0; i < size; ++i) symbols.push_back(std::string(1, (char)('a' + i)));
  return Alphabet(std::move(symbols));
}

namespace {

bool flip(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

uint32_t pick(Rng& rng, uint32_t n) {
  return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng);
}

StateSet random_state_set(Rng& rng, uint32_t n, double p) {
  StateSet out;
  for (StateId q = 0; q < n; ++q) {
    if (flip(rng, p)) out.push_back(q);
  }
  return out;
}

}  // namespace

Nfa random_nfa(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p) {
  Nfa a;
  a.alphabet = sigma;
  a.num_states = 1 + pick(rng, p.max_states);
  a.initial = random_state_set(rng, a.num_states, p.initial_probability);
  a.final = random_state_set(rng, a.num_states, p.final_probability);
  for (StateId src = 0; src < a.num_states; ++src) {
    for (SymbolId letter = 0; letter < sigma.size(); ++letter) {
      for (StateId dst = 0; dst < a.num_states; ++dst) {
        if (flip(rng, p.rule_density)) a.rules.push_back(Rule{src, letter, dst});
      }
    }
  }
  a.normalize();
  return a;
}

Dfa random_dfa(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p) {
  Dfa a;
  a.alphabet = sigma;
  a.num_states = 1 + pick(rng, p.max_states);
  if (!flip(rng, 0.05)) a.initial = {pick(rng, a.num_states)};
  a.final = random_state_set(rng, a.num_states, p.final_probability);
  for (StateId src = 0; src < a.num_states; ++src) {
    for (SymbolId letter = 0; letter < sigma.size(); ++letter) {
      if (flip(rng, p.rule_density)) {
        a.rules.push_back(Rule{src, letter, pick(rng, a.num_states)});
      }
    }
  }
  a.normalize();
  return a;
}

Sha random_sha(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p) {
  Sha a;
  a.alphabet = sigma;
  a.num_states = 1 + pick(rng, p.max_states);
  a.initial = random_state_set(rng, a.num_states, p.initial_probability);
  a.final = random_state_set(rng, a.num_states, p.final_probability);
  a.tree_initial = random_state_set(rng, a.num_states, p.initial_probability);
  for (StateId src = 0; src < a.num_states; ++src) {
    for (SymbolId letter = 0; letter < sigma.size(); ++letter) {
      for (StateId dst = 0; dst < a.num_states; ++dst) {
        if (flip(rng, p.rule_density)) a.rules.push_back(Rule{src, letter, dst});
      }
    }
  }
  for (StateId left = 0; left < a.num_states; ++left) {
    for (StateId arg = 0; arg < a.num_states; ++arg) {
      for (StateId dst = 0; dst < a.num_states; ++dst) {
        if (flip(rng, p.apply_density)) a.apply_rules.push_back(ApplyRule{left, arg, dst});
      }
    }
  }
  a.normalize();
  return a;
}

Dsha random_dsha(Rng& rng, const Alphabet& sigma, const RandomAutomatonParams& p) {
  Dsha a;
  a.alphabet = sigma;
  a.num_states = 1 + pick(rng, p.max_states);
  if (!flip(rng, 0.05)) a.initial = {pick(rng, a.num_states)};
  if (!flip(rng, 0.05)) a.tree_initial = {pick(rng, a.num_states)};
  a.final = random_state_set(rng, a.num_states, p.final_probability);
  for (StateId src = 0; src < a.num_states; ++src) {
    for (SymbolId letter = 0; letter < sigma.size(); ++letter) {
      if (flip(rng, p.rule_density)) {
        a.rules.push_back(Rule{src, letter, pick(rng, a.num_states)});
      }
    }
  }
  for (StateId left = 0; left < a.num_states; ++left) {
    for (StateId arg = 0; arg < a.num_states; ++arg) {
      if (flip(rng, p.apply_density)) {
        a.apply_rules.push_back(ApplyRule{left, arg, pick(rng, a.num_states)});
      }
    }
  }
  a.normalize();
  return a;
}

NestedWord random_hedge(Rng& rng, const Alphabet& sigma, size_t max_items, size_t max_depth) {
  NestedWord out;
  if (max_items == 0) return out;
  size_t budget = pick(rng, (uint32_t)max_items + 1);
  while (budget > 0) {
    if (max_depth > 0 && flip(rng, 0.4)) {
      size_t inner_budget = pick(rng, (uint32_t)budget);
      out.append(NestedWord::tree(random_hedge(rng, sigma, inner_budget, max_depth - 1)));
      budget -= 1 + inner_budget;
    } else if (sigma.size() > 0) {
      out.append(NestedWord::letter(sigma.name(pick(rng, (uint32_t)sigma.size()))));
      budget -= 1;
    } else {
      break;
    }
  }
  return out;
}

}  // namespace hedge
