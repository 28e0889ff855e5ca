#include "hedge/canonical.hpp"

#include "hedge/detail/set_ops.hpp"
#include "hedge/detail/succ_index.hpp"

namespace hedge {

Nfa canonical_form(const Nfa& a) {
  detail::SuccIndexT<Rule> idx(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
  std::vector<StateId> order;
  std::vector<bool> seen(a.num_states, false);
  auto add = [&](StateId q) {
    if (!seen[q]) {
      seen[q] = true;
      order.push_back(q);
    }
  };
  for (StateId q : a.initial) add(q);
  for (size_t i = 0; i < order.size(); ++i) {
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      for (StateId succ : idx.at(order[i], letter)) add(succ);
    }
  }
  return restrict_states(a, order);
}

Sha canonical_form(const Sha& a) {
  detail::SuccIndexT<Rule> idx(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
  auto apply_dsts = [&](StateId l, StateId r) {
    StateSet out;
    for (const ApplyRule& rule : a.apply_rules) {
      if (rule.left == l && rule.arg == r) out.push_back(rule.dst);
    }
    detail::sort_unique(out);
    return out;
  };

  std::vector<StateId> order;
  std::vector<bool> seen(a.num_states, false);
  auto add = [&](StateId q) {
    if (!seen[q]) {
      seen[q] = true;
      order.push_back(q);
    }
  };
  for (StateId q : a.initial) add(q);
  for (StateId q : a.tree_initial) add(q);
  for (size_t i = 0; i < order.size(); ++i) {
    StateId q = order[i];
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      for (StateId succ : idx.at(q, letter)) add(succ);
    }
    for (size_t j = 0; j <= i; ++j) {
      StateId p = order[j];
      for (StateId d : apply_dsts(q, p)) add(d);
      if (p != q) {
        for (StateId d : apply_dsts(p, q)) add(d);
      }
    }
  }
  return restrict_states(a, order);
}

}  // namespace hedge
