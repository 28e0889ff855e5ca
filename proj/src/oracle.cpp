#include "hedge/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "hedge/detail/set_ops.hpp"
#include "hedge/detail/succ_index.hpp"

namespace hedge::oracle {

bool enum_words(const Alphabet& sigma, const EnumerationBound& bound,
                const std::function<bool(const Word&)>& visit) {
  Word w;
  if (!visit(w)) return false;
  for (size_t len = 1; len <= bound.max_word_length; ++len) {
    if (sigma.size() == 0) break;
    w.assign(len, 0);
    while (true) {
      if (!visit(w)) return false;
      // odometer, last position fastest
      size_t i = len;
      while (i > 0) {
        if (++w[i - 1] < sigma.size()) break;
        w[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return true;
}

namespace {

// Emits every suffix of exact size n (depth budget d) onto acc, calling
// done() for each completion. Letters come before trees, tree contents
// ordered by size then recursively.
bool emit_rest(const Alphabet& sigma, size_t n, size_t d, NestedWord& acc,
               const std::function<bool()>& done) {
  if (n == 0) return done();
  for (SymbolId s = 0; s < sigma.size(); ++s) {
    acc.append(NestedWord::letter(sigma.name(s)));
    bool cont = emit_rest(sigma, n - 1, d, acc, done);
    acc.pop_back();
    if (!cont) return false;
  }
  if (d >= 1) {
    for (size_t k = 0; k + 1 <= n; ++k) {
      NestedWord sub;
      auto attach = [&]() -> bool {
        acc.append(NestedWord::tree(sub));
        bool cont = emit_rest(sigma, n - 1 - k, d, acc, done);
        acc.pop_back();
        return cont;
      };
      if (!emit_rest(sigma, k, d - 1, sub, attach)) return false;
    }
  }
  return true;
}

}  // namespace

bool enum_hedges(const Alphabet& sigma, const EnumerationBound& bound,
                 const std::function<bool(const NestedWord&)>& visit) {
  for (size_t n = 0; n <= bound.max_hedge_items; ++n) {
    NestedWord acc;
    auto done = [&]() { return visit(acc); };
    if (!emit_rest(sigma, n, bound.max_depth, acc, done)) return false;
  }
  return true;
}

uint64_t count_hedges(size_t alphabet_size, size_t items, size_t max_depth) {
  std::map<std::pair<size_t, size_t>, uint64_t> memo;
  std::function<uint64_t(size_t, size_t)> f = [&](size_t n, size_t d) -> uint64_t {
    if (n == 0) return 1;
    auto it = memo.find({n, d});
    if (it != memo.end()) return it->second;
    uint64_t total = alphabet_size * f(n - 1, d);
    if (d >= 1) {
      for (size_t k = 0; k + 1 <= n; ++k) total += f(k, d - 1) * f(n - 1 - k, d);
    }
    memo[{n, d}] = total;
    return total;
  };
  return f(items, max_depth);
}

Dfa naive_determinize(const Nfa& a) {
  if (a.num_states > 12) {
    throw std::invalid_argument("naive_determinize: more than 12 states");
  }
  const uint32_t n = a.num_states;
  const uint32_t full = n == 0 ? 0 : ((1u << n) - 1);

  Dfa d;
  d.alphabet = a.alphabet;
  d.num_states = full;  // one state per non-empty subset, id = mask - 1
  if (full == 0) return d;

  uint32_t init_mask = 0;
  for (StateId q : a.initial) init_mask |= 1u << q;
  if (init_mask != 0) d.initial = {init_mask - 1};

  uint32_t final_mask = 0;
  for (StateId q : a.final) final_mask |= 1u << q;

  std::vector<uint32_t> step(n * a.alphabet.size(), 0);
  for (const Rule& r : a.rules) step[r.src * a.alphabet.size() + r.letter] |= 1u << r.dst;

  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (mask & final_mask) d.final.push_back(mask - 1);
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      uint32_t next = 0;
      for (uint32_t q = 0; q < n; ++q) {
        if (mask & (1u << q)) next |= step[q * a.alphabet.size() + letter];
      }
      if (next != 0) d.rules.push_back(Rule{mask - 1, letter, next - 1});
    }
  }
  d.normalize();
  return d;
}

StateSet reachable_states(const Nfa& a) {
  std::vector<bool> seen(a.num_states, false);
  std::deque<StateId> queue;
  for (StateId q : a.initial) {
    if (!seen[q]) {
      seen[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const Rule& r : a.rules) {
      if (r.src == q && !seen[r.dst]) {
        seen[r.dst] = true;
        queue.push_back(r.dst);
      }
    }
  }
  StateSet out;
  for (StateId q = 0; q < a.num_states; ++q) {
    if (seen[q]) out.push_back(q);
  }
  return out;
}

Nfa accessible_part(const Nfa& a) { return restrict_states(a, reachable_states(a)); }

std::optional<WordCounterexample> lang_equal_bounded(const Nfa& a, const Nfa& b,
                                                     const EnumerationBound& bound) {
  if (!(a.alphabet == b.alphabet)) {
    throw std::invalid_argument("lang_equal_bounded: alphabets differ");
  }
  std::optional<WordCounterexample> ce;
  enum_words(a.alphabet, bound, [&](const Word& w) {
    bool ia = accepts(a, std::span<const SymbolId>(w));
    bool ib = accepts(b, std::span<const SymbolId>(w));
    if (ia != ib) {
      ce = WordCounterexample{w, ia, ib};
      return false;
    }
    return true;
  });
  return ce;
}

std::optional<HedgeCounterexample> lang_equal_bounded(const Sha& a, const Sha& b,
                                                      const EnumerationBound& bound) {
  if (!(a.alphabet == b.alphabet)) {
    throw std::invalid_argument("lang_equal_bounded: alphabets differ");
  }
  std::optional<HedgeCounterexample> ce;
  enum_hedges(a.alphabet, bound, [&](const NestedWord& h) {
    bool ia = accepts_nested(a, h);
    bool ib = accepts_nested(b, h);
    if (ia != ib) {
      ce = HedgeCounterexample{h, ia, ib};
      return false;
    }
    return true;
  });
  return ce;
}

namespace {

void require_iso_preconditions(const Nfa& a, const char* which) {
  if (!is_deterministic(a)) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " is not deterministic");
  }
  if (a.num_states > 64) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " has more than 64 states");
  }
  if (reachable_states(a).size() != a.num_states) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " has unreachable states");
  }
}

}  // namespace

std::optional<std::vector<StateId>> iso_check(const Nfa& a, const Nfa& b) {
  require_iso_preconditions(a, "first automaton");
  require_iso_preconditions(b, "second automaton");
  if (a.num_states != b.num_states) return std::nullopt;
  if (a.initial.size() != b.initial.size()) return std::nullopt;
  if (a.num_states == 0) return std::vector<StateId>{};

  if (!(a.alphabet == b.alphabet)) return std::nullopt;
  detail::SuccIndexT<Rule> ia(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
  detail::SuccIndexT<Rule> ib(b.num_states, b.alphabet.size(), std::span<const Rule>(b.rules));

  std::vector<StateId> fwd(a.num_states, UINT32_MAX), bwd(b.num_states, UINT32_MAX);
  std::deque<std::pair<StateId, StateId>> queue;
  auto pair_up = [&](StateId p, StateId q) -> bool {
    if (fwd[p] != UINT32_MAX || bwd[q] != UINT32_MAX) {
      return fwd[p] == q && bwd[q] == p;
    }
    if (detail::contains(a.final, p) != detail::contains(b.final, q)) return false;
    fwd[p] = q;
    bwd[q] = p;
    queue.emplace_back(p, q);
    return true;
  };

  if (!pair_up(a.initial.front(), b.initial.front())) return std::nullopt;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      const auto& sa = ia.at(p, letter);
      const auto& sb = ib.at(q, letter);
      if (sa.size() != sb.size()) return std::nullopt;
      if (!sa.empty() && !pair_up(sa.front(), sb.front())) return std::nullopt;
    }
  }
  // accessible on both sides, so the exploration covered every state
  return fwd;
}

StateSet reachable_states(const Sha& a) {
  std::vector<bool> seen(a.num_states, false);
  for (StateId q : a.initial) seen[q] = true;
  for (StateId q : a.tree_initial) seen[q] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : a.rules) {
      if (seen[r.src] && !seen[r.dst]) {
        seen[r.dst] = true;
        changed = true;
      }
    }
    for (const ApplyRule& r : a.apply_rules) {
      if (seen[r.left] && seen[r.arg] && !seen[r.dst]) {
        seen[r.dst] = true;
        changed = true;
      }
    }
  }
  StateSet out;
  for (StateId q = 0; q < a.num_states; ++q) {
    if (seen[q]) out.push_back(q);
  }
  return out;
}

namespace {

void require_iso_preconditions_sha(const Sha& a, const char* which) {
  if (!is_deterministic_sha(a)) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " is not deterministic");
  }
  if (a.num_states > 64) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " has more than 64 states");
  }
  if (reachable_states(a).size() != a.num_states) {
    throw std::invalid_argument(std::string("iso_check: ") + which + " has unreachable states");
  }
}

std::optional<StateId> apply_dst(const Sha& a, StateId left, StateId arg) {
  for (const ApplyRule& r : a.apply_rules) {
    if (r.left == left && r.arg == arg) return r.dst;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<StateId>> iso_check(const Sha& a, const Sha& b) {
  require_iso_preconditions_sha(a, "first automaton");
  require_iso_preconditions_sha(b, "second automaton");
  if (a.num_states != b.num_states) return std::nullopt;
  if (a.initial.size() != b.initial.size()) return std::nullopt;
  if (a.tree_initial.size() != b.tree_initial.size()) return std::nullopt;
  if (!(a.alphabet == b.alphabet)) return std::nullopt;
  if (a.num_states == 0) return std::vector<StateId>{};

  detail::SuccIndexT<Rule> ia(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
  detail::SuccIndexT<Rule> ib(b.num_states, b.alphabet.size(), std::span<const Rule>(b.rules));

  std::vector<StateId> fwd(a.num_states, UINT32_MAX), bwd(b.num_states, UINT32_MAX);
  std::vector<std::pair<StateId, StateId>> paired;
  bool ok = true;
  auto pair_up = [&](StateId p, StateId q) {
    if (!ok) return;
    if (fwd[p] != UINT32_MAX || bwd[q] != UINT32_MAX) {
      ok = fwd[p] == q && bwd[q] == p;
      return;
    }
    if (detail::contains(a.final, p) != detail::contains(b.final, q)) {
      ok = false;
      return;
    }
    fwd[p] = q;
    bwd[q] = p;
    paired.emplace_back(p, q);
  };

  if (!a.initial.empty()) pair_up(a.initial.front(), b.initial.front());
  if (ok && !a.tree_initial.empty()) pair_up(a.tree_initial.front(), b.tree_initial.front());

  for (size_t i = 0; ok && i < paired.size(); ++i) {
    auto [p, q] = paired[i];
    for (SymbolId letter = 0; ok && letter < a.alphabet.size(); ++letter) {
      const auto& sa = ia.at(p, letter);
      const auto& sb = ib.at(q, letter);
      if (sa.size() != sb.size()) {
        ok = false;
      } else if (!sa.empty()) {
        pair_up(sa.front(), sb.front());
      }
    }
    // combine with every pair established so far, both argument orders
    for (size_t j = 0; ok && j <= i; ++j) {
      auto [p2, q2] = paired[j];
      for (int dir = 0; ok && dir < 2; ++dir) {
        StateId pl = dir == 0 ? p : p2;
        StateId pr = dir == 0 ? p2 : p;
        StateId ql = dir == 0 ? q : q2;
        StateId qr = dir == 0 ? q2 : q;
        auto da = apply_dst(a, pl, pr);
        auto db = apply_dst(b, ql, qr);
        if (da.has_value() != db.has_value()) {
          ok = false;
        } else if (da) {
          pair_up(*da, *db);
        }
      }
    }
  }
  if (!ok || paired.size() != a.num_states) return std::nullopt;
  return fwd;
}

}  // namespace hedge::oracle
