#include "hedge/nfa.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hedge/detail/set_ops.hpp"
#include "hedge/detail/succ_index.hpp"

namespace hedge {

Deadline Deadline::after_seconds(double s) {
  auto now = std::chrono::steady_clock::now().time_since_epoch();
  auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now).count();
  return Deadline{ns + static_cast<int64_t>(s * 1e9)};
}

bool Deadline::expired() const {
  auto now = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() >= expires_at_ns;
}

namespace {

void check_deadline(const Deadline* d, uint64_t counter) {
  if (d && (counter & 0xff) == 0 && d->expired()) {
    throw TimeoutError("construction exceeded its deadline");
  }
}

}  // namespace

void Nfa::normalize() {
  detail::sort_unique(initial);
  detail::sort_unique(final);
  std::sort(rules.begin(), rules.end());
  if (std::adjacent_find(rules.begin(), rules.end()) != rules.end()) {
    throw std::invalid_argument("duplicate rule");
  }
  auto check_state = [&](StateId q) {
    if (q >= num_states) throw std::invalid_argument("dangling state reference");
  };
  for (StateId q : initial) check_state(q);
  for (StateId q : final) check_state(q);
  for (const Rule& r : rules) {
    check_state(r.src);
    check_state(r.dst);
    if (r.letter >= alphabet.size()) throw std::invalid_argument("dangling letter reference");
  }
  if (!names.empty() && names.size() != num_states) {
    throw std::invalid_argument("names must be empty or one per state");
  }
}

std::string Nfa::state_name(StateId q) const {
  if (q < names.size() && !names[q].empty()) return names[q];
  return std::to_string(q);
}

StateSet run_word(const Nfa& a, const StateSet& from, std::span<const SymbolId> w) {
  StateSet cur = from;
  for (SymbolId letter : w) {
    if (letter >= a.alphabet.size()) {
      throw std::invalid_argument("unknown letter id " + std::to_string(letter));
    }
    StateSet next;
    for (const Rule& r : a.rules) {
      if (r.letter == letter && detail::contains(cur, r.src)) next.push_back(r.dst);
    }
    detail::sort_unique(next);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

StateSet run_word(const Nfa& a, const StateSet& from, std::string_view text) {
  Word w = a.alphabet.parse_word(text);
  return run_word(a, from, w);
}

bool accepts(const Nfa& a, std::span<const SymbolId> w) {
  return detail::intersects(run_word(a, a.initial, w), a.final);
}

bool accepts(const Nfa& a, std::string_view text) {
  Word w = a.alphabet.parse_word(text);
  return accepts(a, std::span<const SymbolId>(w));
}

bool is_deterministic(const Nfa& a) {
  if (a.initial.size() > 1) return false;
  std::unordered_set<uint64_t> seen;
  for (const Rule& r : a.rules) {
    uint64_t key = (uint64_t)r.src * a.alphabet.size() + r.letter;
    if (!seen.insert(key).second) return false;
  }
  return true;
}

namespace {

using SuccIndex = detail::SuccIndexT<Rule>;

SuccIndex make_index(const Nfa& a) {
  return SuccIndex(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
}

std::vector<std::string> subset_names(const Nfa& source, const std::vector<StateSet>& subsets) {
  std::vector<std::string> names;
  names.reserve(subsets.size());
  for (const StateSet& s : subsets) names.push_back(subset_display_name(source, s));
  return names;
}

}  // namespace

std::string subset_display_name(const Nfa& source, const StateSet& subset) {
  std::string out = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += source.state_name(subset[i]);
  }
  out += "}";
  return out;
}

DeterminizeResult determinize(const Nfa& a, const Deadline* deadline) {
  DeterminizeResult res;
  res.dfa.alphabet = a.alphabet;
  if (a.initial.empty()) return res;

  SuccIndex idx = make_index(a);
  std::unordered_map<StateSet, StateId, detail::StateSetHash> store;
  std::vector<StateSet> subsets;
  std::vector<StateId> agenda;

  auto intern = [&](StateSet subset) -> std::pair<StateId, bool> {
    auto [it, inserted] = store.emplace(std::move(subset), (StateId)subsets.size());
    if (inserted) subsets.push_back(it->first);
    return {it->second, inserted};
  };

  auto [init_id, ignored] = intern(a.initial);
  agenda.push_back(init_id);
  res.stats.agenda_pushes++;

  std::vector<Rule> rules;
  while (!agenda.empty()) {
    StateId qid = agenda.back();
    agenda.pop_back();
    res.stats.agenda_pops++;
    check_deadline(deadline, res.stats.agenda_pops);
    StateSet subset = subsets[qid];  // copy: subsets may reallocate below
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      StateSet next = idx.subset_successors(subset, letter);
      if (next.empty()) continue;
      auto [nid, fresh] = intern(std::move(next));
      rules.push_back(Rule{qid, letter, nid});
      res.stats.rules_emitted++;
      if (fresh) {
        agenda.push_back(nid);
        res.stats.agenda_pushes++;
      }
    }
  }

  res.dfa.num_states = (uint32_t)subsets.size();
  res.dfa.initial = {init_id};
  for (StateId i = 0; i < subsets.size(); ++i) {
    if (detail::intersects(subsets[i], a.final)) res.dfa.final.push_back(i);
  }
  res.dfa.rules = std::move(rules);
  res.dfa.names = subset_names(a, subsets);
  res.dfa.normalize();
  res.map.subsets = std::move(subsets);
  return res;
}

ProductResult product(const Nfa& a, const Nfa& s, const Deadline* deadline) {
  if (!(a.alphabet == s.alphabet)) {
    throw std::invalid_argument("product: alphabets differ");
  }
  ProductResult res;
  res.automaton.alphabet = a.alphabet;
  res.map.left_num_states = a.num_states;
  res.map.right_num_states = s.num_states;

  SuccIndex ia = make_index(a), is = make_index(s);
  std::unordered_map<uint64_t, StateId> store;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<StateId> agenda;

  auto key = [&](StateId q, StateId t) { return (uint64_t)q * (s.num_states + 1) + t; };
  auto intern = [&](StateId q, StateId t) -> std::pair<StateId, bool> {
    auto [it, inserted] = store.emplace(key(q, t), (StateId)pairs.size());
    if (inserted) pairs.emplace_back(q, t);
    return {it->second, inserted};
  };

  for (StateId q : a.initial) {
    for (StateId t : s.initial) {
      auto [pid, fresh] = intern(q, t);
      if (fresh) {
        agenda.push_back(pid);
        res.stats.agenda_pushes++;
      }
    }
  }

  std::vector<Rule> rules;
  while (!agenda.empty()) {
    StateId pid = agenda.back();
    agenda.pop_back();
    res.stats.agenda_pops++;
    check_deadline(deadline, res.stats.agenda_pops);
    auto [q1, t1] = pairs[pid];
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      for (StateId q2 : ia.at(q1, letter)) {
        for (StateId t2 : is.at(t1, letter)) {
          auto [nid, fresh] = intern(q2, t2);
          rules.push_back(Rule{pid, letter, nid});
          res.stats.rules_emitted++;
          if (fresh) {
            agenda.push_back(nid);
            res.stats.agenda_pushes++;
          }
        }
      }
    }
  }

  res.automaton.num_states = (uint32_t)pairs.size();
  for (StateId i = 0; i < pairs.size(); ++i) {
    auto [q, t] = pairs[i];
    if (detail::contains(a.initial, q) && detail::contains(s.initial, t)) {
      res.automaton.initial.push_back(i);
    }
    if (detail::contains(a.final, q) && detail::contains(s.final, t)) {
      res.automaton.final.push_back(i);
    }
    res.automaton.names.push_back("(" + a.state_name(q) + "," + s.state_name(t) + ")");
  }
  res.automaton.rules = std::move(rules);
  res.automaton.normalize();
  res.map.pairs = std::move(pairs);
  return res;
}

Nfa project_first(const Nfa& paired, const PairStateMap& map) {
  Nfa out;
  out.alphabet = paired.alphabet;
  if (paired.num_states == 0) return out;

  out.num_states = map.left_num_states;
  auto left = [&](StateId pid) { return map.pairs.at(pid).first; };
  for (StateId q : paired.initial) out.initial.push_back(left(q));
  for (StateId q : paired.final) out.final.push_back(left(q));
  for (const Rule& r : paired.rules) out.rules.push_back(Rule{left(r.src), r.letter, left(r.dst)});
  detail::sort_unique(out.initial);
  detail::sort_unique(out.final);
  std::sort(out.rules.begin(), out.rules.end());
  out.rules.erase(std::unique(out.rules.begin(), out.rules.end()), out.rules.end());
  out.normalize();
  return out;
}

CleanResult schema_clean(const Nfa& a, const Dfa& schema, const Deadline* deadline) {
  if (!(a.alphabet == schema.alphabet)) {
    throw std::invalid_argument("schema_clean: alphabets differ");
  }
  if (!is_deterministic(schema)) {
    throw std::invalid_argument("schema_clean: schema is not deterministic");
  }
  ProductResult p = product(a, schema, deadline);
  Nfa cleaned = project_first(p.automaton, p.map);
  if (cleaned.num_states != 0) cleaned.names = a.names;
  return CleanResult{std::move(cleaned), p.stats};
}

SchemaDetResult schema_determinize(const Nfa& a, const Dfa& schema, const Deadline* deadline) {
  if (!(a.alphabet == schema.alphabet)) {
    throw std::invalid_argument("schema_determinize: alphabets differ");
  }
  if (!is_deterministic(schema)) {
    throw std::invalid_argument("schema_determinize: schema is not deterministic");
  }
  SchemaDetResult res;
  res.dfa.alphabet = a.alphabet;
  if (a.initial.empty() || schema.initial.empty()) return res;

  SuccIndex ia = make_index(a), is = make_index(schema);

  std::unordered_map<StateSet, StateId, detail::StateSetHash> subset_ids;
  std::vector<StateSet> subsets;
  auto intern_subset = [&](StateSet subset) -> StateId {
    auto [it, inserted] = subset_ids.emplace(std::move(subset), (StateId)subsets.size());
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };

  // Store of alignments Q ~ s, keyed by (subset id, schema state).
  std::unordered_set<uint64_t> store;
  auto align_key = [&](StateId sid, StateId t) {
    return (uint64_t)sid * (schema.num_states + 1) + t;
  };

  std::vector<std::pair<StateId, StateId>> agenda;  // (subset id, schema state)
  std::vector<bool> subset_final_aligned;           // aligned to a final schema state

  auto push_alignment = [&](StateId sid, StateId t) {
    if (!store.insert(align_key(sid, t)).second) return;
    agenda.emplace_back(sid, t);
    res.map.alignments.emplace_back(sid, t);
    res.stats.agenda_pushes++;
    if (subset_final_aligned.size() < subsets.size()) subset_final_aligned.resize(subsets.size(), false);
    if (detail::contains(schema.final, t)) subset_final_aligned[sid] = true;
  };

  StateId init_sid = intern_subset(a.initial);
  push_alignment(init_sid, schema.initial.front());

  std::set<Rule> rules;
  while (!agenda.empty()) {
    auto [sid, t1] = agenda.back();
    agenda.pop_back();
    res.stats.agenda_pops++;
    check_deadline(deadline, res.stats.agenda_pops);
    StateSet subset = subsets[sid];
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      const auto& schema_succ = is.at(t1, letter);
      if (schema_succ.empty()) continue;
      StateSet next = ia.subset_successors(subset, letter);
      if (next.empty()) continue;
      StateId nsid = intern_subset(std::move(next));
      if (rules.insert(Rule{sid, letter, nsid}).second) res.stats.rules_emitted++;
      push_alignment(nsid, schema_succ.front());
    }
  }

  subset_final_aligned.resize(subsets.size(), false);
  res.dfa.num_states = (uint32_t)subsets.size();
  res.dfa.initial = {init_sid};
  for (StateId i = 0; i < subsets.size(); ++i) {
    if (subset_final_aligned[i] && detail::intersects(subsets[i], a.final)) {
      res.dfa.final.push_back(i);
    }
  }
  res.dfa.rules.assign(rules.begin(), rules.end());
  res.dfa.names = subset_names(a, subsets);
  res.dfa.normalize();
  res.map.states.subsets = std::move(subsets);
  return res;
}

StateSet live_states(const Nfa& a) {
  StateSet out = a.initial;
  out.insert(out.end(), a.final.begin(), a.final.end());
  for (const Rule& r : a.rules) {
    out.push_back(r.src);
    out.push_back(r.dst);
  }
  detail::sort_unique(out);
  return out;
}

Nfa restrict_states(const Nfa& a, const StateSet& keep) {
  std::vector<StateId> remap(a.num_states, UINT32_MAX);
  for (StateId i = 0; i < keep.size(); ++i) remap[keep[i]] = i;
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = (uint32_t)keep.size();
  if (!a.names.empty()) {
    for (StateId old : keep) out.names.push_back(a.names[old]);
  }
  for (StateId q : a.initial) {
    if (remap[q] != UINT32_MAX) out.initial.push_back(remap[q]);
  }
  for (StateId q : a.final) {
    if (remap[q] != UINT32_MAX) out.final.push_back(remap[q]);
  }
  for (const Rule& r : a.rules) {
    if (remap[r.src] != UINT32_MAX && remap[r.dst] != UINT32_MAX) {
      out.rules.push_back(Rule{remap[r.src], r.letter, remap[r.dst]});
    }
  }
  out.normalize();
  return out;
}

}  // namespace hedge
