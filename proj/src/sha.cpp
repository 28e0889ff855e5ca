#include "hedge/sha.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hedge/detail/set_ops.hpp"
#include "hedge/detail/succ_index.hpp"

namespace hedge {

namespace {

using SuccIndex = detail::SuccIndexT<Rule>;

SuccIndex make_index(const Sha& a) {
  return SuccIndex(a.num_states, a.alphabet.size(), std::span<const Rule>(a.rules));
}

void check_deadline(const Deadline* d, uint64_t counter) {
  if (d && (counter & 0xff) == 0 && d->expired()) {
    throw TimeoutError("construction exceeded its deadline");
  }
}

StateSet apply_successors(const Sha& a, const StateSet& left, const StateSet& arg) {
  StateSet out;
  for (const ApplyRule& r : a.apply_rules) {
    if (detail::contains(left, r.left) && detail::contains(arg, r.arg)) out.push_back(r.dst);
  }
  detail::sort_unique(out);
  return out;
}

// Apply rules grouped by left state and by (left, arg) pair.
struct ApplyIndex {
  std::vector<std::vector<std::pair<StateId, StateId>>> by_left;  // left -> (arg, dst)
  std::unordered_map<uint64_t, std::vector<StateId>> by_pair;
  uint32_t num_states;

  explicit ApplyIndex(const Sha& a) : num_states(a.num_states) {
    by_left.resize(a.num_states);
    for (const ApplyRule& r : a.apply_rules) {
      by_left[r.left].emplace_back(r.arg, r.dst);
      by_pair[(uint64_t)r.left * a.num_states + r.arg].push_back(r.dst);
    }
  }

  const std::vector<StateId>* pair_dsts(StateId l, StateId r) const {
    auto it = by_pair.find((uint64_t)l * num_states + r);
    return it == by_pair.end() ? nullptr : &it->second;
  }

  StateSet subset_dsts(const StateSet& left, const StateSet& arg) const {
    StateSet out;
    for (StateId q : left) {
      for (auto [a_, d] : by_left[q]) {
        if (detail::contains(arg, a_)) out.push_back(d);
      }
    }
    detail::sort_unique(out);
    return out;
  }
};

std::vector<std::string> subset_names(const Sha& source, const std::vector<StateSet>& subsets) {
  std::vector<std::string> names;
  names.reserve(subsets.size());
  for (const StateSet& s : subsets) {
    std::string n = "{";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) n += ",";
      n += source.state_name(s[i]);
    }
    n += "}";
    names.push_back(std::move(n));
  }
  return names;
}

}  // namespace

void Sha::normalize() {
  detail::sort_unique(initial);
  detail::sort_unique(final);
  detail::sort_unique(tree_initial);
  std::sort(rules.begin(), rules.end());
  if (std::adjacent_find(rules.begin(), rules.end()) != rules.end()) {
    throw std::invalid_argument("duplicate rule");
  }
  std::sort(apply_rules.begin(), apply_rules.end());
  if (std::adjacent_find(apply_rules.begin(), apply_rules.end()) != apply_rules.end()) {
    throw std::invalid_argument("duplicate apply rule");
  }
  auto check_state = [&](StateId q) {
    if (q >= num_states) throw std::invalid_argument("dangling state reference");
  };
  for (StateId q : initial) check_state(q);
  for (StateId q : final) check_state(q);
  for (StateId q : tree_initial) check_state(q);
  for (const Rule& r : rules) {
    check_state(r.src);
    check_state(r.dst);
    if (r.letter >= alphabet.size()) throw std::invalid_argument("dangling letter reference");
  }
  for (const ApplyRule& r : apply_rules) {
    check_state(r.left);
    check_state(r.arg);
    check_state(r.dst);
  }
  if (!names.empty() && names.size() != num_states) {
    throw std::invalid_argument("names must be empty or one per state");
  }
}

std::string Sha::state_name(StateId q) const {
  if (q < names.size() && !names[q].empty()) return names[q];
  return std::to_string(q);
}

StateSet eval_hedge(const Sha& a, const StateSet& from, const NestedWord& h) {
  StateSet cur = from;
  for (const NestedWord::Item& item : h.items()) {
    if (cur.empty()) break;
    StateSet next;
    if (item.is_letter()) {
      SymbolId letter = a.alphabet.require(item.letter());
      for (const Rule& r : a.rules) {
        if (r.letter == letter && detail::contains(cur, r.src)) next.push_back(r.dst);
      }
      detail::sort_unique(next);
    } else {
      StateSet inner = eval_hedge(a, a.tree_initial, item.tree());
      next = apply_successors(a, cur, inner);
    }
    cur = std::move(next);
  }
  return cur;
}

bool accepts_nested(const Sha& a, const NestedWord& h) {
  return detail::intersects(eval_hedge(a, a.initial, h), a.final);
}

bool is_deterministic_sha(const Sha& a) {
  if (a.initial.size() > 1 || a.tree_initial.size() > 1) return false;
  std::unordered_set<uint64_t> seen;
  for (const Rule& r : a.rules) {
    uint64_t key = (uint64_t)r.src * a.alphabet.size() + r.letter;
    if (!seen.insert(key).second) return false;
  }
  std::unordered_set<uint64_t> seen_apply;
  for (const ApplyRule& r : a.apply_rules) {
    uint64_t key = (uint64_t)r.left * a.num_states + r.arg;
    if (!seen_apply.insert(key).second) return false;
  }
  return true;
}

ShaDeterminizeResult determinize_sha(const Sha& a, const Deadline* deadline) {
  ShaDeterminizeResult res;
  res.dsha.alphabet = a.alphabet;
  if (a.initial.empty() && a.tree_initial.empty()) return res;

  SuccIndex idx = make_index(a);
  ApplyIndex apply_idx(a);
  std::unordered_map<StateSet, StateId, detail::StateSetHash> store;
  std::vector<StateSet> subsets;
  std::vector<StateId> agenda;

  auto intern = [&](StateSet subset) -> std::pair<StateId, bool> {
    auto [it, inserted] = store.emplace(std::move(subset), (StateId)subsets.size());
    if (inserted) subsets.push_back(it->first);
    return {it->second, inserted};
  };
  auto push = [&](StateSet subset) -> StateId {
    auto [id, fresh] = intern(std::move(subset));
    if (fresh) {
      agenda.push_back(id);
      res.stats.agenda_pushes++;
    }
    return id;
  };

  StateId init_id = UINT32_MAX;
  StateId tree_init_id = UINT32_MAX;
  if (!a.initial.empty()) init_id = push(a.initial);
  if (!a.tree_initial.empty()) tree_init_id = push(a.tree_initial);

  std::set<Rule> rules;
  std::set<ApplyRule> apply_rules;
  while (!agenda.empty()) {
    StateId qid = agenda.back();
    agenda.pop_back();
    res.stats.agenda_pops++;
    check_deadline(deadline, res.stats.agenda_pops);
    StateSet subset = subsets[qid];
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      StateSet next = idx.subset_successors(subset, letter);
      if (next.empty()) continue;
      StateId nid = push(std::move(next));
      if (rules.insert(Rule{qid, letter, nid}).second) res.stats.rules_emitted++;
    }
    // Combine with the store snapshot, the popped subset included, in both
    // argument orders; subsets discovered here are handled when popped.
    size_t snapshot = subsets.size();
    for (StateId oid = 0; oid < snapshot; ++oid) {
      check_deadline(deadline, oid);
      StateSet other = subsets[oid];
      StateSet as_left = apply_idx.subset_dsts(subset, other);
      if (!as_left.empty()) {
        StateId nid = push(std::move(as_left));
        if (apply_rules.insert(ApplyRule{qid, oid, nid}).second) res.stats.rules_emitted++;
      }
      if (oid == qid) continue;
      StateSet as_arg = apply_idx.subset_dsts(other, subset);
      if (!as_arg.empty()) {
        StateId nid = push(std::move(as_arg));
        if (apply_rules.insert(ApplyRule{oid, qid, nid}).second) res.stats.rules_emitted++;
      }
    }
  }

  res.dsha.num_states = (uint32_t)subsets.size();
  if (init_id != UINT32_MAX) res.dsha.initial = {init_id};
  if (tree_init_id != UINT32_MAX) res.dsha.tree_initial = {tree_init_id};
  for (StateId i = 0; i < subsets.size(); ++i) {
    if (detail::intersects(subsets[i], a.final)) res.dsha.final.push_back(i);
  }
  res.dsha.rules.assign(rules.begin(), rules.end());
  res.dsha.apply_rules.assign(apply_rules.begin(), apply_rules.end());
  res.dsha.names = subset_names(a, subsets);
  res.dsha.normalize();
  res.map.subsets = std::move(subsets);
  return res;
}

ShaProductResult product_sha(const Sha& a, const Sha& s, const Deadline* deadline) {
  if (!(a.alphabet == s.alphabet)) {
    throw std::invalid_argument("product_sha: alphabets differ");
  }
  ShaProductResult res;
  res.automaton.alphabet = a.alphabet;
  res.map.left_num_states = a.num_states;
  res.map.right_num_states = s.num_states;

  SuccIndex ia = make_index(a), is = make_index(s);
  ApplyIndex apply_a(a), apply_s(s);
  std::unordered_map<uint64_t, StateId> store;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<StateId> agenda;

  auto key = [&](StateId q, StateId t) { return (uint64_t)q * (s.num_states + 1) + t; };
  auto push = [&](StateId q, StateId t) -> StateId {
    auto [it, inserted] = store.emplace(key(q, t), (StateId)pairs.size());
    if (inserted) {
      pairs.emplace_back(q, t);
      agenda.push_back(it->second);
      res.stats.agenda_pushes++;
    }
    return it->second;
  };

  for (StateId q : a.initial) {
    for (StateId t : s.initial) push(q, t);
  }
  for (StateId q : a.tree_initial) {
    for (StateId t : s.tree_initial) push(q, t);
  }

  std::set<Rule> rules;
  std::set<ApplyRule> apply_rules;
  while (!agenda.empty()) {
    StateId pid = agenda.back();
    agenda.pop_back();
    res.stats.agenda_pops++;
    check_deadline(deadline, res.stats.agenda_pops);
    auto [q1, t1] = pairs[pid];
    for (SymbolId letter = 0; letter < a.alphabet.size(); ++letter) {
      for (StateId q2 : ia.at(q1, letter)) {
        for (StateId t2 : is.at(t1, letter)) {
          StateId nid = push(q2, t2);
          if (rules.insert(Rule{pid, letter, nid}).second) res.stats.rules_emitted++;
        }
      }
    }
    size_t snapshot = pairs.size();
    for (StateId oid = 0; oid < snapshot; ++oid) {
      check_deadline(deadline, oid);
      for (int dir = 0; dir < 2; ++dir) {
        StateId lid = dir == 0 ? pid : oid;
        StateId rid = dir == 0 ? oid : pid;
        if (dir == 1 && oid == pid) continue;
        auto [lq, lt] = pairs[lid];
        auto [rq, rt] = pairs[rid];
        const auto* da = apply_a.pair_dsts(lq, rq);
        if (!da) continue;
        const auto* ds = apply_s.pair_dsts(lt, rt);
        if (!ds) continue;
        for (StateId qd : *da) {
          for (StateId td : *ds) {
            StateId nid = push(qd, td);
            if (apply_rules.insert(ApplyRule{lid, rid, nid}).second) res.stats.rules_emitted++;
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
    if (detail::contains(a.tree_initial, q) && detail::contains(s.tree_initial, t)) {
      res.automaton.tree_initial.push_back(i);
    }
    if (detail::contains(a.final, q) && detail::contains(s.final, t)) {
      res.automaton.final.push_back(i);
    }
    res.automaton.names.push_back("(" + a.state_name(q) + "," + s.state_name(t) + ")");
  }
  res.automaton.rules.assign(rules.begin(), rules.end());
  res.automaton.apply_rules.assign(apply_rules.begin(), apply_rules.end());
  res.automaton.normalize();
  res.map.pairs = std::move(pairs);
  return res;
}

Sha project_first_sha(const Sha& paired, const PairStateMap& map) {
  Sha out;
  out.alphabet = paired.alphabet;
  if (paired.num_states == 0) return out;

  out.num_states = map.left_num_states;
  auto left = [&](StateId pid) { return map.pairs.at(pid).first; };
  for (StateId q : paired.initial) out.initial.push_back(left(q));
  for (StateId q : paired.final) out.final.push_back(left(q));
  for (StateId q : paired.tree_initial) out.tree_initial.push_back(left(q));
  for (const Rule& r : paired.rules) out.rules.push_back(Rule{left(r.src), r.letter, left(r.dst)});
  for (const ApplyRule& r : paired.apply_rules) {
    out.apply_rules.push_back(ApplyRule{left(r.left), left(r.arg), left(r.dst)});
  }
  detail::sort_unique(out.initial);
  detail::sort_unique(out.final);
  detail::sort_unique(out.tree_initial);
  detail::sort_unique(out.rules);
  detail::sort_unique(out.apply_rules);
  out.normalize();
  return out;
}

ShaCleanResult schema_clean_sha(const Sha& a, const Dsha& schema, const Deadline* deadline) {
  if (!(a.alphabet == schema.alphabet)) {
    throw std::invalid_argument("schema_clean_sha: alphabets differ");
  }
  if (!is_deterministic_sha(schema)) {
    throw std::invalid_argument("schema_clean_sha: schema is not deterministic");
  }
  ShaProductResult p = product_sha(a, schema, deadline);
  Sha cleaned = project_first_sha(p.automaton, p.map);
  if (cleaned.num_states != 0) cleaned.names = a.names;
  return ShaCleanResult{std::move(cleaned), p.stats};
}

ShaSchemaDetResult schema_determinize_sha(const Sha& a, const Dsha& schema,
                                          const Deadline* deadline) {
  if (!(a.alphabet == schema.alphabet)) {
    throw std::invalid_argument("schema_determinize_sha: alphabets differ");
  }
  if (!is_deterministic_sha(schema)) {
    throw std::invalid_argument("schema_determinize_sha: schema is not deterministic");
  }
  ShaSchemaDetResult res;
  res.dsha.alphabet = a.alphabet;

  SuccIndex ia = make_index(a), is = make_index(schema);
  ApplyIndex apply_a(a), apply_s(schema);

  std::unordered_map<StateSet, StateId, detail::StateSetHash> subset_ids;
  std::vector<StateSet> subsets;
  auto intern_subset = [&](StateSet subset) -> StateId {
    auto [it, inserted] = subset_ids.emplace(std::move(subset), (StateId)subsets.size());
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };

  std::unordered_set<uint64_t> store;
  auto align_key = [&](StateId sid, StateId t) {
    return (uint64_t)sid * (schema.num_states + 1) + t;
  };

  std::vector<std::pair<StateId, StateId>> agenda;
  std::vector<bool> subset_final_aligned;

  auto push_alignment = [&](StateId sid, StateId t) {
    if (!store.insert(align_key(sid, t)).second) return;
    agenda.emplace_back(sid, t);
    res.map.alignments.emplace_back(sid, t);
    res.stats.agenda_pushes++;
    subset_final_aligned.resize(subsets.size(), false);
    if (detail::contains(schema.final, t)) subset_final_aligned[sid] = true;
  };

  StateId init_sid = UINT32_MAX;
  StateId tree_init_sid = UINT32_MAX;
  if (!a.initial.empty() && schema.initial.size() == 1) {
    init_sid = intern_subset(a.initial);
    push_alignment(init_sid, schema.initial.front());
  }
  if (!a.tree_initial.empty() && schema.tree_initial.size() == 1) {
    tree_init_sid = intern_subset(a.tree_initial);
    push_alignment(tree_init_sid, schema.tree_initial.front());
  }
  if (agenda.empty()) return res;

  std::set<Rule> rules;
  std::set<ApplyRule> apply_rules;
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
    size_t snapshot = res.map.alignments.size();
    for (size_t oi = 0; oi < snapshot; ++oi) {
      check_deadline(deadline, oi);
      auto [osid, ot] = res.map.alignments[oi];
      for (int dir = 0; dir < 2; ++dir) {
        StateId lsid = dir == 0 ? sid : osid;
        StateId lt = dir == 0 ? t1 : ot;
        StateId rsid = dir == 0 ? osid : sid;
        StateId rt = dir == 0 ? ot : t1;
        if (dir == 1 && osid == sid && ot == t1) continue;
        const auto* schema_dst = apply_s.pair_dsts(lt, rt);
        if (!schema_dst) continue;
        StateSet dst = apply_a.subset_dsts(subsets[lsid], subsets[rsid]);
        if (dst.empty()) continue;
        StateId nsid = intern_subset(std::move(dst));
        if (apply_rules.insert(ApplyRule{lsid, rsid, nsid}).second) res.stats.rules_emitted++;
        push_alignment(nsid, schema_dst->front());
      }
    }
  }

  subset_final_aligned.resize(subsets.size(), false);
  res.dsha.num_states = (uint32_t)subsets.size();
  if (init_sid != UINT32_MAX) res.dsha.initial = {init_sid};
  if (tree_init_sid != UINT32_MAX) res.dsha.tree_initial = {tree_init_sid};
  for (StateId i = 0; i < subsets.size(); ++i) {
    if (subset_final_aligned[i] && detail::intersects(subsets[i], a.final)) {
      res.dsha.final.push_back(i);
    }
  }
  res.dsha.rules.assign(rules.begin(), rules.end());
  res.dsha.apply_rules.assign(apply_rules.begin(), apply_rules.end());
  res.dsha.names = subset_names(a, subsets);
  res.dsha.normalize();
  res.map.states.subsets = std::move(subsets);
  return res;
}

StateSet live_states(const Sha& a) {
  StateSet out = a.initial;
  out.insert(out.end(), a.final.begin(), a.final.end());
  out.insert(out.end(), a.tree_initial.begin(), a.tree_initial.end());
  for (const Rule& r : a.rules) {
    out.push_back(r.src);
    out.push_back(r.dst);
  }
  for (const ApplyRule& r : a.apply_rules) {
    out.push_back(r.left);
    out.push_back(r.arg);
    out.push_back(r.dst);
  }
  detail::sort_unique(out);
  return out;
}

Sha restrict_states(const Sha& a, const StateSet& keep) {
  std::vector<StateId> remap(a.num_states, UINT32_MAX);
  for (StateId i = 0; i < keep.size(); ++i) remap[keep[i]] = i;
  Sha out;
  out.alphabet = a.alphabet;
  out.num_states = (uint32_t)keep.size();
  if (!a.names.empty()) {
    for (StateId old : keep) out.names.push_back(a.names[old]);
  }
  auto mapped = [&](StateId q) { return remap[q] != UINT32_MAX; };
  for (StateId q : a.initial) {
    if (mapped(q)) out.initial.push_back(remap[q]);
  }
  for (StateId q : a.final) {
    if (mapped(q)) out.final.push_back(remap[q]);
  }
  for (StateId q : a.tree_initial) {
    if (mapped(q)) out.tree_initial.push_back(remap[q]);
  }
  for (const Rule& r : a.rules) {
    if (mapped(r.src) && mapped(r.dst)) {
      out.rules.push_back(Rule{remap[r.src], r.letter, remap[r.dst]});
    }
  }
  for (const ApplyRule& r : a.apply_rules) {
    if (mapped(r.left) && mapped(r.arg) && mapped(r.dst)) {
      out.apply_rules.push_back(ApplyRule{remap[r.left], remap[r.arg], remap[r.dst]});
    }
  }
  out.normalize();
  return out;
}

Sha embed_nfa(const Nfa& a) {
  Sha out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states;
  out.names = a.names;
  out.initial = a.initial;
  out.final = a.final;
  out.rules = a.rules;
  return out;
}

Nfa word_part(const Sha& a) {
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states;
  out.names = a.names;
  out.initial = a.initial;
  out.final = a.final;
  out.rules = a.rules;
  return out;
}

}  // namespace hedge
