#include "hedge/queries.hpp"

#include <stdexcept>

namespace hedge {

namespace {

Alphabet extend(const Alphabet& sigma, std::initializer_list<std::string> extra) {
  std::vector<std::string> symbols = sigma.symbols();
  for (const std::string& s : extra) {
    if (sigma.contains(s)) {
      throw std::invalid_argument("alphabet already contains reserved symbol '" + s + "'");
    }
    symbols.push_back(s);
  }
  return Alphabet(std::move(symbols));
}

}  // namespace

Dfa one_x_dfa(const Alphabet& sigma) {
  Dfa d;
  d.alphabet = extend(sigma, {kVarX});
  d.num_states = 2;
  d.initial = {0};
  d.final = {1};
  SymbolId x = *d.alphabet.find(kVarX);
  for (SymbolId s = 0; s < sigma.size(); ++s) {
    d.rules.push_back(Rule{0, s, 0});
    d.rules.push_back(Rule{1, s, 1});
  }
  d.rules.push_back(Rule{0, x, 1});
  d.normalize();
  return d;
}

Dsha one_x_sha(const Alphabet& sigma) {
  Dsha d;
  d.alphabet = extend(sigma, {kVarX, kVarNotX});
  d.num_states = 2;
  d.initial = {0};
  d.tree_initial = {0};
  d.final = {1};
  SymbolId x = *d.alphabet.find(kVarX);
  for (SymbolId s = 0; s < d.alphabet.size(); ++s) {
    if (s == x) continue;
    d.rules.push_back(Rule{0, s, 0});
    d.rules.push_back(Rule{1, s, 1});
  }
  d.rules.push_back(Rule{0, x, 1});
  d.apply_rules = {ApplyRule{0, 0, 0}, ApplyRule{0, 1, 1}, ApplyRule{1, 0, 1}};
  d.normalize();
  return d;
}

std::vector<std::string> insert_word(const std::vector<std::string>& w, size_t pi) {
  if (pi > w.size()) {
    throw std::out_of_range("position " + std::to_string(pi) + " out of range 0.." +
                            std::to_string(w.size()));
  }
  std::vector<std::string> out;
  out.reserve(w.size() + 1);
  out.insert(out.end(), w.begin(), w.begin() + pi);
  out.push_back(kVarX);
  out.insert(out.end(), w.begin() + pi, w.end());
  return out;
}

StateSet select_word(const Nfa& a, const std::vector<std::string>& w) {
  for (const std::string& tok : w) {
    if (tok == kVarX) throw std::invalid_argument("subject word contains the variable x");
  }
  Word base;
  base.reserve(w.size());
  for (const std::string& tok : w) base.push_back(a.alphabet.require(tok));
  SymbolId x = a.alphabet.require(kVarX);

  StateSet selected;
  Word probe(base.size() + 1, 0);
  for (size_t pi = 0; pi <= base.size(); ++pi) {
    std::copy(base.begin(), base.begin() + pi, probe.begin());
    probe[pi] = x;
    std::copy(base.begin() + pi, base.end(), probe.begin() + pi + 1);
    if (accepts(a, std::span<const SymbolId>(probe))) selected.push_back((StateId)pi);
  }
  return selected;
}

namespace {

void collect_nodes(const NestedWord& h, uint32_t& next, std::vector<uint32_t>& out) {
  for (const NestedWord::Item& item : h.items()) {
    if (item.is_tree()) {
      out.push_back(next++);
      collect_nodes(item.tree(), next, out);
    }
  }
}

NestedWord annotate_rec(const NestedWord& h, uint32_t& next, uint32_t pi) {
  NestedWord out;
  for (const NestedWord::Item& item : h.items()) {
    if (item.is_letter()) {
      out.append(NestedWord::letter(item.letter()));
    } else {
      uint32_t id = next++;
      NestedWord inner = NestedWord::letter(id == pi ? kVarX : kVarNotX);
      inner.append(annotate_rec(item.tree(), next, pi));
      out.append(NestedWord::tree(std::move(inner)));
    }
  }
  return out;
}

}  // namespace

std::vector<uint32_t> nodes(const NestedWord& h) {
  std::vector<uint32_t> out;
  uint32_t next = 1;
  collect_nodes(h, next, out);
  return out;
}

NestedWord annotate(const NestedWord& h, uint32_t pi) {
  if (pi == 0 || pi > nodes(h).size()) {
    throw std::out_of_range("invalid node id " + std::to_string(pi));
  }
  uint32_t next = 1;
  return annotate_rec(h, next, pi);
}

std::vector<uint32_t> select_nodes(const Sha& a, const NestedWord& h) {
  if (h.count_letter(kVarX) > 0 || h.count_letter(kVarNotX) > 0) {
    throw std::invalid_argument("subject hedge contains a reserved symbol");
  }
  std::vector<uint32_t> selected;
  for (uint32_t pi : nodes(h)) {
    if (accepts_nested(a, annotate(h, pi))) selected.push_back(pi);
  }
  return selected;
}

}  // namespace hedge
