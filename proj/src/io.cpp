#include "hedge/io.hpp"

#include <charconv>
#include <sstream>

#include "hedge/detail/set_ops.hpp"

namespace hedge::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

uint32_t parse_uint(const std::string& tok, size_t lineno, const char* what) {
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(lineno, std::string("expected a non-negative integer for ") + what +
                                 ", got '" + tok + "'");
  }
  return value;
}

struct RawAutomaton {
  bool is_sha = false;
  std::vector<std::string> alphabet;
  std::vector<uint32_t> states;
  std::vector<std::pair<uint32_t, std::string>> names;
  std::vector<uint32_t> initial, final, treeinit;
  bool saw_treeinit = false;
  std::vector<std::tuple<uint32_t, std::string, uint32_t, size_t>> rules;  // + line
  std::vector<std::tuple<uint32_t, uint32_t, uint32_t, size_t>> applies;   // + line
};

}  // namespace

Automaton parse_automaton(const std::string& text) {
  RawAutomaton raw;
  bool have_kind = false;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  std::vector<std::pair<std::vector<uint32_t>*, size_t>> state_lists;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "#") {
      if (toks.size() >= 3 && toks[1] == "name") {
        uint32_t id = parse_uint(toks[2], lineno, "state id");
        std::string name;
        for (size_t i = 3; i < toks.size(); ++i) {
          if (i > 3) name += " ";
          name += toks[i];
        }
        raw.names.emplace_back(id, name);
      }
      continue;
    }
    if (!have_kind) {
      if (toks[0] == "nfa" && toks.size() == 1) {
        raw.is_sha = false;
      } else if (toks[0] == "sha" && toks.size() == 1) {
        raw.is_sha = true;
      } else {
        throw ParseError(lineno, "expected header 'nfa' or 'sha'");
      }
      have_kind = true;
      continue;
    }
    const std::string& section = toks[0];
    if (section == "alphabet") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!valid_symbol_name(toks[i])) {
          throw ParseError(lineno, "reserved or invalid symbol '" + toks[i] + "'");
        }
        raw.alphabet.push_back(toks[i]);
      }
    } else if (section == "states") {
      for (size_t i = 1; i < toks.size(); ++i) {
        raw.states.push_back(parse_uint(toks[i], lineno, "state id"));
      }
      state_lists.push_back({&raw.states, lineno});
    } else if (section == "initial") {
      for (size_t i = 1; i < toks.size(); ++i) {
        raw.initial.push_back(parse_uint(toks[i], lineno, "state id"));
      }
      state_lists.push_back({&raw.initial, lineno});
    } else if (section == "final") {
      for (size_t i = 1; i < toks.size(); ++i) {
        raw.final.push_back(parse_uint(toks[i], lineno, "state id"));
      }
      state_lists.push_back({&raw.final, lineno});
    } else if (section == "treeinit") {
      if (!raw.is_sha) throw ParseError(lineno, "'treeinit' is only valid for kind sha");
      raw.saw_treeinit = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        raw.treeinit.push_back(parse_uint(toks[i], lineno, "state id"));
      }
      state_lists.push_back({&raw.treeinit, lineno});
    } else if (section == "rule") {
      if (toks.size() != 4) throw ParseError(lineno, "expected 'rule <src> <letter> <dst>'");
      raw.rules.emplace_back(parse_uint(toks[1], lineno, "state id"), toks[2],
                             parse_uint(toks[3], lineno, "state id"), lineno);
    } else if (section == "apply") {
      if (!raw.is_sha) throw ParseError(lineno, "'apply' is only valid for kind sha");
      if (toks.size() != 4) throw ParseError(lineno, "expected 'apply <q1> <q> <q2>'");
      raw.applies.emplace_back(parse_uint(toks[1], lineno, "state id"),
                               parse_uint(toks[2], lineno, "state id"),
                               parse_uint(toks[3], lineno, "state id"), lineno);
    } else {
      throw ParseError(lineno, "unknown section '" + section + "'");
    }
  }
  if (!have_kind) throw ParseError(lineno, "empty input; expected header 'nfa' or 'sha'");

  // states must be dense 0..n-1
  std::vector<uint32_t> sorted_states = raw.states;
  detail::sort_unique(sorted_states);
  if (sorted_states.size() != raw.states.size()) {
    throw ParseError(1, "duplicate state id in 'states'");
  }
  for (uint32_t i = 0; i < sorted_states.size(); ++i) {
    if (sorted_states[i] != i) {
      throw ParseError(1, "state ids must be dense 0..n-1");
    }
  }
  uint32_t num_states = (uint32_t)sorted_states.size();

  auto check_ref = [&](uint32_t id, size_t ln) {
    if (id >= num_states) {
      throw ParseError(ln, "reference to undeclared state " + std::to_string(id));
    }
  };
  for (auto [list, ln] : state_lists) {
    for (uint32_t id : *list) check_ref(id, ln);
  }

  Alphabet alphabet;
  try {
    alphabet = Alphabet(raw.alphabet);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }

  std::vector<std::string> names;
  for (auto& [id, name] : raw.names) {
    check_ref(id, 1);
    if (names.empty()) names.resize(num_states);
    names[id] = name;
  }

  std::vector<Rule> rules;
  for (auto& [src, letter, dst, ln] : raw.rules) {
    check_ref(src, ln);
    check_ref(dst, ln);
    auto sym = alphabet.find(letter);
    if (!sym) throw ParseError(ln, "letter '" + letter + "' is not in the alphabet");
    Rule r{src, *sym, dst};
    if (std::find(rules.begin(), rules.end(), r) != rules.end()) {
      throw ParseError(ln, "duplicate rule");
    }
    rules.push_back(r);
  }

  if (!raw.is_sha) {
    Nfa a;
    a.alphabet = std::move(alphabet);
    a.num_states = num_states;
    a.names = std::move(names);
    a.initial = raw.initial;
    a.final = raw.final;
    a.rules = std::move(rules);
    a.normalize();
    return a;
  }

  Sha a;
  a.alphabet = std::move(alphabet);
  a.num_states = num_states;
  a.names = std::move(names);
  a.initial = raw.initial;
  a.final = raw.final;
  a.tree_initial = raw.treeinit;
  a.rules = std::move(rules);
  for (auto& [l, m, d, ln] : raw.applies) {
    check_ref(l, ln);
    check_ref(m, ln);
    check_ref(d, ln);
    ApplyRule r{l, m, d};
    if (std::find(a.apply_rules.begin(), a.apply_rules.end(), r) != a.apply_rules.end()) {
      throw ParseError(ln, "duplicate apply rule");
    }
    a.apply_rules.push_back(r);
  }
  a.normalize();
  return a;
}

namespace {

void write_ids(std::ostringstream& out, const char* keyword, const StateSet& ids) {
  out << keyword;
  for (StateId q : ids) out << " " << q;
  out << "\n";
}

void write_common(std::ostringstream& out, const Alphabet& alphabet, uint32_t num_states,
                  const std::vector<std::string>& names) {
  out << "alphabet";
  for (const std::string& s : alphabet.symbols()) out << " " << s;
  out << "\n";
  out << "states";
  for (uint32_t q = 0; q < num_states; ++q) out << " " << q;
  out << "\n";
  for (uint32_t q = 0; q < names.size(); ++q) {
    if (!names[q].empty()) out << "# name " << q << " " << names[q] << "\n";
  }
}

void write_rules(std::ostringstream& out, const Alphabet& alphabet,
                 const std::vector<Rule>& rules) {
  std::vector<Rule> sorted = rules;
  std::sort(sorted.begin(), sorted.end());
  for (const Rule& r : sorted) {
    out << "rule " << r.src << " " << alphabet.name(r.letter) << " " << r.dst << "\n";
  }
}

}  // namespace

std::string serialize(const Nfa& a) {
  std::ostringstream out;
  out << "nfa\n";
  write_common(out, a.alphabet, a.num_states, a.names);
  write_ids(out, "initial", a.initial);
  write_ids(out, "final", a.final);
  write_rules(out, a.alphabet, a.rules);
  return out.str();
}

std::string serialize(const Sha& a) {
  std::ostringstream out;
  out << "sha\n";
  write_common(out, a.alphabet, a.num_states, a.names);
  write_ids(out, "initial", a.initial);
  write_ids(out, "final", a.final);
  write_ids(out, "treeinit", a.tree_initial);
  write_rules(out, a.alphabet, a.rules);
  std::vector<ApplyRule> sorted = a.apply_rules;
  std::sort(sorted.begin(), sorted.end());
  for (const ApplyRule& r : sorted) {
    out << "apply " << r.left << " " << r.arg << " " << r.dst << "\n";
  }
  return out.str();
}

std::string serialize(const Automaton& a) {
  return std::visit([](const auto& x) { return serialize(x); }, a);
}

NestedWord parse_nested_word(const std::string& text) {
  std::vector<NestedWord> stack;
  stack.emplace_back();
  std::istringstream in(text);
  std::string tok;
  size_t pos = 0;
  while (in >> tok) {
    ++pos;
    if (tok == "<") {
      stack.emplace_back();
    } else if (tok == ">") {
      if (stack.size() == 1) {
        throw ParseError(pos, "unbalanced '>' at token " + std::to_string(pos));
      }
      NestedWord inner = std::move(stack.back());
      stack.pop_back();
      stack.back().append(NestedWord::tree(std::move(inner)));
    } else {
      stack.back().append(NestedWord::letter(tok));
    }
  }
  if (stack.size() != 1) {
    throw ParseError(pos, "unbalanced '<': " + std::to_string(stack.size() - 1) +
                              " tree(s) left open");
  }
  return std::move(stack.back());
}

std::string serialize(const NestedWord& h) {
  std::string out;
  std::function<void(const NestedWord&)> walk = [&](const NestedWord& w) {
    for (const NestedWord::Item& item : w.items()) {
      if (!out.empty()) out += " ";
      if (item.is_letter()) {
        out += item.letter();
      } else {
        out += "<";
        walk(item.tree());
        out += " >";
      }
    }
  };
  walk(h);
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void dot_nodes(std::ostringstream& out, uint32_t num_states, const StateSet& final,
               const std::function<std::string(StateId)>& name) {
  for (StateId q = 0; q < num_states; ++q) {
    out << "  q" << q << " [label=\"" << dot_escape(name(q)) << "\"";
    if (detail::contains(final, q)) out << ", shape=doublecircle";
    out << "];\n";
  }
}

void dot_in_arrows(std::ostringstream& out, const StateSet& states, const char* prefix,
                   const char* label) {
  for (size_t i = 0; i < states.size(); ++i) {
    out << "  " << prefix << i << " [shape=point, style=invis];\n";
    out << "  " << prefix << i << " -> q" << states[i];
    if (*label) out << " [label=\"" << label << "\"]";
    out << ";\n";
  }
}

void dot_rules(std::ostringstream& out, const Alphabet& alphabet,
               const std::vector<Rule>& rules) {
  std::vector<Rule> sorted = rules;
  std::sort(sorted.begin(), sorted.end());
  for (const Rule& r : sorted) {
    out << "  q" << r.src << " -> q" << r.dst << " [label=\""
        << dot_escape(alphabet.name(r.letter)) << "\"];\n";
  }
}

}  // namespace

std::string to_dot(const Nfa& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  dot_nodes(out, a.num_states, a.final, [&](StateId q) { return a.state_name(q); });
  dot_in_arrows(out, a.initial, "init", "");
  dot_rules(out, a.alphabet, a.rules);
  out << "}\n";
  return out.str();
}

std::string to_dot(const Sha& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  dot_nodes(out, a.num_states, a.final, [&](StateId q) { return a.state_name(q); });
  dot_in_arrows(out, a.initial, "init", "");
  dot_in_arrows(out, a.tree_initial, "tinit", "<>");
  dot_rules(out, a.alphabet, a.rules);
  std::vector<ApplyRule> sorted = a.apply_rules;
  std::sort(sorted.begin(), sorted.end());
  for (const ApplyRule& r : sorted) {
    out << "  q" << r.left << " -> q" << r.dst << " [label=\"" << dot_escape(a.state_name(r.arg))
        << "\", color=blue, fontcolor=blue, apply=true];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Automaton& a) {
  return std::visit([](const auto& x) { return to_dot(x); }, a);
}

}  // namespace hedge::io
