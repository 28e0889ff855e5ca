#ifndef HEDGE_IO_HPP
#define HEDGE_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "hedge/nested_word.hpp"
#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge::io {

// Diagnostic with a 1-based line (automata) or token position (nested words).
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error("line " + std::to_string(pos) + ": " + msg), position(pos) {}
};

using Automaton = std::variant<Nfa, Sha>;

// Textual automaton format:
//
//   nfa | sha
//   alphabet <symbol>...
//   states <id>...            ids must be exactly 0..n-1
//   # name <id> <display name>
//   initial <id>...
//   final <id>...
//   treeinit <id>...          sha only; missing means empty
//   rule <src> <letter> <dst>
//   apply <q1> <q> <q2>       sha only
//
// '#' lines are comments; '# name' comments carry display names, which are
// preserved but not significant for equality. Duplicate rules are rejected.
Automaton parse_automaton(const std::string& text);

// Canonical form: states ascending, rules sorted by (src, letter index,
// dst), apply rules sorted lexicographically. Structurally equal automata
// serialize identically.
std::string serialize(const Nfa& a);
std::string serialize(const Sha& a);
std::string serialize(const Automaton& a);

// Whitespace-separated tokens; '<' opens a tree, '>' closes it, anything
// else is a letter. Dangling parentheses are rejected.
NestedWord parse_nested_word(const std::string& text);

std::string serialize(const NestedWord& h);

// Deterministic DOT export: internal rules as letter-labeled edges, apply
// rules as blue state-labeled edges, in-arrows for initial and tree initial
// states, final states doubly circled.
std::string to_dot(const Nfa& a);
std::string to_dot(const Sha& a);
std::string to_dot(const Automaton& a);

}  // namespace hedge::io

#endif
