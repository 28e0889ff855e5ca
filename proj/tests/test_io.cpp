#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hedge/canonical.hpp"
#include "hedge/io.hpp"
#include "hedge/queries.hpp"

using namespace hedge;

TEST_CASE("automaton parsing") {
  SUBCASE("nfa round-trip through the canonical form") {
    Nfa a0 = fixtures::a0();
    std::string text = io::serialize(a0);
    io::Automaton parsed = io::parse_automaton(text);
    REQUIRE(std::holds_alternative<Nfa>(parsed));
    CHECK(std::get<Nfa>(parsed) == a0);
    CHECK(std::get<Nfa>(parsed).names == a0.names);  // name comments preserved
    CHECK(io::serialize(std::get<Nfa>(parsed)) == text);
  }
  SUBCASE("dangling state reference names the line") {
    std::string bad = "nfa\nalphabet a\nstates 0 1\ninitial 0\nfinal 1\nrule 0 a 5\n";
    try {
      io::parse_automaton(bad);
      FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
      CHECK(e.position == 6);
      CHECK(std::string(e.what()).find("undeclared state 5") != std::string::npos);
    }
  }
  SUBCASE("sha without treeinit gets an empty tree-initial set") {
    std::string text = "sha\nalphabet a\nstates 0\ninitial 0\nfinal 0\nrule 0 a 0\n";
    io::Automaton parsed = io::parse_automaton(text);
    REQUIRE(std::holds_alternative<Sha>(parsed));
    CHECK(std::get<Sha>(parsed).tree_initial.empty());
  }
  SUBCASE("duplicate rules are rejected") {
    std::string bad = "nfa\nalphabet a\nstates 0\ninitial 0\nfinal\nrule 0 a 0\nrule 0 a 0\n";
    CHECK_THROWS_AS(io::parse_automaton(bad), io::ParseError);
  }
  SUBCASE("reserved tokens cannot be symbols") {
    CHECK_THROWS_AS(io::parse_automaton("nfa\nalphabet < a\nstates\ninitial\nfinal\n"),
                    io::ParseError);
  }
  SUBCASE("unknown sections are rejected") {
    CHECK_THROWS_AS(io::parse_automaton("nfa\nbogus 1\n"), io::ParseError);
  }
  SUBCASE("zero-state automata round-trip") {
    std::string text = "nfa\nalphabet a\nstates\ninitial\nfinal\n";
    io::Automaton parsed = io::parse_automaton(text);
    REQUIRE(std::holds_alternative<Nfa>(parsed));
    CHECK(std::get<Nfa>(parsed).num_states == 0);
    CHECK(io::serialize(std::get<Nfa>(parsed)) == text);
  }
  SUBCASE("treeinit is rejected for word automata") {
    CHECK_THROWS_AS(io::parse_automaton("nfa\nalphabet a\nstates 0\ntreeinit 0\n"),
                    io::ParseError);
  }
  SUBCASE("apply lines are rejected for word automata") {
    CHECK_THROWS_AS(io::parse_automaton("nfa\nalphabet a\nstates 0\napply 0 0 0\n"),
                    io::ParseError);
  }
}

TEST_CASE("nested word parsing") {
  SUBCASE("the worked example hedge") {
    NestedWord h = io::parse_nested_word("< a < b > > c < d < > >");
    NestedWord expect =
        NestedWord::tree(NestedWord::letter("a") + NestedWord::tree(NestedWord::letter("b"))) +
        NestedWord::letter("c") +
        NestedWord::tree(NestedWord::letter("d") + NestedWord::tree(NestedWord{}));
    CHECK(h == expect);
    CHECK(io::serialize(h) == "< a < b > > c < d < > >");
  }
  SUBCASE("empty text is the empty hedge") {
    CHECK(io::parse_nested_word("") == NestedWord{});
    CHECK(io::serialize(NestedWord{}) == "");
  }
  SUBCASE("dangling parentheses are ruled out") {
    CHECK_THROWS_AS(io::parse_nested_word("< a"), io::ParseError);
    CHECK_THROWS_AS(io::parse_nested_word("a >"), io::ParseError);
  }
}

TEST_CASE("dot export") {
  SUBCASE("one-x has exactly three rule edges") {
    std::string dot = io::to_dot(one_x_dfa(fixtures::sigma_a()));
    size_t edges = 0;
    std::istringstream lines(dot);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("  q", 0) == 0 && line.find(" -> ") != std::string::npos) ++edges;
    }
    CHECK(edges == 3);
    CHECK(dot.find("doublecircle") != std::string::npos);
  }
  SUBCASE("byte-identical across runs") {
    Sha ox = one_x_sha(fixtures::sigma_a());
    CHECK(io::to_dot(ox) == io::to_dot(ox));
  }
  SUBCASE("apply edges carry the marker attribute and the tree arrow exists") {
    std::string dot = io::to_dot(one_x_sha(fixtures::sigma_a()));
    CHECK(dot.find("apply=true") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
    CHECK(dot.find("label=\"<>\"") != std::string::npos);
  }
}

TEST_CASE("structurally equal automata serialize identically") {
  Nfa a = fixtures::a0();
  Nfa b;
  b.alphabet = a.alphabet;
  b.num_states = a.num_states;
  b.names = a.names;
  b.initial = {2, 0};
  b.final = {0};
  b.rules = {{2, 1, 1}, {2, 1, 0}, {1, 0, 0}, {0, 1, 1}};  // reversed insertion order
  b.normalize();
  CHECK(a == b);
  CHECK(io::serialize(a) == io::serialize(b));
}

TEST_CASE("canonical_form") {
  SUBCASE("drops unreachable states and renumbers from the initial state") {
    Nfa a;
    a.alphabet = Alphabet({"a"});
    a.num_states = 3;
    a.initial = {2};
    a.final = {0};
    a.rules = {{2, 0, 0}, {1, 0, 1}};  // state 1 unreachable
    a.normalize();
    Nfa c = canonical_form(a);
    CHECK(c.num_states == 2);
    CHECK(c.initial == StateSet{0});
    CHECK(c.final == StateSet{1});
    CHECK(c.rules == std::vector<Rule>{{0, 0, 1}});
  }
  SUBCASE("isomorphic deterministic automata serialize identically") {
    Dfa onex = one_x_dfa(fixtures::sigma_a());
    Dfa flipped = onex;
    flipped.initial = {1};
    flipped.final = {0};
    SymbolId a = 0, x = 1;
    flipped.rules = {{1, a, 1}, {1, x, 0}, {0, a, 0}};
    flipped.names = {"one", "zero"};
    flipped.normalize();
    Nfa c1 = canonical_form(onex);
    Nfa c2 = canonical_form(flipped);
    c1.names.clear();
    c2.names.clear();
    CHECK(io::serialize(c1) == io::serialize(c2));
  }
}
