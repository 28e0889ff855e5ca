#include "doctest.h"
#include "fixtures.hpp"
#include "hedge/io.hpp"
#include "hedge/oracle.hpp"
#include "hedge/queries.hpp"

using namespace hedge;

namespace {

NestedWord nw(const std::string& text) { return io::parse_nested_word(text); }

}  // namespace

TEST_CASE("one_x_dfa") {
  Dfa d = one_x_dfa(fixtures::sigma_a());
  SUBCASE("shape") {
    CHECK(d.num_states == 2);
    CHECK(d.rules.size() == 2 * 1 + 1);
    CHECK(is_deterministic(d));
  }
  SUBCASE("accepts exactly the one-x words") {
    CHECK(accepts(d, "x"));
    CHECK(accepts(d, "a x"));
    CHECK(accepts(d, "x a a"));
    CHECK(!accepts(d, ""));
    CHECK(!accepts(d, "x x"));
    CHECK(!accepts(d, "a"));
  }
  SUBCASE("reserved symbol in sigma") {
    CHECK_THROWS_AS(one_x_dfa(Alphabet({"a", "x"})), std::invalid_argument);
  }
  SUBCASE("language characterization to length 6") {
    SymbolId x = *d.alphabet.find(kVarX);
    oracle::enum_words(d.alphabet, {.max_word_length = 6}, [&](const Word& w) {
      size_t count = 0;
      for (SymbolId c : w) count += c == x;
      CHECK(accepts(d, std::span<const SymbolId>(w)) == (count == 1));
      return true;
    });
  }
}

TEST_CASE("one_x_sha") {
  Dsha d = one_x_sha(fixtures::sigma_a());
  SUBCASE("shape per the drawing") {
    CHECK(d.num_states == 2);
    CHECK(d.initial == StateSet{0});
    CHECK(d.tree_initial == StateSet{0});
    CHECK(d.final == StateSet{1});
    CHECK(d.apply_rules ==
          std::vector<ApplyRule>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(is_deterministic_sha(d));
  }
  SUBCASE("membership spot checks") {
    CHECK(accepts_nested(d, nw("< x >")));
    CHECK(accepts_nested(d, nw("a x a")));
    CHECK(accepts_nested(d, nw("not-x < a not-x x > a")));
    CHECK(!accepts_nested(d, nw("< x > x")));
    CHECK(!accepts_nested(d, nw("")));
    CHECK(!accepts_nested(d, nw("not-x")));
  }
  SUBCASE("reserved symbols rejected") {
    CHECK_THROWS_AS(one_x_sha(Alphabet({"not-x"})), std::invalid_argument);
  }
}

TEST_CASE("insert_word") {
  CHECK(insert_word({}, 0) == std::vector<std::string>{"x"});
  CHECK(insert_word({"a"}, 0) == std::vector<std::string>{"x", "a"});
  CHECK(insert_word({"a", "b"}, 2) == std::vector<std::string>{"a", "b", "x"});
  CHECK_THROWS_AS(insert_word({"a"}, 2), std::out_of_range);
}

TEST_CASE("select_word on the running example") {
  Nfa a0 = fixtures::a0();
  CHECK(select_word(a0, {}) == StateSet{0});
  CHECK(select_word(a0, {"a"}) == StateSet{0});
  CHECK(select_word(a0, {"a", "a"}) == StateSet{});
  CHECK_THROWS_AS(select_word(a0, {"x"}), std::invalid_argument);
}

TEST_CASE("nodes and annotate") {
  SUBCASE("ids are assigned to trees in document order") {
    CHECK(nodes(nw("")).empty());
    CHECK(nodes(nw("a b")).empty());
    CHECK(nodes(nw("< a < b > > c < d < > >")) == std::vector<uint32_t>{1, 2, 3, 4});
  }
  SUBCASE("annotate marks the chosen node with x and the rest with not-x") {
    CHECK(annotate(nw("< a >"), 1) == nw("< x a >"));
    CHECK(annotate(nw("< a > < b >"), 1) == nw("< x a > < not-x b >"));
    CHECK(annotate(nw("< < > >"), 2) == nw("< not-x < x > >"));
    CHECK_THROWS_AS(annotate(nw("< a >"), 2), std::out_of_range);
    CHECK_THROWS_AS(annotate(nw("a"), 1), std::out_of_range);
  }
}

TEST_CASE("select_nodes") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  SUBCASE("the one-x schema as a query selects every node") {
    // every annotation carries exactly one x, so each node is selected;
    // checked over all subject hedges with up to 5 items
    oracle::enum_hedges(fixtures::sigma_a(), {.max_hedge_items = 5, .max_depth = 2},
                        [&](const NestedWord& h) {
                          CHECK(select_nodes(ox, h) == nodes(h));
                          return true;
                        });
  }
  SUBCASE("no nodes on the empty hedge") { CHECK(select_nodes(ox, nw("")).empty()); }
  SUBCASE("reserved symbols in the subject are rejected") {
    CHECK_THROWS_AS(select_nodes(ox, nw("x")), std::invalid_argument);
    CHECK_THROWS_AS(select_nodes(ox, nw("< not-x >")), std::invalid_argument);
  }
}

TEST_CASE("one-x schemas agree on flat inputs") {
  Dfa word_schema = one_x_dfa(fixtures::sigma_a());
  Dsha nested_schema = one_x_sha(fixtures::sigma_a());
  oracle::enum_words(word_schema.alphabet, {.max_word_length = 6}, [&](const Word& w) {
    NestedWord flat;
    for (SymbolId c : w) flat.append(NestedWord::letter(word_schema.alphabet.name(c)));
    CHECK(accepts(word_schema, std::span<const SymbolId>(w)) ==
          accepts_nested(nested_schema, flat));
    return true;
  });
}

TEST_CASE("select_word is invariant under cleaning and determinization") {
  Nfa a0 = fixtures::a0();
  Dfa onex = one_x_dfa(fixtures::sigma_a());
  for (const std::vector<std::string>& w :
       {std::vector<std::string>{}, {"a"}, {"a", "a"}, {"a", "a", "a"}}) {
    StateSet base = select_word(a0, w);
    CHECK(select_word(schema_clean(a0, onex).automaton, w) == base);
    CHECK(select_word(determinize(a0).dfa, w) == base);
    CHECK(select_word(schema_determinize(a0, onex).dfa, w) == base);
    CHECK(select_word(schema_clean(determinize(a0).dfa, onex).automaton, w) == base);
  }
}
