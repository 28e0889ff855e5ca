#include "doctest.h"
#include "fixtures.hpp"
#include "hedge/io.hpp"
#include "hedge/oracle.hpp"
#include "hedge/queries.hpp"

using namespace hedge;

namespace {

NestedWord nw(const std::string& text) { return io::parse_nested_word(text); }

}  // namespace

TEST_CASE("eval_hedge") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  SUBCASE("empty hedge returns the source set") {
    CHECK(eval_hedge(ox, {1}, NestedWord{}) == StateSet{1});
  }
  SUBCASE("a tree holding one x moves 0 to 1") {
    CHECK(eval_hedge(ox, {0}, nw("< x >")) == StateSet{1});
  }
  SUBCASE("two x trees die: no apply rule (1,1,_)") {
    CHECK(eval_hedge(ox, {0}, nw("< x > < x >")) == StateSet{});
  }
  SUBCASE("letters inside and outside trees") {
    CHECK(accepts_nested(ox, nw("a < x a >")));
    CHECK(!accepts_nested(ox, nw("a")));
  }
  SUBCASE("empty tree-initial set rejects every tree") {
    Sha s = ox;
    s.tree_initial.clear();
    CHECK(!accepts_nested(s, nw("< >")));
    CHECK(eval_hedge(s, {0}, nw("< x >")) == StateSet{});
  }
}

TEST_CASE("is_deterministic_sha") {
  CHECK(is_deterministic_sha(one_x_sha(fixtures::sigma_a())));
  SUBCASE("conflicting apply rules break determinism") {
    Sha s = one_x_sha(fixtures::sigma_a());
    s.apply_rules.push_back(ApplyRule{0, 0, 1});  // clashes with (0,0,0)
    s.normalize();
    CHECK(!is_deterministic_sha(s));
  }
  SUBCASE("an embedded DFA is a deterministic SHA") {
    CHECK(is_deterministic_sha(embed_nfa(one_x_dfa(fixtures::sigma_a()))));
    CHECK(!is_deterministic_sha(embed_nfa(fixtures::a0())));
  }
}

TEST_CASE("determinize_sha") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  SUBCASE("a deterministic accessible SHA maps to itself") {
    ShaDeterminizeResult det = determinize_sha(ox);
    CHECK(det.dsha.num_states == ox.num_states);
    CHECK(oracle::iso_check(det.dsha, ox).has_value());
    CHECK(det.stats.agenda_pushes == det.dsha.num_states);
  }
  SUBCASE("no initial and no tree-initial states gives the zero automaton") {
    Sha s = ox;
    s.initial.clear();
    s.tree_initial.clear();
    CHECK(determinize_sha(s).dsha.num_states == 0);
  }
  SUBCASE("tree initial of the result is the tree-initial subset") {
    Sha s = ox;
    s.tree_initial = {0, 1};  // made nondeterministic on purpose
    ShaDeterminizeResult det = determinize_sha(s);
    REQUIRE(det.dsha.tree_initial.size() == 1);
    CHECK(det.map.subsets[det.dsha.tree_initial.front()] == StateSet{0, 1});
  }
  SUBCASE("language preserved on a nondeterministic instance") {
    // one-x with a second, redundant track for the inner a-loop
    Sha s = one_x_sha(fixtures::sigma_a());
    s.num_states = 3;
    s.names.clear();
    s.rules.push_back(Rule{0, 0, 2});
    s.rules.push_back(Rule{2, 0, 2});
    s.apply_rules.push_back(ApplyRule{2, 0, 2});
    s.normalize();
    ShaDeterminizeResult det = determinize_sha(s);
    CHECK(is_deterministic_sha(det.dsha));
    auto ce = oracle::lang_equal_bounded(s, det.dsha, {.max_hedge_items = 8, .max_depth = 3});
    CHECK(!ce.has_value());
  }
}

TEST_CASE("product_sha") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  SUBCASE("diagonal is isomorphic to the accessible part") {
    ShaProductResult p = product_sha(ox, ox);
    CHECK(oracle::iso_check(p.automaton, ox).has_value());
  }
  SUBCASE("intersection language on small hedges") {
    // all nested words vs exactly-one-x: intersection is one-x
    Sha all;
    all.alphabet = ox.alphabet;
    all.num_states = 1;
    all.initial = all.final = all.tree_initial = {0};
    for (SymbolId s = 0; s < all.alphabet.size(); ++s) all.rules.push_back(Rule{0, s, 0});
    all.apply_rules.push_back(ApplyRule{0, 0, 0});
    all.normalize();
    ShaProductResult p = product_sha(all, ox);
    auto ce = oracle::lang_equal_bounded(p.automaton, ox, {.max_hedge_items = 6, .max_depth = 2});
    CHECK(!ce.has_value());
  }
  SUBCASE("empty tree-initial on one side leaves trees unreadable") {
    Sha s = ox;
    s.tree_initial.clear();
    ShaProductResult p = product_sha(ox, s);
    CHECK(p.automaton.tree_initial.empty());
    CHECK(!accepts_nested(p.automaton, nw("< x >")));
  }
}

TEST_CASE("schema_clean_sha") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  SUBCASE("cleaning a deterministic accessible SHA with itself is the identity") {
    ShaCleanResult cl = schema_clean_sha(ox, ox);
    CHECK(cl.automaton == ox);
  }
  SUBCASE("cleaning never enlarges") {
    Sha s = ox;
    s.rules.push_back(Rule{1, *ox.alphabet.find(kVarX), 1});  // junk outside the schema? no:
    s.normalize();                                            // still inside; just more rules
    ShaCleanResult cl = schema_clean_sha(s, ox);
    CHECK(cl.automaton.size() <= s.size());
  }
  SUBCASE("nondeterministic schema is rejected") {
    Sha bad = ox;
    bad.tree_initial = {0, 1};
    bad.normalize();
    CHECK_THROWS_AS(schema_clean_sha(ox, bad), std::invalid_argument);
  }
}

TEST_CASE("schema_determinize_sha zero cases") {
  Dsha ox = one_x_sha(fixtures::sigma_a());
  Sha a = ox;
  SUBCASE("schema without initial and tree-initial states gives zero states") {
    Dsha dead = ox;
    dead.initial.clear();
    dead.tree_initial.clear();
    CHECK(schema_determinize_sha(a, dead).dsha.num_states == 0);
  }
  SUBCASE("state count never exceeds plain determinization") {
    ShaSchemaDetResult sd = schema_determinize_sha(a, ox);
    CHECK(sd.dsha.num_states <= determinize_sha(a).dsha.num_states);
  }
}

TEST_CASE("nested word representation") {
  SUBCASE("concatenation is flat and associative") {
    NestedWord left = nw("a b");
    left.append(nw("c"));
    NestedWord right = nw("a");
    right.append(nw("b c"));
    CHECK(left == right);
    CHECK(left == nw("a b c"));
  }
  SUBCASE("empty word is neutral") {
    NestedWord h = nw("< a > b");
    NestedWord h2 = h;
    h2.append(NestedWord{});
    CHECK(h == h2);
  }
  SUBCASE("size and depth count recursively") {
    NestedWord h = nw("< a < b > > c < d < > >");
    CHECK(h.total_items() == 8);
    CHECK(h.depth() == 2);
    CHECK(nw("a b").depth() == 0);
  }
}
