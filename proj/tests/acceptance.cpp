// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hedge/bench.hpp"
#include "hedge/checks.hpp"
#include "hedge/io.hpp"
#include "hedge/oracle.hpp"
#include "hedge/queries.hpp"
#include "hedge/random.hpp"

using namespace hedge;

namespace {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = true;
  std::string note;
  double seconds = 0;
};

// Criterion 8 is accumulated while running criteria 1-6: every worklist run
// must push each agenda item exactly once.
struct AgendaLedger {
  uint64_t runs = 0;
  uint64_t violations = 0;
  std::string first_violation;

  void det_run(const RunStats& stats, uint32_t states, const char* what) {
    ++runs;
    if (stats.agenda_pushes != states || stats.agenda_pops != stats.agenda_pushes) {
      record(what);
    }
  }
  void sdet_run(const RunStats& stats, size_t alignments, uint32_t product_states,
                const char* what) {
    ++runs;
    if (stats.agenda_pushes != alignments || stats.agenda_pops != stats.agenda_pushes ||
        alignments != product_states) {
      record(what);
    }
  }
  void record(const char* what) {
    ++violations;
    if (first_violation.empty()) first_violation = what;
  }
};

AgendaLedger agenda;

double density(int i) {
  static const double sweep[3] = {0.2, 0.5, 0.8};
  return sweep[i % 3];
}

std::string show_word(const Alphabet& sigma, const Word& w) {
  if (w.empty()) return "<empty>";
  std::string out;
  for (SymbolId c : w) {
    if (!out.empty()) out += " ";
    out += sigma.name(c);
  }
  return out;
}

Criterion criterion1() {
  Criterion c;
  c.id = 1;
  c.name = "Theorem 1: det_S(A) = scl_S(det(A)) on 1000 seeded (NFA, DFA) pairs";
  Rng rng(20220901);
  for (int i = 0; i < 1000 && c.pass; ++i) {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    RandomAutomatonParams p;
    p.max_states = 6;
    p.rule_density = density(i);
    Nfa a = random_nfa(rng, sigma, p);
    Dfa s = random_dfa(rng, sigma, p);

    SchemaDetResult sdet = schema_determinize(a, s);
    DeterminizeResult det = determinize(a);
    CleanResult clean = schema_clean(det.dfa, s);
    agenda.det_run(det.stats, det.dfa.num_states, "determinize (criterion 1)");
    ProductResult check_product = product(det.dfa, s);
    agenda.det_run(check_product.stats, check_product.automaton.num_states,
                   "product (criterion 1)");
    agenda.sdet_run(sdet.stats, sdet.map.alignments.size(), check_product.automaton.num_states,
                    "schema_determinize (criterion 1)");

    checks::CompareOutcome out = checks::compare_sdet_vs_clean_det(sdet, det, clean);
    if (!out.equal) {
      c.pass = false;
      c.note = "instance " + std::to_string(i) + " differs:\n" + io::serialize(a) + "schema:\n" +
               io::serialize(s) + out.diagnosis;
    }
  }
  return c;
}

Criterion criterion2() {
  Criterion c;
  c.id = 2;
  c.name = "Theorem 2: det_S(A) = scl_S(det(A)) on 500 seeded (SHA, dSHA) pairs";
  Rng rng(20220902);
  for (int i = 0; i < 500 && c.pass; ++i) {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    RandomAutomatonParams p;
    p.max_states = 5;
    p.rule_density = density(i);
    p.apply_density = density(i + 1) / 3.0;
    Sha a = random_sha(rng, sigma, p);
    Dsha s = random_dsha(rng, sigma, p);

    ShaSchemaDetResult sdet = schema_determinize_sha(a, s);
    ShaDeterminizeResult det = determinize_sha(a);
    ShaCleanResult clean = schema_clean_sha(det.dsha, s);
    agenda.det_run(det.stats, det.dsha.num_states, "determinize_sha (criterion 2)");
    ShaProductResult check_product = product_sha(det.dsha, s);
    agenda.det_run(check_product.stats, check_product.automaton.num_states,
                   "product_sha (criterion 2)");
    agenda.sdet_run(sdet.stats, sdet.map.alignments.size(), check_product.automaton.num_states,
                    "schema_determinize_sha (criterion 2)");

    checks::CompareOutcome out = checks::compare_sdet_vs_clean_det(sdet, det, clean);
    if (!out.equal) {
      c.pass = false;
      c.note = "instance " + std::to_string(i) + " differs:\n" + io::serialize(a) + "schema:\n" +
               io::serialize(s) + out.diagnosis;
    }
  }
  return c;
}

Criterion criterion3() {
  Criterion c;
  c.id = 3;
  c.name = "cleaning preserves the language inside the schema (300 word + 300 hedge instances)";
  Rng rng(20220903);
  for (int i = 0; i < 300 && c.pass; ++i) {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    RandomAutomatonParams p;
    p.max_states = 6;
    p.rule_density = density(i);
    Nfa a = random_nfa(rng, sigma, p);
    Dfa s = random_dfa(rng, sigma, p);
    CleanResult cl = schema_clean(a, s);
    oracle::enum_words(sigma, {.max_word_length = 8}, [&](const Word& w) {
      auto sp = std::span<const SymbolId>(w);
      bool in_schema = accepts(s, sp);
      bool in_a = accepts(a, sp);
      bool in_clean = accepts(cl.automaton, sp);
      if ((in_clean && !in_a) || (in_schema && in_a != in_clean)) {
        c.pass = false;
        c.note = "word instance " + std::to_string(i) + " violated on: " + show_word(sigma, w);
        return false;
      }
      return true;
    });
  }
  std::vector<NestedWord> hedges;
  Alphabet one = letters_alphabet(1);
  oracle::enum_hedges(one, {.max_hedge_items = 8, .max_depth = 3}, [&](const NestedWord& h) {
    hedges.push_back(h);
    return true;
  });
  for (int i = 0; i < 300 && c.pass; ++i) {
    RandomAutomatonParams p;
    p.max_states = 5;
    p.rule_density = density(i);
    p.apply_density = density(i + 1) / 3.0;
    Sha a = random_sha(rng, one, p);
    Dsha s = random_dsha(rng, one, p);
    ShaCleanResult cl = schema_clean_sha(a, s);
    for (const NestedWord& h : hedges) {
      bool in_schema = accepts_nested(s, h);
      bool in_a = accepts_nested(a, h);
      bool in_clean = accepts_nested(cl.automaton, h);
      if ((in_clean && !in_a) || (in_schema && in_a != in_clean)) {
        c.pass = false;
        c.note = "hedge instance " + std::to_string(i) + " violated on: " + io::serialize(h);
        break;
      }
    }
  }
  return c;
}

Criterion criterion4() {
  Criterion c;
  c.id = 4;
  c.name = "determinization soundness + naive powerset oracle (300 instances)";
  Rng rng(20220904);
  for (int i = 0; i < 300 && c.pass; ++i) {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    RandomAutomatonParams p;
    p.max_states = 6;
    p.rule_density = density(i);
    Nfa a = random_nfa(rng, sigma, p);
    DeterminizeResult det = determinize(a);
    agenda.det_run(det.stats, det.dfa.num_states, "determinize (criterion 4)");
    auto ce = oracle::lang_equal_bounded(a, det.dfa, {.max_word_length = 8});
    if (ce) {
      c.pass = false;
      c.note =
          "instance " + std::to_string(i) + ": language differs on " + show_word(sigma, ce->word);
      break;
    }
    Dfa naive = oracle::accessible_part(oracle::naive_determinize(a));
    if (!oracle::iso_check(det.dfa, naive)) {
      c.pass = false;
      c.note = "instance " + std::to_string(i) + ": det(A) not isomorphic to the oracle";
    }
  }
  return c;
}

Criterion criterion5() {
  Criterion c;
  c.id = 5;
  c.name = "footnote: det(AxS) isomorphic to det(A)xS via the subset-pairing map (300 instances)";
  Rng rng(20220905);
  for (int i = 0; i < 300 && c.pass; ++i) {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    RandomAutomatonParams p;
    p.max_states = 4;
    p.rule_density = density(i);
    Nfa a = random_nfa(rng, sigma, p);
    Dfa s = random_dfa(rng, sigma, p);

    ProductResult base = product(a, s);
    agenda.det_run(base.stats, base.automaton.num_states, "product (criterion 5)");
    DeterminizeResult left = determinize(base.automaton);
    agenda.det_run(left.stats, left.dfa.num_states, "determinize (criterion 5)");
    DeterminizeResult det_a = determinize(a);
    ProductResult right = product(det_a.dfa, s);

    auto iso = oracle::iso_check(left.dfa, right.automaton);
    if (!iso) {
      c.pass = false;
      c.note = "instance " + std::to_string(i) + ": not isomorphic";
      break;
    }
    // exact isomorphism via {(q1,s),..,(qn,s)} -> ({q1..qn}, s)
    for (StateId q = 0; q < left.dfa.num_states && c.pass; ++q) {
      StateSet a_part;
      std::set<StateId> s_part;
      for (StateId pair_id : left.map.subsets[q]) {
        a_part.push_back(base.map.pairs[pair_id].first);
        s_part.insert(base.map.pairs[pair_id].second);
      }
      std::sort(a_part.begin(), a_part.end());
      a_part.erase(std::unique(a_part.begin(), a_part.end()), a_part.end());
      auto [det_state, schema_state] = right.map.pairs[(*iso)[q]];
      if (s_part.size() != 1 || schema_state != *s_part.begin() ||
          det_a.map.subsets[det_state] != a_part) {
        c.pass = false;
        c.note = "instance " + std::to_string(i) + ": bijection is not the subset-pairing map";
      }
    }
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  c.id = 6;
  c.name = "A0 pipeline: det states, cleaned language, intersection, selections";
  Nfa a0 = fixtures::a0();
  Dfa onex = one_x_dfa(fixtures::sigma_a());
  DeterminizeResult det = determinize(a0);
  agenda.det_run(det.stats, det.dfa.num_states, "determinize (criterion 6)");
  CleanResult clean = schema_clean(det.dfa, onex);

  auto fail = [&](const std::string& why) {
    c.pass = false;
    if (c.note.empty()) c.note = why;
  };
  if (det.dfa.num_states != 4) fail("det(A0) must have 4 states");
  auto member = [](const Nfa& m, const char* text) { return accepts(m, text); };
  if (!member(det.dfa, "") || !member(det.dfa, "x x a")) fail("eps and xxa must be in L(det(A0))");
  if (member(clean.automaton, "") || member(clean.automaton, "x x a")) {
    fail("eps and xxa must vanish after cleaning");
  }
  std::set<std::string> inter;
  oracle::enum_words(a0.alphabet, {.max_word_length = 6}, [&](const Word& w) {
    if (accepts(det.dfa, std::span<const SymbolId>(w)) &&
        accepts(onex, std::span<const SymbolId>(w))) {
      std::string s;
      for (SymbolId x : w) s += a0.alphabet.name(x);
      inter.insert(s);
    }
    return true;
  });
  if (inter != std::set<std::string>{"x", "xa"}) fail("L(det(A0)) n L(one-x) must be {x, xa}");
  if (select_word(a0, {}) != StateSet{0}) fail("select(A0, eps) must be {0}");
  if (select_word(a0, {"a"}) != StateSet{0}) fail("select(A0, a) must be {0}");
  if (!select_word(a0, {"a", "a"}).empty()) fail("select(A0, aa) must be empty");
  return c;
}

Criterion criterion7() {
  Criterion c;
  c.id = 7;
  c.name = "one-x-nw accepts exactly the one-x hedges (<= 8 items, depth <= 3)";
  Dsha ox = one_x_sha(letters_alphabet(1));
  uint64_t expected = 0;
  for (size_t k = 0; k <= 8; ++k) expected += oracle::count_hedges(3, k, 3);
  uint64_t seen = 0;
  oracle::enum_hedges(ox.alphabet, {.max_hedge_items = 8, .max_depth = 3},
                      [&](const NestedWord& h) {
                        ++seen;
                        if (accepts_nested(ox, h) != (h.count_letter(kVarX) == 1)) {
                          c.pass = false;
                          c.note = "misclassified hedge: " + io::serialize(h);
                          return false;
                        }
                        return true;
                      });
  if (c.pass && seen != expected) {
    c.pass = false;
    c.note =
        "enumeration incomplete: " + std::to_string(seen) + " of " + std::to_string(expected);
  }
  return c;
}

Criterion criterion8() {
  Criterion c;
  c.id = 8;
  c.name = "agenda discipline: every agenda item pushed exactly once in criteria 1-6";
  c.note = std::to_string(agenda.runs) + " construction runs audited";
  if (agenda.violations != 0) {
    c.pass = false;
    c.note = std::to_string(agenda.violations) + " violations; first: " + agenda.first_violation;
  }
  return c;
}

Criterion criterion9() {
  Criterion c;
  c.id = 9;
  c.name = "benchmark: |states(det_S(A))| <= |states(det(A))| with a >= 2x row";
  std::vector<bench::Row> rows = bench::run_family(1, 6, 100.0);
  bool strict = false;
  for (const bench::Row& r : rows) {
    if (!r.determinize.completed || !r.sdet.completed) continue;
    if (r.sdet.states > r.determinize.states) {
      c.pass = false;
      c.note = "ordering violated at n=" + std::to_string(r.n);
      return c;
    }
    if (r.determinize.states >= 2 * r.sdet.states) strict = true;
  }
  if (!strict) {
    c.pass = false;
    c.note = "no row with a factor >= 2";
    return c;
  }
  std::string gaps;
  for (const bench::Row& r : rows) {
    gaps += " n=" + std::to_string(r.n) + ":" + std::to_string(r.determinize.states) + "/" +
            std::to_string(r.sdet.states);
  }
  c.note = "det(A) vs det_S(A) states:" + gaps;
  return c;
}

Criterion timed(Criterion (*f)(), double limit_seconds) {
  auto start = std::chrono::steady_clock::now();
  Criterion c = f();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && c.seconds > limit_seconds) {
    c.pass = false;
    c.note = "exceeded the " + std::to_string((int)limit_seconds) + " s budget";
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(timed(criterion1, 60));
  results.push_back(timed(criterion2, 120));
  results.push_back(timed(criterion3, 0));
  results.push_back(timed(criterion4, 0));
  results.push_back(timed(criterion5, 0));
  results.push_back(timed(criterion6, 0));
  results.push_back(timed(criterion7, 30));
  results.push_back(timed(criterion8, 0));
  results.push_back(timed(criterion9, 0));

  int failures = 0;
  for (const Criterion& c : results) {
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.seconds, c.note.empty() ? "" : " -- ", c.note.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d/9 acceptance criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
