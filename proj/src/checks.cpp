#include "hedge/checks.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "hedge/canonical.hpp"
#include "hedge/detail/set_ops.hpp"
#include "hedge/io.hpp"
#include "hedge/oracle.hpp"
#include "hedge/queries.hpp"
#include "hedge/random.hpp"

namespace hedge::checks {

namespace {

template <typename AutomatonT>
AutomatonT subset_sorted(const AutomatonT& aut, const std::vector<StateSet>& subsets,
                         StateSet keep) {
  std::sort(keep.begin(), keep.end(),
            [&](StateId x, StateId y) { return subsets[x] < subsets[y]; });
  return restrict_states(aut, keep);
}

StateSet all_states(uint32_t n) {
  StateSet out(n);
  for (StateId q = 0; q < n; ++q) out[q] = q;
  return out;
}

CompareOutcome compare_serialized(const std::string& left, const std::string& right) {
  if (left == right) return {};
  return {false, "schema-based determinization:\n" + left +
                     "\nclean(determinize(..)):\n" + right};
}

}  // namespace

CompareOutcome compare_sdet_vs_clean_det(const SchemaDetResult& sdet,
                                         const DeterminizeResult& det, const CleanResult& clean) {
  Nfa left = subset_sorted(sdet.dfa, sdet.map.states.subsets, all_states(sdet.dfa.num_states));
  Nfa right = clean.automaton.num_states == 0
                  ? clean.automaton
                  : subset_sorted(clean.automaton, det.map.subsets, live_states(clean.automaton));
  return compare_serialized(io::serialize(left), io::serialize(right));
}

CompareOutcome compare_sdet_vs_clean_det(const ShaSchemaDetResult& sdet,
                                         const ShaDeterminizeResult& det,
                                         const ShaCleanResult& clean) {
  Sha left = subset_sorted(sdet.dsha, sdet.map.states.subsets, all_states(sdet.dsha.num_states));
  Sha right = clean.automaton.num_states == 0
                  ? clean.automaton
                  : subset_sorted(clean.automaton, det.map.subsets, live_states(clean.automaton));
  return compare_serialized(io::serialize(left), io::serialize(right));
}

CompareOutcome theorem1_equal(const Nfa& a, const Dfa& schema) {
  SchemaDetResult sdet = schema_determinize(a, schema);
  DeterminizeResult det = determinize(a);
  CleanResult clean = schema_clean(det.dfa, schema);
  return compare_sdet_vs_clean_det(sdet, det, clean);
}

CompareOutcome theorem2_equal(const Sha& a, const Dsha& schema) {
  ShaSchemaDetResult sdet = schema_determinize_sha(a, schema);
  ShaDeterminizeResult det = determinize_sha(a);
  ShaCleanResult clean = schema_clean_sha(det.dsha, schema);
  return compare_sdet_vs_clean_det(sdet, det, clean);
}

namespace {

using oracle::EnumerationBound;

const double kDensitySweep[3] = {0.2, 0.5, 0.8};

std::string show_word(const Alphabet& sigma, const Word& w) {
  if (w.empty()) return "<empty word>";
  std::string out;
  for (SymbolId s : w) {
    if (!out.empty()) out += " ";
    out += sigma.name(s);
  }
  return out;
}

std::vector<std::string> random_tokens(Rng& rng, const Alphabet& sigma, size_t max_len) {
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::uniform_int_distribution<size_t> sym(0, sigma.size() - 1);
  std::vector<std::string> out;
  for (size_t i = 0, n = len(rng); i < n; ++i) out.push_back(sigma.name((SymbolId)sym(rng)));
  return out;
}

struct Runner {
  SuiteOptions opt;
  std::vector<CheckResult> results;

  // Runs `body(rng, i)` opt.count times; the first non-empty return value
  // fails the check with that detail.
  void run(const std::string& name, int iterations,
           const std::function<std::string(Rng&, int)>& body) {
    CheckResult r{name, true, ""};
    Rng rng(opt.seed ^ std::hash<std::string>{}(name));
    try {
      for (int i = 0; i < iterations; ++i) {
        std::string detail = body(rng, i);
        if (!detail.empty()) {
          r.pass = false;
          r.detail = detail;
          break;
        }
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

RandomAutomatonParams sweep_params(int i, uint32_t max_states) {
  RandomAutomatonParams p;
  p.max_states = max_states;
  p.rule_density = kDensitySweep[i % 3];
  p.apply_density = kDensitySweep[i % 3] / 3.0;
  return p;
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  Runner run{options, {}};
  const int n = options.count;

  // --- words: determinization ------------------------------------------------

  run.run("words.determinize.language", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
    DeterminizeResult det = determinize(a);
    auto ce = oracle::lang_equal_bounded(a, det.dfa, {.max_word_length = 8});
    if (ce) return "L(det) differs on word: " + show_word(sigma, ce->word);
    if (!is_deterministic(det.dfa)) return "det output not deterministic";
    return "";
  });

  run.run("words.determinize.accessible", n, [](Rng& rng, int i) -> std::string {
    Nfa a = random_nfa(rng, letters_alphabet(1 + i % 3), sweep_params(i, 6));
    DeterminizeResult det = determinize(a);
    if (oracle::reachable_states(det.dfa).size() != det.dfa.num_states) {
      return "det output has unreachable states:\n" + io::serialize(det.dfa);
    }
    std::set<StateSet> distinct;
    for (const StateSet& subset : det.map.subsets) {
      if (subset.empty()) return "empty subset materialized";
      if (!std::is_sorted(subset.begin(), subset.end()) ||
          std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        return "subset not canonically sorted";
      }
      if (!distinct.insert(subset).second) return "subset map not injective";
    }
    return "";
  });

  run.run("words.determinize.naive-oracle", n, [](Rng& rng, int i) -> std::string {
    Nfa a = random_nfa(rng, letters_alphabet(1 + i % 3), sweep_params(i, 6));
    DeterminizeResult det = determinize(a);
    Dfa naive = oracle::accessible_part(oracle::naive_determinize(a));
    if (!oracle::iso_check(det.dfa, naive)) {
      return "det not isomorphic to accessible part of the powerset oracle:\n" +
             io::serialize(det.dfa) + "\nvs\n" + io::serialize(naive);
    }
    return "";
  });

  run.run("words.determinize.agenda", n, [](Rng& rng, int i) -> std::string {
    Nfa a = random_nfa(rng, letters_alphabet(1 + i % 3), sweep_params(i, 6));
    DeterminizeResult det = determinize(a);
    if (det.stats.agenda_pushes != det.dfa.num_states) return "pushes != states";
    if (det.stats.agenda_pops != det.stats.agenda_pushes) return "pops != pushes";
    return "";
  });

  // --- words: product ----------------------------------------------------------

  run.run("words.product.language", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 5));
    Nfa s = random_nfa(rng, sigma, sweep_params(i + 1, 5));
    ProductResult p = product(a, s);
    if (p.stats.agenda_pushes != p.automaton.num_states) return "pushes != states";
    std::string fail;
    oracle::enum_words(sigma, {.max_word_length = 6}, [&](const Word& w) {
      bool both = accepts(a, std::span<const SymbolId>(w)) &&
                  accepts(s, std::span<const SymbolId>(w));
      if (accepts(p.automaton, std::span<const SymbolId>(w)) != both) {
        fail = "product language differs on: " + show_word(sigma, w);
        return false;
      }
      return true;
    });
    return fail;
  });

  // --- words: schema-based cleaning -------------------------------------------

  run.run("words.clean.containment", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    CleanResult cl = schema_clean(a, s);
    const Nfa& c = cl.automaton;
    if (c.num_states != 0 && c.num_states != a.num_states) return "state space changed";
    if (!std::includes(a.initial.begin(), a.initial.end(), c.initial.begin(), c.initial.end()))
      return "initial not contained";
    if (!std::includes(a.final.begin(), a.final.end(), c.final.begin(), c.final.end()))
      return "final not contained";
    if (!std::includes(a.rules.begin(), a.rules.end(), c.rules.begin(), c.rules.end()))
      return "rules not contained";
    if (c.size() > a.size()) return "size grew";
    return "";
  });

  run.run("words.clean.preservation", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 5));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    CleanResult cl = schema_clean(a, s);
    std::string fail;
    oracle::enum_words(sigma, {.max_word_length = 6}, [&](const Word& w) {
      auto sp = std::span<const SymbolId>(w);
      bool in_clean = accepts(cl.automaton, sp);
      if (in_clean && !accepts(a, sp)) {
        fail = "cleaning added word: " + show_word(sigma, w);
        return false;
      }
      if (accepts(s, sp) && in_clean != accepts(a, sp)) {
        fail = "cleaning changed language inside the schema on: " + show_word(sigma, w);
        return false;
      }
      return true;
    });
    return fail;
  });

  run.run("words.clean.idempotent", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 5));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    Nfa once = schema_clean(a, s).automaton;
    Nfa twice = schema_clean(once, s).automaton;
    if (!(once == twice)) {
      return "cleaning not idempotent:\n" + io::serialize(once) + "\nvs\n" + io::serialize(twice);
    }
    return "";
  });

  // --- words: schema-based determinization ------------------------------------

  run.run("words.theorem1", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    CompareOutcome out = theorem1_equal(a, s);
    return out.equal ? "" : out.diagnosis;
  });

  run.run("words.sdet.agenda", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    SchemaDetResult sd = schema_determinize(a, s);
    if (sd.stats.agenda_pushes != sd.map.alignments.size()) return "pushes != alignments";
    if (sd.stats.agenda_pops != sd.stats.agenda_pushes) return "pops != pushes";
    if (sd.dfa.num_states > sd.map.alignments.size()) return "more states than alignments";
    std::set<std::pair<StateId, StateId>> pairs(sd.map.alignments.begin(),
                                                sd.map.alignments.end());
    if (pairs.size() != sd.map.alignments.size()) return "alignment map not injective";
    ProductResult p = product(determinize(a).dfa, s);
    if (sd.map.alignments.size() != p.automaton.num_states) {
      return "alignments != states of det(A) x S";
    }
    return "";
  });

  run.run("words.sdet.size", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    if (schema_determinize(a, s).dfa.num_states > determinize(a).dfa.num_states) {
      return "det_S produced more states than det";
    }
    return "";
  });

  run.run("words.footnote", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 4));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 1, 4));
    Dfa left = determinize(product(a, s).automaton).dfa;
    Dfa right = product(determinize(a).dfa, s).automaton;
    if (!oracle::iso_check(left, right)) {
      return "det(AxS) not isomorphic to det(A)xS:\n" + io::serialize(left) + "\nvs\n" +
             io::serialize(right);
    }
    return "";
  });

  // --- SHAs --------------------------------------------------------------------

  run.run("sha.eval.compositional", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    NestedWord h1 = random_hedge(rng, sigma, 4, 2);
    NestedWord h2 = random_hedge(rng, sigma, 4, 2);
    StateSet from;
    for (StateId q = 0; q < a.num_states; ++q) {
      if (rng() % 2) from.push_back(q);
    }
    NestedWord joined = h1;
    joined.append(h2);
    StateSet direct = eval_hedge(a, from, joined);
    StateSet staged = eval_hedge(a, eval_hedge(a, from, h1), h2);
    if (direct != staged) {
      return "composition broke on " + io::serialize(h1) + " . " + io::serialize(h2);
    }
    return "";
  });

  run.run("sha.dsha.at-most-one", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Dsha d = random_dsha(rng, sigma, sweep_params(i, 5));
    for (int k = 0; k < 10; ++k) {
      NestedWord h = random_hedge(rng, sigma, 6, 3);
      if (eval_hedge(d, d.initial, h).size() > 1) {
        return "deterministic run reached two states on " + io::serialize(h);
      }
      if (eval_hedge(d, d.tree_initial, h).size() > 1) {
        return "deterministic tree run reached two states on " + io::serialize(h);
      }
    }
    return "";
  });

  run.run("sha.determinize.language", std::max(1, n / 4), [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    ShaDeterminizeResult det = determinize_sha(a);
    if (!is_deterministic_sha(det.dsha)) return "det output not deterministic";
    auto ce = oracle::lang_equal_bounded(a, det.dsha, {.max_hedge_items = 6, .max_depth = 2});
    if (ce) return "L(det) differs on hedge: " + io::serialize(ce->hedge);
    return "";
  });

  run.run("sha.determinize.accessible", n, [](Rng& rng, int i) -> std::string {
    Sha a = random_sha(rng, letters_alphabet(1 + i % 2), sweep_params(i, 5));
    ShaDeterminizeResult det = determinize_sha(a);
    if (oracle::reachable_states(det.dsha).size() != det.dsha.num_states) {
      return "det output has unreachable states:\n" + io::serialize(det.dsha);
    }
    if (det.stats.agenda_pushes != det.dsha.num_states) return "pushes != states";
    return "";
  });

  run.run("sha.product.language", std::max(1, n / 4), [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 4));
    Sha s = random_sha(rng, sigma, sweep_params(i + 1, 4));
    ShaProductResult p = product_sha(a, s);
    if (p.stats.agenda_pushes != p.automaton.num_states) return "pushes != states";
    std::string fail;
    oracle::enum_hedges(sigma, {.max_hedge_items = 6, .max_depth = 2}, [&](const NestedWord& h) {
      bool both = accepts_nested(a, h) && accepts_nested(s, h);
      if (accepts_nested(p.automaton, h) != both) {
        fail = "product language differs on: " + io::serialize(h);
        return false;
      }
      return true;
    });
    return fail;
  });

  run.run("sha.clean.containment", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    Dsha s = random_dsha(rng, sigma, sweep_params(i + 1, 4));
    ShaCleanResult cl = schema_clean_sha(a, s);
    const Sha& c = cl.automaton;
    if (c.num_states != 0 && c.num_states != a.num_states) return "state space changed";
    if (!std::includes(a.rules.begin(), a.rules.end(), c.rules.begin(), c.rules.end()))
      return "rules not contained";
    if (!std::includes(a.apply_rules.begin(), a.apply_rules.end(), c.apply_rules.begin(),
                       c.apply_rules.end()))
      return "apply rules not contained";
    if (!std::includes(a.tree_initial.begin(), a.tree_initial.end(), c.tree_initial.begin(),
                       c.tree_initial.end()))
      return "tree initial not contained";
    if (c.size() > a.size()) return "size grew";
    return "";
  });

  run.run("sha.clean.preservation", std::max(1, n / 4), [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    Dsha s = random_dsha(rng, sigma, sweep_params(i + 1, 4));
    ShaCleanResult cl = schema_clean_sha(a, s);
    std::string fail;
    oracle::enum_hedges(sigma, {.max_hedge_items = 6, .max_depth = 2}, [&](const NestedWord& h) {
      bool in_clean = accepts_nested(cl.automaton, h);
      if (in_clean && !accepts_nested(a, h)) {
        fail = "cleaning added hedge: " + io::serialize(h);
        return false;
      }
      if (accepts_nested(s, h) && in_clean != accepts_nested(a, h)) {
        fail = "cleaning changed language inside the schema on: " + io::serialize(h);
        return false;
      }
      return true;
    });
    return fail;
  });

  run.run("sha.theorem2", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    Dsha s = random_dsha(rng, sigma, sweep_params(i + 1, 4));
    CompareOutcome out = theorem2_equal(a, s);
    return out.equal ? "" : out.diagnosis;
  });

  run.run("sha.sdet.agenda", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Sha a = random_sha(rng, sigma, sweep_params(i, 5));
    Dsha s = random_dsha(rng, sigma, sweep_params(i + 1, 4));
    ShaSchemaDetResult sd = schema_determinize_sha(a, s);
    if (sd.stats.agenda_pushes != sd.map.alignments.size()) return "pushes != alignments";
    if (sd.stats.agenda_pops != sd.stats.agenda_pushes) return "pops != pushes";
    ShaProductResult p = product_sha(determinize_sha(a).dsha, s);
    if (sd.map.alignments.size() != p.automaton.num_states) {
      return "alignments != states of det(A) x S";
    }
    return "";
  });

  run.run("sha.conservativity", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    Nfa a = random_nfa(rng, sigma, sweep_params(i, 5));
    Nfa b = random_nfa(rng, sigma, sweep_params(i + 1, 5));
    Dfa s = random_dfa(rng, sigma, sweep_params(i + 2, 4));

    ShaDeterminizeResult dsha = determinize_sha(embed_nfa(a));
    if (io::serialize(word_part(dsha.dsha)) != io::serialize(determinize(a).dfa) ||
        !dsha.dsha.tree_initial.empty() || !dsha.dsha.apply_rules.empty()) {
      return "determinize_sha disagrees with determinize on an embedded NFA";
    }
    ShaProductResult psha = product_sha(embed_nfa(a), embed_nfa(b));
    if (io::serialize(word_part(psha.automaton)) != io::serialize(product(a, b).automaton)) {
      return "product_sha disagrees with product on embedded NFAs";
    }
    ShaCleanResult csha = schema_clean_sha(embed_nfa(a), embed_nfa(s));
    if (io::serialize(word_part(csha.automaton)) != io::serialize(schema_clean(a, s).automaton)) {
      return "schema_clean_sha disagrees with schema_clean on embedded NFAs";
    }
    ShaSchemaDetResult ssha = schema_determinize_sha(embed_nfa(a), embed_nfa(s));
    if (io::serialize(word_part(ssha.dsha)) != io::serialize(schema_determinize(a, s).dfa)) {
      return "schema_determinize_sha disagrees with schema_determinize on embedded NFAs";
    }
    return "";
  });

  // --- canonical schemas and queries -------------------------------------------

  run.run("queries.one-x-dfa.language", 1, [](Rng&, int) -> std::string {
    Alphabet sigma = letters_alphabet(2);
    Dfa d = one_x_dfa(sigma);
    std::string fail;
    oracle::enum_words(d.alphabet, {.max_word_length = 8}, [&](const Word& w) {
      SymbolId x = *d.alphabet.find(kVarX);
      size_t count = (size_t)std::count(w.begin(), w.end(), x);
      if (accepts(d, std::span<const SymbolId>(w)) != (count == 1)) {
        fail = "one-x misclassifies: " + show_word(d.alphabet, w);
        return false;
      }
      return true;
    });
    return fail;
  });

  run.run("queries.one-x-sha.language", 1, [](Rng&, int) -> std::string {
    Dsha d = one_x_sha(letters_alphabet(1));
    std::string fail;
    oracle::enum_hedges(d.alphabet, {.max_hedge_items = 6, .max_depth = 2},
                        [&](const NestedWord& h) {
                          if (accepts_nested(d, h) != (h.count_letter(kVarX) == 1)) {
                            fail = "one-x-nw misclassifies: " + io::serialize(h);
                            return false;
                          }
                          return true;
                        });
    return fail;
  });

  run.run("queries.select.v-structure", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Dfa onex = one_x_dfa(sigma);
    Nfa a = random_nfa(rng, onex.alphabet, sweep_params(i, 5));
    Nfa restricted = product(a, onex).automaton;
    std::vector<std::string> w = random_tokens(rng, sigma, 5);
    for (size_t pi = 0; pi <= w.size(); ++pi) {
      std::vector<std::string> ins = insert_word(w, pi);
      std::string text;
      for (const std::string& t : ins) text += t + " ";
      if (accepts(a, text) != accepts(restricted, text)) {
        return "schema intersection changed an inserted word: " + text;
      }
    }
    return "";
  });

  run.run("queries.invariance.words", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Dfa onex = one_x_dfa(sigma);
    Nfa a = random_nfa(rng, onex.alphabet, sweep_params(i, 5));
    std::vector<std::string> w = random_tokens(rng, sigma, 5);
    StateSet base = select_word(a, w);
    if (select_word(schema_clean(a, onex).automaton, w) != base) {
      return "selection changed under schema-based cleaning";
    }
    if (select_word(determinize(a).dfa, w) != base) {
      return "selection changed under determinization";
    }
    if (select_word(schema_determinize(a, onex).dfa, w) != base) {
      return "selection changed under schema-based determinization";
    }
    return "";
  });

  run.run("queries.invariance.nodes", std::max(1, n / 2), [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 2);
    Dsha onexnw = one_x_sha(sigma);
    Sha a = random_sha(rng, onexnw.alphabet, sweep_params(i, 4));
    NestedWord h = random_hedge(rng, sigma, 6, 2);
    std::vector<uint32_t> base = select_nodes(a, h);
    if (select_nodes(schema_clean_sha(a, onexnw).automaton, h) != base) {
      return "selection changed under schema-based cleaning on " + io::serialize(h);
    }
    if (select_nodes(determinize_sha(a).dsha, h) != base) {
      return "selection changed under determinization on " + io::serialize(h);
    }
    if (select_nodes(schema_determinize_sha(a, onexnw).dsha, h) != base) {
      return "selection changed under schema-based determinization on " + io::serialize(h);
    }
    return "";
  });

  // --- oracle self-checks --------------------------------------------------------

  run.run("oracle.enum-words", 1, [](Rng&, int) -> std::string {
    Alphabet sigma = letters_alphabet(2);
    std::vector<Word> words;
    oracle::enum_words(sigma, {.max_word_length = 5}, [&](const Word& w) {
      words.push_back(w);
      return true;
    });
    if (words.size() != 63) return "expected 63 words, got " + std::to_string(words.size());
    for (size_t i = 1; i < words.size(); ++i) {
      auto key = [](const Word& w) { return std::make_pair(w.size(), w); };
      if (!(key(words[i - 1]) < key(words[i]))) return "order violation";
    }
    return "";
  });

  run.run("oracle.enum-hedges", 1, [](Rng&, int) -> std::string {
    for (auto params :
         {std::tuple<size_t, size_t, size_t>{1, 2, 1}, {2, 4, 2}, {1, 5, 3}}) {
      size_t sigma_size = std::get<0>(params);
      size_t items = std::get<1>(params);
      size_t depth = std::get<2>(params);
      Alphabet sigma = letters_alphabet(sigma_size);
      uint64_t expected = 0;
      for (size_t k = 0; k <= items; ++k) expected += oracle::count_hedges(sigma_size, k, depth);
      std::vector<std::string> seen;
      bool ok = true;
      oracle::enum_hedges(sigma, {.max_hedge_items = items, .max_depth = depth},
                          [&](const NestedWord& h) {
                            std::string repr = io::serialize(h);
                            if (!(io::parse_nested_word(repr) == h)) ok = false;
                            if (h.total_items() > items || h.depth() > depth) ok = false;
                            seen.push_back(repr);
                            return ok;
                          });
      if (!ok) return "malformed or out-of-bound hedge emitted";
      size_t total = seen.size();
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      if (seen.size() != total) return "duplicate hedge emitted";
      if (total != expected) {
        return "hedge count mismatch: got " + std::to_string(total) + ", recurrence says " +
               std::to_string(expected);
      }
    }
    return "";
  });

  // --- io ------------------------------------------------------------------------

  run.run("io.roundtrip", n, [](Rng& rng, int i) -> std::string {
    Alphabet sigma = letters_alphabet(1 + i % 3);
    if (i % 2 == 0) {
      Nfa a = random_nfa(rng, sigma, sweep_params(i, 6));
      if (i % 4 == 0) {
        a.names.assign(a.num_states, "");
        for (StateId q = 0; q < a.num_states; ++q) a.names[q] = "s" + std::to_string(q);
      }
      auto parsed = io::parse_automaton(io::serialize(a));
      if (!std::holds_alternative<Nfa>(parsed) || !(std::get<Nfa>(parsed) == a)) {
        return "nfa round-trip failed:\n" + io::serialize(a);
      }
      if (io::serialize(std::get<Nfa>(parsed)) != io::serialize(a)) return "nfa bytes changed";
    } else {
      Sha a = random_sha(rng, sigma, sweep_params(i, 6));
      auto parsed = io::parse_automaton(io::serialize(a));
      if (!std::holds_alternative<Sha>(parsed) || !(std::get<Sha>(parsed) == a)) {
        return "sha round-trip failed:\n" + io::serialize(a);
      }
      if (io::serialize(std::get<Sha>(parsed)) != io::serialize(a)) return "sha bytes changed";
    }
    return "";
  });

  return run.results;
}

}  // namespace hedge::checks
