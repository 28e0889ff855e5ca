#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hedge/bench.hpp"
#include "hedge/canonical.hpp"
#include "hedge/checks.hpp"
#include "hedge/io.hpp"
#include "hedge/queries.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;  // also precondition and property failures
constexpr int kExitUsage = 2;   // also parse errors

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << content;
}

hedge::io::Automaton load_automaton(const std::string& path) {
  try {
    return hedge::io::parse_automaton(read_file(path));
  } catch (const hedge::io::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const hedge::io::Automaton& result, const std::string& out_path,
          const std::string& dot_path, const char* command, const hedge::RunStats* stats,
          bool want_stats) {
  std::string text = hedge::io::serialize(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  if (!dot_path.empty()) write_file(dot_path, hedge::io::to_dot(result));
  size_t size = std::visit([](const auto& a) { return a.size(); }, result);
  uint32_t states = std::visit([](const auto& a) { return a.num_states; }, result);
  std::cerr << command << ": size " << size << ", #states " << states << "\n";
  if (want_stats && stats) {
    std::cerr << command << ": agenda pushes=" << stats->agenda_pushes
              << " pops=" << stats->agenda_pops << " rules=" << stats->rules_emitted << "\n";
  }
}

struct TransformArgs {
  std::string input;
  std::string second;  // product only
  std::string schema;  // sdet/clean only
  std::string output;
  std::string dot;
  bool stats = false;
};

int cmd_det(const TransformArgs& args) {
  hedge::io::Automaton in = load_automaton(args.input);
  if (auto* nfa = std::get_if<hedge::Nfa>(&in)) {
    hedge::DeterminizeResult r = hedge::determinize(*nfa);
    emit(hedge::canonical_form(r.dfa), args.output, args.dot, "det", &r.stats, args.stats);
  } else {
    hedge::ShaDeterminizeResult r = hedge::determinize_sha(std::get<hedge::Sha>(in));
    emit(hedge::canonical_form(r.dsha), args.output, args.dot, "det", &r.stats, args.stats);
  }
  return kExitOk;
}

int cmd_product(const TransformArgs& args) {
  hedge::io::Automaton lhs = load_automaton(args.input);
  hedge::io::Automaton rhs = load_automaton(args.second);
  if (lhs.index() != rhs.index()) {
    throw PreconditionError("product: inputs must both be word automata or both SHAs");
  }
  if (auto* nfa = std::get_if<hedge::Nfa>(&lhs)) {
    hedge::ProductResult r = hedge::product(*nfa, std::get<hedge::Nfa>(rhs));
    emit(hedge::canonical_form(r.automaton), args.output, args.dot, "product", &r.stats,
         args.stats);
  } else {
    hedge::ShaProductResult r =
        hedge::product_sha(std::get<hedge::Sha>(lhs), std::get<hedge::Sha>(rhs));
    emit(hedge::canonical_form(r.automaton), args.output, args.dot, "product", &r.stats,
         args.stats);
  }
  return kExitOk;
}

int cmd_clean(const TransformArgs& args) {
  hedge::io::Automaton in = load_automaton(args.input);
  hedge::io::Automaton schema = load_automaton(args.schema);
  if (in.index() != schema.index()) {
    throw PreconditionError("clean: automaton and schema must be of the same kind");
  }
  if (auto* nfa = std::get_if<hedge::Nfa>(&in)) {
    hedge::CleanResult r = hedge::schema_clean(*nfa, std::get<hedge::Nfa>(schema));
    emit(hedge::canonical_form(r.automaton), args.output, args.dot, "clean", &r.stats,
         args.stats);
  } else {
    hedge::ShaCleanResult r =
        hedge::schema_clean_sha(std::get<hedge::Sha>(in), std::get<hedge::Sha>(schema));
    emit(hedge::canonical_form(r.automaton), args.output, args.dot, "clean", &r.stats,
         args.stats);
  }
  return kExitOk;
}

int cmd_sdet(const TransformArgs& args) {
  hedge::io::Automaton in = load_automaton(args.input);
  hedge::io::Automaton schema = load_automaton(args.schema);
  if (in.index() != schema.index()) {
    throw PreconditionError("sdet: automaton and schema must be of the same kind");
  }
  if (auto* nfa = std::get_if<hedge::Nfa>(&in)) {
    hedge::SchemaDetResult r = hedge::schema_determinize(*nfa, std::get<hedge::Nfa>(schema));
    emit(hedge::canonical_form(r.dfa), args.output, args.dot, "sdet", &r.stats, args.stats);
  } else {
    hedge::ShaSchemaDetResult r =
        hedge::schema_determinize_sha(std::get<hedge::Sha>(in), std::get<hedge::Sha>(schema));
    emit(hedge::canonical_form(r.dsha), args.output, args.dot, "sdet", &r.stats, args.stats);
  }
  return kExitOk;
}

int cmd_accepts(const std::string& automaton_path, const std::string& input) {
  hedge::io::Automaton aut = load_automaton(automaton_path);
  bool accepted = false;
  try {
    if (auto* nfa = std::get_if<hedge::Nfa>(&aut)) {
      accepted = hedge::accepts(*nfa, input);
    } else {
      accepted = hedge::accepts_nested(std::get<hedge::Sha>(aut),
                                       hedge::io::parse_nested_word(input));
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::cout << (accepted ? "yes" : "no") << "\n";
  return accepted ? kExitOk : kExitReject;
}

int cmd_select(const std::string& query_path, const std::string& subject) {
  hedge::io::Automaton aut = load_automaton(query_path);
  std::vector<uint32_t> hits;
  try {
    if (auto* nfa = std::get_if<hedge::Nfa>(&aut)) {
      std::vector<std::string> tokens;
      std::istringstream in(subject);
      std::string tok;
      while (in >> tok) tokens.push_back(tok);
      hits = hedge::select_word(*nfa, tokens);
    } else {
      hits = hedge::select_nodes(std::get<hedge::Sha>(aut),
                                 hedge::io::parse_nested_word(subject));
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  for (size_t i = 0; i < hits.size(); ++i) std::cout << (i ? " " : "") << hits[i];
  std::cout << "\n";
  return kExitOk;
}

int cmd_check(uint64_t seed, int count) {
  hedge::checks::SuiteOptions opt{seed, count};
  std::vector<hedge::checks::CheckResult> results = hedge::checks::run_suite(opt);
  int failures = 0;
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "ok   " << r.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << r.name << "\n" << r.detail << "\n";
    }
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks passed (seed "
            << seed << ", count " << count << ")\n";
  return failures == 0 ? kExitOk : kExitReject;
}

int cmd_bench(uint32_t n_max, double timeout, bool stats) {
  std::vector<hedge::bench::Row> rows = hedge::bench::run_family(1, n_max, timeout);
  std::cout << hedge::bench::format_table(rows, stats);
  for (const auto& r : rows) {
    if (r.determinize.completed && r.sdet.completed && r.sdet.states > r.determinize.states) {
      std::cerr << "bench: detS(A) larger than det(A) at n=" << r.n << "\n";
      return kExitReject;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite automata on words and stepwise hedge automata on nested words:\n"
      "accessible determinization, products, schema-based cleaning and\n"
      "schema-based determinization"};
  app.require_subcommand(1);

  TransformArgs det_args, sdet_args, product_args, clean_args;
  std::string accepts_automaton, accepts_input, select_query, select_subject;
  uint64_t check_seed = 1;
  int check_count = 100;
  uint32_t bench_n = 6;
  double bench_timeout = 100.0;
  bool bench_stats = false;

  CLI::App* det = app.add_subcommand("det", "accessible determinization");
  det->add_option("input", det_args.input, "automaton file")->required();
  det->add_option("-o,--output", det_args.output, "write the result here (default stdout)");
  det->add_option("--dot", det_args.dot, "also write a DOT rendering");
  det->add_flag("--stats", det_args.stats, "print agenda/store counters");

  CLI::App* sdet = app.add_subcommand("sdet", "schema-based determinization");
  sdet->add_option("input", sdet_args.input, "automaton file")->required();
  sdet->add_option("--schema", sdet_args.schema, "deterministic schema file")->required();
  sdet->add_option("-o,--output", sdet_args.output, "write the result here (default stdout)");
  sdet->add_option("--dot", sdet_args.dot, "also write a DOT rendering");
  sdet->add_flag("--stats", sdet_args.stats, "print agenda/store counters");

  CLI::App* prod = app.add_subcommand("product", "accessible product");
  prod->add_option("input", product_args.input, "first automaton")->required();
  prod->add_option("second", product_args.second, "second automaton")->required();
  prod->add_option("-o,--output", product_args.output, "write the result here (default stdout)");
  prod->add_option("--dot", product_args.dot, "also write a DOT rendering");
  prod->add_flag("--stats", product_args.stats, "print agenda/store counters");

  CLI::App* clean = app.add_subcommand("clean", "schema-based cleaning");
  clean->add_option("input", clean_args.input, "automaton file")->required();
  clean->add_option("--schema", clean_args.schema, "deterministic schema file")->required();
  clean->add_option("-o,--output", clean_args.output, "write the result here (default stdout)");
  clean->add_option("--dot", clean_args.dot, "also write a DOT rendering");
  clean->add_flag("--stats", clean_args.stats, "print agenda/store counters");

  CLI::App* acc = app.add_subcommand("accepts", "membership test (exit 0 yes / 1 no)");
  acc->add_option("automaton", accepts_automaton, "automaton file")->required();
  acc->add_option("input", accepts_input, "word or nested word")->required();

  CLI::App* sel = app.add_subcommand("select", "evaluate a monadic query");
  sel->add_option("query", select_query, "query automaton file")->required();
  sel->add_option("subject", select_subject, "word or nested word without x / not-x")
      ->required();

  CLI::App* check = app.add_subcommand("check", "run the property suite on random instances");
  check->add_option("--seed", check_seed, "random seed (default 1)");
  check->add_option("--count", check_count, "instances per property (default 100)");

  CLI::App* bench =
      app.add_subcommand("bench", "size gap of det(A) vs detS(A) on a scalable family");
  bench->add_option("--n", bench_n, "largest family member (default 6)");
  bench->add_option("--timeout", bench_timeout, "per-cell timeout in seconds (default 100)");
  bench->add_flag("--stats", bench_stats, "include agenda counters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (det->parsed()) return cmd_det(det_args);
    if (sdet->parsed()) return cmd_sdet(sdet_args);
    if (prod->parsed()) return cmd_product(product_args);
    if (clean->parsed()) return cmd_clean(clean_args);
    if (acc->parsed()) return cmd_accepts(accepts_automaton, accepts_input);
    if (sel->parsed()) return cmd_select(select_query, select_subject);
    if (check->parsed()) return cmd_check(check_seed, check_count);
    if (bench->parsed()) return cmd_bench(bench_n, bench_timeout, bench_stats);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitReject;
  }
  return kExitUsage;
}
