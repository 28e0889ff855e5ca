#include "hedge/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hedge/queries.hpp"
#include "hedge/random.hpp"

namespace hedge::bench {

Sha ancestor_family(uint32_t n) {
  if (n == 0) throw std::invalid_argument("ancestor_family: n must be positive");
  Sha a;
  a.alphabet = one_x_sha(letters_alphabet(2)).alphabet;  // a b x not-x
  SymbolId sym_a = *a.alphabet.find("a");
  SymbolId sym_b = *a.alphabet.find("b");
  SymbolId sym_x = *a.alphabet.find(kVarX);
  SymbolId sym_notx = *a.alphabet.find(kVarNotX);

  // 0 = walker, 1..n = x seen at depth 0..n-1 below, n+1 = b label read,
  // n+2 = selection verified
  const StateId z0 = 0;
  auto xv = [&](uint32_t depth) { return (StateId)(1 + depth); };
  const StateId bwait = n + 1;
  const StateId acc = n + 2;
  a.num_states = n + 3;
  a.names.assign(a.num_states, "");
  a.names[z0] = "walk";
  for (uint32_t d = 0; d < n; ++d) a.names[xv(d)] = "x@" + std::to_string(d);
  a.names[bwait] = "b-label";
  a.names[acc] = "hit";

  a.initial = {z0};
  a.tree_initial = {z0};
  a.final = {acc};

  for (SymbolId s : {sym_a, sym_b, sym_x, sym_notx}) a.rules.push_back(Rule{z0, s, z0});
  a.rules.push_back(Rule{z0, sym_x, xv(0)});
  a.rules.push_back(Rule{z0, sym_b, bwait});
  for (uint32_t d = 0; d < n; ++d) {
    a.rules.push_back(Rule{xv(d), sym_a, xv(d)});
    a.rules.push_back(Rule{xv(d), sym_b, xv(d)});
  }
  for (SymbolId s : {sym_a, sym_b, sym_notx}) a.rules.push_back(Rule{acc, s, acc});

  a.apply_rules.push_back(ApplyRule{z0, z0, z0});
  for (uint32_t d = 0; d < n; ++d) a.apply_rules.push_back(ApplyRule{xv(d), z0, xv(d)});
  for (uint32_t d = 1; d < n; ++d) a.apply_rules.push_back(ApplyRule{z0, xv(d - 1), xv(d)});
  a.apply_rules.push_back(ApplyRule{bwait, z0, bwait});
  a.apply_rules.push_back(ApplyRule{bwait, xv(n - 1), acc});
  a.apply_rules.push_back(ApplyRule{z0, acc, acc});
  a.apply_rules.push_back(ApplyRule{acc, z0, acc});
  a.normalize();
  return a;
}

namespace {

template <typename F>
Cell timed_cell(double timeout_seconds, F&& construct) {
  Cell cell;
  Deadline deadline = Deadline::after_seconds(timeout_seconds);
  auto start = std::chrono::steady_clock::now();
  try {
    auto [size, states, stats] = construct(&deadline);
    cell.completed = true;
    cell.size = size;
    cell.states = states;
    cell.stats = stats;
  } catch (const TimeoutError&) {
    cell.completed = false;
  }
  cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

std::tuple<size_t, uint32_t, RunStats> measure(const Sha& a, RunStats stats = {}) {
  return {a.size(), a.num_states, stats};
}

}  // namespace

std::vector<Row> run_family(uint32_t n_min, uint32_t n_max, double timeout_seconds) {
  Dsha schema = one_x_sha(letters_alphabet(2));
  std::vector<Row> rows;
  for (uint32_t n = n_min; n <= n_max; ++n) {
    Row row;
    row.n = n;
    Sha a = ancestor_family(n);
    row.automaton = timed_cell(timeout_seconds, [&](const Deadline*) { return measure(a); });
    row.determinize = timed_cell(timeout_seconds, [&](const Deadline* d) {
      ShaDeterminizeResult r = determinize_sha(a, d);
      return measure(r.dsha, r.stats);
    });
    row.det_product = timed_cell(timeout_seconds, [&](const Deadline* d) {
      ShaProductResult p = product_sha(a, schema, d);
      ShaDeterminizeResult r = determinize_sha(p.automaton, d);
      return measure(r.dsha, r.stats);
    });
    row.sdet = timed_cell(timeout_seconds, [&](const Deadline* d) {
      ShaSchemaDetResult r = schema_determinize_sha(a, schema, d);
      return measure(r.dsha, r.stats);
    });
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string cell_text(const Cell& c) {
  if (!c.completed) return "";
  std::ostringstream out;
  out << c.size << "(" << c.states << ")";
  return out.str();
}

std::string cell_time(const Cell& c) {
  if (!c.completed) return "";
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << c.seconds;
  return out.str();
}

}  // namespace

namespace {

std::string cell_pushes(const Cell& c) {
  return c.completed ? std::to_string(c.stats.agenda_pushes) : "";
}

}  // namespace

std::string format_table(const std::vector<Row>& rows, bool with_stats) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(12) << "A" << std::setw(14) << "det(A)"
      << std::setw(10) << "t(s)" << std::setw(14) << "det(AxS)" << std::setw(10) << "t(s)"
      << std::setw(14) << "detS(A)" << std::setw(10) << "t(s)";
  if (with_stats) {
    out << std::setw(12) << "det push" << std::setw(12) << "AxS push" << std::setw(12)
        << "detS push";
  }
  out << "\n";
  for (const Row& r : rows) {
    out << std::left << std::setw(4) << r.n << std::setw(12) << cell_text(r.automaton)
        << std::setw(14) << cell_text(r.determinize) << std::setw(10) << cell_time(r.determinize)
        << std::setw(14) << cell_text(r.det_product) << std::setw(10) << cell_time(r.det_product)
        << std::setw(14) << cell_text(r.sdet) << std::setw(10) << cell_time(r.sdet);
    if (with_stats) {
      out << std::setw(12) << cell_pushes(r.determinize) << std::setw(12)
          << cell_pushes(r.det_product) << std::setw(12) << cell_pushes(r.sdet);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hedge::bench
