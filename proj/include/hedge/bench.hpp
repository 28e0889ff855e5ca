#ifndef HEDGE_BENCH_HPP
#define HEDGE_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hedge/sha.hpp"

namespace hedge::bench {

// Scalable nondeterministic query family over {a,b} + {x,not-x}: selects
// nodes lying exactly n levels below a b-labeled ancestor. The walker may
// track or ignore each x, so unrestricted inputs realize every subset of
// the n tracking states and determinization grows exponentially, while the
// one-x schema keeps only subsets reachable with a single x.
Sha ancestor_family(uint32_t n);

struct Cell {
  bool completed = false;
  size_t size = 0;        // |Q| + |rules| + |apply rules|
  uint32_t states = 0;
  double seconds = 0.0;
  RunStats stats;
};

struct Row {
  uint32_t n = 0;
  Cell automaton;    // A
  Cell determinize;  // det(A)
  Cell det_product;  // det(A x S)
  Cell sdet;         // det_S(A)
};

// Runs the family for n_min..n_max against S = one-x over {a,b}; a cell
// whose construction exceeds timeout_seconds is left blank.
std::vector<Row> run_family(uint32_t n_min, uint32_t n_max, double timeout_seconds);

// Fixed-width table, one row per n, blank cells for timeouts.
std::string format_table(const std::vector<Row>& rows, bool with_stats);

}  // namespace hedge::bench

#endif
