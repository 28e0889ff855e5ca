#ifndef HEDGE_CHECKS_HPP
#define HEDGE_CHECKS_HPP

#include <string>
#include <vector>

#include "hedge/nfa.hpp"
#include "hedge/sha.hpp"

namespace hedge::checks {

struct CompareOutcome {
  bool equal = true;
  std::string diagnosis;
};

// Structural equality of schema_determinize(a, s) with
// schema_clean(determinize(a), s): both sides restricted to live states,
// renamed by canonically sorted subsets, serialized and byte-compared.
CompareOutcome compare_sdet_vs_clean_det(const SchemaDetResult& sdet,
                                         const DeterminizeResult& det, const CleanResult& clean);
CompareOutcome compare_sdet_vs_clean_det(const ShaSchemaDetResult& sdet,
                                         const ShaDeterminizeResult& det,
                                         const ShaCleanResult& clean);

// Convenience wrappers running both routes.
CompareOutcome theorem1_equal(const Nfa& a, const Dfa& schema);
CompareOutcome theorem2_equal(const Sha& a, const Dsha& schema);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample, serialized
};

struct SuiteOptions {
  uint64_t seed = 1;
  int count = 100;  // random instances per check
};

// The full invariant suite over seeded random instances; one result per
// named property.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

}  // namespace hedge::checks

#endif
