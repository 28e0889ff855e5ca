#ifndef HEDGE_DETAIL_SUCC_INDEX_HPP
#define HEDGE_DETAIL_SUCC_INDEX_HPP

#include <span>
#include <vector>

#include "hedge/detail/set_ops.hpp"

namespace hedge::detail {

// Per-(state, letter) successor lists, built once per construction.
template <typename RuleT>
struct SuccIndexT {
  std::vector<std::vector<uint32_t>> succ;  // state * sigma + letter
  size_t sigma;

  SuccIndexT(uint32_t num_states, size_t sigma_size, std::span<const RuleT> rules)
      : sigma(sigma_size) {
    succ.resize((size_t)num_states * sigma);
    for (const RuleT& r : rules) succ[(size_t)r.src * sigma + r.letter].push_back(r.dst);
    for (auto& v : succ) sort_unique(v);
  }

  const std::vector<uint32_t>& at(uint32_t q, uint32_t letter) const {
    return succ[(size_t)q * sigma + letter];
  }

  std::vector<uint32_t> subset_successors(const std::vector<uint32_t>& subset,
                                          uint32_t letter) const {
    std::vector<uint32_t> out;
    for (uint32_t q : subset) {
      const auto& s = at(q, letter);
      out.insert(out.end(), s.begin(), s.end());
    }
    sort_unique(out);
    return out;
  }
};

}  // namespace hedge::detail

#endif
