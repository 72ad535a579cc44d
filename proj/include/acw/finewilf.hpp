#pragma once

// Fine-Wilf extremal pairs: words x, y whose concatenations xy and yx
// agree on exactly |x|+|y|-gcd(|x|,|y|)-1 leading positions. Such pairs
// almost commute: ham(xy, yx) == 2.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

#include "acw/budget.hpp"
#include "acw/counting.hpp"
#include "acw/word.hpp"

namespace acw {

// Length of the longest common prefix of two equal-length words.
inline std::size_t agreement_prefix_length(const Word& u, const Word& v) {
  detail::require_same_shape(u, v);
  std::size_t len = 0;
  while (len < u.size() && u[len] == v[len]) ++len;
  return len;
}

// True iff xy and yx agree on exactly |x|+|y|-gcd(|x|,|y|)-1 positions.
// The agreement threshold is strictly below |xy|, so hitting it exactly
// already implies a mismatch at the following position.
inline bool is_fine_wilf_pair(const Word& x, const Word& y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("Fine-Wilf test requires non-empty words");
  }
  if (x.alphabet_size() != y.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  const std::size_t threshold =
      x.size() + y.size() - std::gcd(x.size(), y.size()) - 1;
  return agreement_prefix_length(concat(x, y), concat(y, x)) == threshold;
}

// All Fine-Wilf pairs (x, y) with |x| = m and |y| = n, by exhaustive
// search over the k^{m+n} candidate pairs.
inline std::set<std::pair<Word, Word>> search_fine_wilf_pairs(
    Symbol k, std::size_t m, std::size_t n,
    std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (m < 1 || n < 1) {
    throw std::invalid_argument("search_fine_wilf_pairs requires m, n >= 1");
  }
  detail::require_budget(pow_count(k, m + n), budget, "pair search");

  std::set<std::pair<Word, Word>> pairs;
  for_each_word(k, m, [&](const std::vector<Symbol>& xs) {
    const Word x(xs, k);
    for_each_word(k, n, [&](const std::vector<Symbol>& ys) {
      const Word y(ys, k);
      if (is_fine_wilf_pair(x, y)) {
        pairs.emplace(x, y);
      }
    });
  });
  return pairs;
}

}  // namespace acw
