#pragma once

// Constructive enumerators for the conjugate-at-distance-2 sets, and the
// exhaustive scan oracle every closed form is validated against.
//
// The enumerators realize the block characterizations directly and never
// scan the full word universe; the oracle does exactly that scan and takes
// no structural shortcut, so the two sides stay independent.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "acw/budget.hpp"
#include "acw/counting.hpp"
#include "acw/word.hpp"

namespace acw {

// Parameters pinning one member of H(n,i). With g = gcd(n,i) the word
// splits into blocks x_0..x_{n/g-1} of length g; two block indices
// j1 < j2 carry values a and b one symbol apart, and every other block
// copies its successor at stride i/g. Realization therefore assigns b to
// the stride-cycle segment after j1 through j2 and a to the rest.
struct BlockCharacterization {
  std::size_t j1 = 0;
  std::size_t j2 = 0;
  Word a;
  Word b;

  Word realize(std::size_t n, std::size_t i) const {
    const std::size_t g = std::gcd(n, i);
    const std::size_t m = n / g;
    if (a.size() != g || b.size() != g || hamming(a, b) != 1) {
      throw std::invalid_argument(
          "block values must have length gcd(n,i) and differ exactly once");
    }
    if (j1 >= j2 || j2 >= m) {
      throw std::invalid_argument("block indices must satisfy 0 <= j1 < j2 < n/g");
    }
    const std::size_t step = i / g;
    std::vector<Symbol> symbols(n);
    auto put_block = [&](std::size_t block, const Word& value) {
      std::copy(value.symbols().begin(), value.symbols().end(),
                symbols.begin() + static_cast<std::ptrdiff_t>(block * g));
    };
    put_block(j1, a);
    const Word* value = &b;
    std::size_t cur = (j1 + step) % m;
    while (cur != j1) {
      put_block(cur, *value);
      if (cur == j2) value = &a;
      cur = (cur + step) % m;
    }
    return Word(std::move(symbols), a.alphabet_size());
  }
};

// Shape of every word lying in two shift classes at once: one block
// differs from a power by a single symbol, w = u^p v u^{n/g-p-1}.
struct OneErrorPowerForm {
  Word u;
  Word v;
  std::size_t p = 0;

  Word realize(std::size_t n) const {
    const std::size_t g = u.size();
    if (g == 0 || n % g != 0 || v.size() != g || hamming(u, v) != 1) {
      throw std::invalid_argument(
          "power form needs |u| = |v| dividing n and ham(u,v) == 1");
    }
    const std::size_t m = n / g;
    if (p >= m) {
      throw std::invalid_argument("power form needs p < n/|u|");
    }
    std::vector<Symbol> symbols;
    symbols.reserve(n);
    for (std::size_t t = 0; t < m; ++t) {
      const Word& block = t == p ? v : u;
      symbols.insert(symbols.end(), block.symbols().begin(),
                     block.symbols().end());
    }
    return Word(std::move(symbols), u.alphabet_size());
  }
};

// One full scan over all k^n words.
struct HCensus {
  Count h = 0;                                  // some conjugate at distance 2
  std::map<std::size_t, Count> h_by_shift;      // i -> |H(n,i)|, 1 <= i < n
  std::map<std::size_t, Count> h_new_by_shift;  // i -> members whose smallest
                                                //      distance-2 shift is i
  Count h_exactly_one = 0;  // members with exactly one distinct conjugate
                            // at distance 2
  Count lyndon_in_h = 0;
};

namespace detail {

// hamming(w, rotate(w, i)) without materializing the rotation.
inline std::size_t rotated_distance(const std::vector<Symbol>& w,
                                    std::size_t i) {
  const std::size_t n = w.size();
  std::size_t d = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t s = t + i;
    if (s >= n) s -= n;
    d += w[t] != w[s];
  }
  return d;
}

inline bool lyndon_raw(const std::vector<Symbol>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t s = t + i;
      if (s >= n) s -= n;
      if (w[t] < w[s]) break;
      if (w[t] > w[s]) return false;
      if (t + 1 == n) return false;
    }
  }
  return true;
}

}  // namespace detail

// Scans all k^n words and returns {w : ham(w, rotate(w,i)) == 2}.
inline std::set<Word> oracle_shift_members(
    Symbol k, std::size_t n, std::size_t i,
    std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (i < 1 || i >= n) {
    throw std::invalid_argument("oracle_shift_members requires n > i >= 1");
  }
  detail::require_budget(pow_count(k, n), budget, "oracle scan");
  std::set<Word> members;
  for_each_word(k, n, [&](const std::vector<Symbol>& w) {
    if (detail::rotated_distance(w, i) == 2) {
      members.emplace(w, k);
    }
  });
  return members;
}

// One scan computing every census quantity at once. Counts "exactly one
// conjugate" over distinct conjugate words, deduplicating equal rotations.
inline HCensus oracle_h_census(Symbol k, std::size_t n,
                               std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 1) throw std::invalid_argument("oracle_h_census requires n >= 1");
  detail::require_budget(pow_count(k, n), budget, "oracle scan");

  HCensus census;
  for (std::size_t i = 1; i < n; ++i) census.h_by_shift[i] = 0;
  for (std::size_t i = 1; 2 * i <= n; ++i) census.h_new_by_shift[i] = 0;

  std::vector<std::size_t> hits;
  for_each_word(k, n, [&](const std::vector<Symbol>& w) {
    hits.clear();
    for (std::size_t i = 1; i < n; ++i) {
      if (detail::rotated_distance(w, i) == 2) {
        hits.push_back(i);
        ++census.h_by_shift[i];
      }
    }
    if (hits.empty()) return;
    ++census.h;
    ++census.h_new_by_shift[hits.front()];
    if (detail::lyndon_raw(w)) ++census.lyndon_in_h;

    std::set<std::vector<Symbol>> conjugates;
    for (std::size_t i : hits) {
      std::vector<Symbol> rot(w.begin() + static_cast<std::ptrdiff_t>(i),
                              w.end());
      rot.insert(rot.end(), w.begin(),
                 w.begin() + static_cast<std::ptrdiff_t>(i));
      conjugates.insert(std::move(rot));
    }
    if (conjugates.size() == 1) ++census.h_exactly_one;
  });
  return census;
}

// Constructive enumeration of H(n,i): realizes every block
// characterization (j1, j2, a, b) over g = gcd(n,i).
inline std::set<Word> enumerate_h_shift(Symbol k, std::size_t n,
                                        std::size_t i,
                                        std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (i < 1 || i >= n) {
    throw std::invalid_argument("enumerate_h_shift requires n > i >= 1");
  }
  const std::size_t g = std::gcd(n, i);
  const std::size_t m = n / g;
  detail::require_budget(pow_count(k, g) * m * m, budget, "enumeration");

  std::set<Word> members;
  for_each_word(k, g, [&](const std::vector<Symbol>& a_symbols) {
    const Word a(a_symbols, k);
    std::vector<Symbol> b_symbols = a_symbols;
    for (std::size_t pos = 0; pos < g; ++pos) {
      for (Symbol c = 0; c < k; ++c) {
        if (c == a_symbols[pos]) continue;
        b_symbols[pos] = c;
        const Word b(b_symbols, k);
        for (std::size_t j1 = 0; j1 + 1 < m; ++j1) {
          for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
            members.insert(BlockCharacterization{j1, j2, a, b}.realize(n, i));
          }
        }
      }
      b_symbols[pos] = a_symbols[pos];
    }
  });
  return members;
}

// H(n,i) intersected with H(n,j) for n >= 2i > 2j >= 2: exactly the words
// u^p v u^{n/g-p-1} with |u| = |v| = g = gcd(n,i,j), ham(u,v) = 1 and
// 0 <= p < n/g.
inline std::set<Word> enumerate_intersection(
    Symbol k, std::size_t n, std::size_t i, std::size_t j,
    std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (j < 1 || i <= j || n < 2 * i) {
    throw std::invalid_argument(
        "enumerate_intersection requires n >= 2i > 2j >= 2");
  }
  const std::size_t g = std::gcd(n, std::gcd(i, j));
  const std::size_t m = n / g;
  detail::require_budget(pow_count(k, g) * m * g * (k - 1), budget,
                         "enumeration");

  std::set<Word> members;
  for_each_word(k, g, [&](const std::vector<Symbol>& u_symbols) {
    const Word u(u_symbols, k);
    std::vector<Symbol> v_symbols = u_symbols;
    for (std::size_t pos = 0; pos < g; ++pos) {
      for (Symbol c = 0; c < k; ++c) {
        if (c == u_symbols[pos]) continue;
        v_symbols[pos] = c;
        const Word v(v_symbols, k);
        for (std::size_t p = 0; p < m; ++p) {
          members.insert(OneErrorPowerForm{u, v, p}.realize(n));
        }
      }
      v_symbols[pos] = u_symbols[pos];
    }
  });
  return members;
}

// H(n): union of H(n,i) over 1 <= i <= n/2.
inline std::set<Word> enumerate_h(Symbol k, std::size_t n,
                                  std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 2) throw std::invalid_argument("enumerate_h requires n >= 2");
  Count cost = 0;
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    const std::size_t g = std::gcd(n, i);
    cost += pow_count(k, g) * (n / g) * (n / g);
  }
  detail::require_budget(cost, budget, "enumeration");

  std::set<Word> members;
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    members.merge(enumerate_h_shift(k, n, i, budget));
  }
  return members;
}

// H'''(n): empty for odd n; for even n, the members of H(n, n/2) with no
// other shift at distance 2.
inline std::set<Word> enumerate_exactly_one(
    Symbol k, std::size_t n, std::uint64_t budget = default_budget) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 2) throw std::invalid_argument("enumerate_exactly_one requires n >= 2");
  std::set<Word> members;
  if (n % 2 != 0) return members;
  for (const Word& w : enumerate_h_shift(k, n, n / 2, budget)) {
    bool unique_shift = true;
    for (std::size_t j = 1; 2 * j < n; ++j) {
      if (detail::rotated_distance(w.symbols(), j) == 2) {
        unique_shift = false;
        break;
      }
    }
    if (unique_shift) members.insert(w);
  }
  return members;
}

}  // namespace acw
