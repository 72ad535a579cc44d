#pragma once

// Core word operations: Hamming distance, rotation, primitivity, Lyndon
// order, commutation, and the per-shift distance profile.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acw {

using Symbol = std::uint32_t;

// A finite word over the integer alphabet {0, ..., alphabet_size-1}.
// Immutable after construction; lexicographic order is integer order on
// the symbol sequence.
class Word {
 public:
  Word(std::vector<Symbol> symbols, Symbol alphabet_size)
      : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) {
      throw std::invalid_argument("alphabet size must be >= 1");
    }
    for (Symbol s : symbols_) {
      if (s >= alphabet_size_) {
        throw std::invalid_argument("symbol out of alphabet range");
      }
    }
  }

  // Parses single-glyph symbols: '0'..'9' for 0..9, 'a'..'z' for 10..35.
  static Word from_digits(std::string_view text, Symbol alphabet_size) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        symbols.push_back(static_cast<Symbol>(c - '0'));
      } else if (c >= 'a' && c <= 'z') {
        symbols.push_back(static_cast<Symbol>(c - 'a') + 10);
      } else {
        throw std::invalid_argument("unrecognized symbol glyph");
      }
    }
    return Word(std::move(symbols), alphabet_size);
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol alphabet_size() const { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
  Symbol alphabet_size_;
};

// distances[i] = hamming(w, rotate(w, i)); distances[0] is always 0 and
// distances[i] == distances[n-i] for every word.
struct ShiftProfile {
  std::size_t word_length = 0;
  std::vector<std::size_t> distances;
};

namespace detail {

inline void require_same_shape(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("unequal lengths");
  }
  if (u.alphabet_size() != v.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch");
  }
}

}  // namespace detail

// Number of positions where u and v differ.
inline std::size_t hamming(const Word& u, const Word& v) {
  detail::require_same_shape(u, v);
  std::size_t d = 0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    d += u[t] != v[t];
  }
  return d;
}

// Left shift by i: rotate(xy, |x|) == yx. Accepts 0 <= i <= |w|.
inline Word rotate(const Word& w, std::size_t i) {
  if (w.empty()) {
    throw std::invalid_argument("rotation requires a non-empty word");
  }
  if (i > w.size()) {
    throw std::invalid_argument("rotation index out of range");
  }
  std::vector<Symbol> out;
  out.reserve(w.size());
  out.insert(out.end(), w.symbols().begin() + static_cast<std::ptrdiff_t>(i),
             w.symbols().end());
  out.insert(out.end(), w.symbols().begin(),
             w.symbols().begin() + static_cast<std::ptrdiff_t>(i));
  return Word(std::move(out), w.alphabet_size());
}

inline Word concat(const Word& x, const Word& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  std::vector<Symbol> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.symbols().begin(), x.symbols().end());
  out.insert(out.end(), y.symbols().begin(), y.symbols().end());
  return Word(std::move(out), x.alphabet_size());
}

inline ShiftProfile shift_profile(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("shift profile requires a non-empty word");
  }
  const std::size_t n = w.size();
  ShiftProfile profile{n, std::vector<std::size_t>(n, 0)};
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t d = 0;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t s = t + i;
      if (s >= n) s -= n;
      d += w[t] != w[s];
    }
    profile.distances[i] = d;
  }
  return profile;
}

// True iff w is not z^t for any shorter z and t >= 2.
inline bool is_primitive(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("primitivity requires a non-empty word");
  }
  const std::size_t n = w.size();
  for (std::size_t d = 1; d * 2 <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t t = d; t < n; ++t) {
      if (w[t] != w[t - d]) {
        repeats = false;
        break;
      }
    }
    if (repeats) return false;
  }
  return true;
}

// True iff w is strictly smaller than each of its non-trivial rotations.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("Lyndon test requires a non-empty word");
  }
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t s = t + i;
      if (s >= n) s -= n;
      if (w[t] < w[s]) break;
      if (w[t] > w[s]) return false;
      if (t + 1 == n) return false;  // equal to a non-trivial rotation
    }
  }
  return true;
}

// True iff xy == yx.
inline bool commutes(const Word& x, const Word& y) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("commutation requires non-empty words");
  }
  if (x.alphabet_size() != y.alphabet_size()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  const std::size_t m = x.size();
  const std::size_t n = m + y.size();
  auto xy = [&](std::size_t t) { return t < m ? x[t] : y[t - m]; };
  auto yx = [&](std::size_t t) {
    return t < y.size() ? y[t] : x[t - y.size()];
  };
  for (std::size_t t = 0; t < n; ++t) {
    if (xy(t) != yx(t)) return false;
  }
  return true;
}

// Renders symbols as one glyph each while alphabet_size <= glyph_limit
// (and <= 36), otherwise as comma-separated integers.
inline std::string to_string(const Word& w, Symbol glyph_limit = 10) {
  std::string out;
  if (w.alphabet_size() <= glyph_limit && w.alphabet_size() <= 36) {
    out.reserve(w.size());
    for (Symbol s : w.symbols()) {
      out.push_back(s < 10 ? static_cast<char>('0' + s)
                           : static_cast<char>('a' + (s - 10)));
    }
  } else {
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (t > 0) out.push_back(',');
      out += std::to_string(w[t]);
    }
  }
  return out;
}

// Applies fn to every length-n word over {0..k-1} in lexicographic order,
// passing the symbol buffer by const reference; memory stays O(n).
template <typename Fn>
void for_each_word(Symbol k, std::size_t n, Fn&& fn) {
  if (k == 0) {
    throw std::invalid_argument("alphabet size must be >= 1");
  }
  std::vector<Symbol> w(n, 0);
  while (true) {
    fn(static_cast<const std::vector<Symbol>&>(w));
    std::size_t pos = n;
    while (pos > 0 && ++w[pos - 1] == k) {
      w[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
}

}  // namespace acw
