#pragma once

// Exact counting formulas over unbounded integers: primitive words and
// powers via Moebius inversion, and the h-family of counts for words with
// a conjugate at Hamming distance exactly 2.
//
// Conventions, for length n over a k-letter alphabet:
//   h_shift(k,n,i)        |{w : ham(w, rotate(w,i)) == 2}|
//   h_overlap(k,n,i)      members of the above that already appear for
//                         some smaller shift j < i
//   h_new(k,n,i)          members whose smallest such shift is i
//   h_total(k,n)          words with some conjugate at distance 2
//   h_exactly_one(k,n)    words with exactly one such conjugate

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acw/word.hpp"

namespace acw {

using Count = boost::multiprecision::cpp_int;

namespace detail {

inline Count div_exact(const Count& value, const Count& divisor) {
  if (value % divisor != 0) {
    throw std::logic_error("count formula produced a non-exact division");
  }
  return value / divisor;
}

}  // namespace detail

inline Count pow_count(Symbol k, std::size_t e) {
  if (e > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("exponent too large");
  }
  return boost::multiprecision::pow(Count(k), static_cast<unsigned>(e));
}

// Moebius function: 0 on a squared prime factor, else (-1)^{#prime factors}.
inline int mobius(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("mobius requires n >= 1");
  }
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Divisors of n in increasing order.
inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// psi_k(n) = sum_{d|n} mu(d) k^{n/d}: the number of length-n primitive words.
inline Count count_primitive(Symbol k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 1) throw std::invalid_argument("count_primitive requires n >= 1");
  Count total = 0;
  for (std::size_t d : divisors(n)) {
    total += mobius(d) * pow_count(k, n / d);
  }
  return total;
}

// p_k(n) = k^n - psi_k(n): the number of length-n powers.
inline Count count_powers(Symbol k, std::size_t n) {
  return pow_count(k, n) - count_primitive(k, n);
}

// h(n,i) = (1/2) k^gcd(n,i) (k-1) n (n/gcd(n,i) - 1), for n > i >= 1.
inline Count h_shift(Symbol k, std::size_t n, std::size_t i) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (i < 1 || i >= n) {
    throw std::invalid_argument("h_shift requires n > i >= 1");
  }
  const std::size_t g = std::gcd(n, i);
  return detail::div_exact(
      pow_count(k, g) * (Count(k) - 1) * n * (n / g - 1), 2);
}

// Pairs (x,y) with |x| = m, |y| = n and ham(xy,yx) == 2: h(n+m, m).
inline Count h_pairs(Symbol k, std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("h_pairs requires m, n >= 1");
  }
  return h_shift(k, n + m, m);
}

// h'(n,i): members of H(n,i) also in H(n,j) for some j < i. The closed
// form is stated for n >= 2i only.
inline Count h_overlap(Symbol k, std::size_t n, std::size_t i) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (i < 1 || n < 2 * i) {
    throw std::invalid_argument("h_overlap requires n >= 2i >= 2");
  }
  if (n % i == 0) {
    return Count(n) * (Count(k) - 1) * count_powers(k, i);
  }
  return Count(n) * (Count(k) - 1) * pow_count(k, std::gcd(n, i));
}

// h''(n,i) = h(n,i) - h'(n,i): members of H(n,i) whose smallest shift is i.
inline Count h_new(Symbol k, std::size_t n, std::size_t i) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (i < 1 || 2 * i > n) {
    throw std::invalid_argument("h_new requires 1 <= i <= n/2");
  }
  const std::size_t g = std::gcd(n, i);
  if (n % i == 0) {
    return detail::div_exact(
        Count(n) * (Count(k) - 1) *
            (pow_count(k, g) * (n / g - 1) - 2 * count_powers(k, i)),
        2);
  }
  return detail::div_exact(
      pow_count(k, g) * (Count(k) - 1) * n * (n / g - 3), 2);
}

// h(n) = sum_{i=1}^{floor(n/2)} h''(n,i).
inline Count h_total(Symbol k, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("h requires n >= 2");
  }
  Count total = 0;
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    total += h_new(k, n, i);
  }
  return total;
}

// h'''(n): words with exactly one conjugate at distance 2. Zero for odd n;
// for even n it equals h''(n, n/2) = (1/2) n (k-1) (k^{n/2} - 2 p_k(n/2)).
inline Count h_exactly_one(Symbol k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 1) throw std::invalid_argument("h_exactly_one requires n >= 1");
  if (n % 2 != 0) return 0;
  const std::size_t m = n / 2;
  return detail::div_exact(
      Count(n) * (Count(k) - 1) * (pow_count(k, m) - 2 * count_powers(k, m)),
      2);
}

// Lyndon words in H(n): exactly h(n)/n, and the division is exact.
inline Count count_lyndon_in_h(Symbol k, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("count_lyndon_in_h requires n >= 2");
  }
  return detail::div_exact(h_total(k, n), Count(n));
}

// h(n) for prime n. For odd primes this is the degree-3 polynomial
// (1/4) k (k-1) n (n^2 - 4n + 7); its derivation needs floor(n/2) ==
// (n-1)/2, so n = 2 is handled by the single surviving term
// h''(2,1) = k(k-1).
inline Count h_prime_closed_form(Symbol k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (!is_prime(n)) {
    throw std::invalid_argument("h_prime_closed_form requires prime n");
  }
  if (n == 2) {
    return Count(k) * (Count(k) - 1);
  }
  const Count poly = Count(n) * n - 4 * Count(n) + 7;
  return detail::div_exact(Count(k) * (Count(k) - 1) * n * poly, 4);
}

// Lower bound for even lengths: h(2n) >= (1/2) n k^n. Rounds up when
// n k^n is odd, which never weakens the inequality.
inline Count even_lower_bound(Symbol k, std::size_t n) {
  if (k < 2) throw std::invalid_argument("even_lower_bound requires k >= 2");
  if (n < 2) throw std::invalid_argument("even_lower_bound requires n > 1");
  const Count t = Count(n) * pow_count(k, n);
  return (t + 1) / 2;
}

}  // namespace acw
