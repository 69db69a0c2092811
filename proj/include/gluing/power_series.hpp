#pragma once

// Power series of the form N(z) / (1 - 4z)^e with integer numerator N and
// e a positive integer or half-integer. The exponent is carried as
// twice_e = 2e, so (1 - 4z)^(-s/2) with s odd never needs a rational or
// floating-point representation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gluing/exact_int.hpp"
#include "gluing/polynomial.hpp"

namespace gluing {

/// Coefficients c_0..c_max_n of (1 - 4z)^(-s/2), s odd:
/// c_n = 2^n (2n + s - 2)!! / ((s - 2)!! n!), via c_n = c_{n-1} 2(2n + s - 2) / n.
inline std::vector<ExactInt> halfint_coeffs(std::int64_t s, std::size_t max_n) {
  if (s < 1 || s % 2 == 0) {
    throw argument_error("halfint_coeffs: s must be odd and positive");
  }
  std::vector<ExactInt> out(max_n + 1);
  out[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    out[n] = exact_div(out[n - 1] * (2 * (2 * nn + s - 2)), nn,
                       "halfint_coeffs");
  }
  return out;
}

/// Coefficients of (1 - 4z)^(-m): C(n + m - 1, m - 1) 4^n.
inline std::vector<ExactInt> int_pow_coeffs(std::int64_t m, std::size_t max_n) {
  if (m < 1) {
    throw argument_error("int_pow_coeffs: m must be positive");
  }
  std::vector<ExactInt> out(max_n + 1);
  ExactInt four_pow = 1;
  for (std::size_t n = 0; n <= max_n; ++n) {
    out[n] = binomial(static_cast<std::int64_t>(n) + m - 1, m - 1) * four_pow;
    four_pow *= 4;
  }
  return out;
}

/// Coefficients of (1 - 4z)^(-twice_e / 2) for any positive twice_e.
inline std::vector<ExactInt> pole_coeffs(std::int64_t twice_e, std::size_t max_n) {
  if (twice_e < 1) {
    throw argument_error("pole_coeffs: exponent must be positive");
  }
  return twice_e % 2 ? halfint_coeffs(twice_e, max_n)
                     : int_pow_coeffs(twice_e / 2, max_n);
}

/// N(z) / (1 - 4z)^(twice_e / 2) with a lazily extended coefficient cache.
/// Not safe for concurrent mutation; copy per thread.
class SeriesHandle {
 public:
  SeriesHandle(IntPolynomial numerator, std::int64_t twice_e)
      : numerator_(std::move(numerator)), twice_e_(twice_e) {
    if (twice_e_ < 1) {
      throw argument_error("SeriesHandle: exponent must be positive");
    }
  }

  const IntPolynomial& numerator() const { return numerator_; }
  std::int64_t twice_exponent() const { return twice_e_; }

  /// Coefficients 0..max_n. Recomputed whenever a longer prefix is needed;
  /// a shorter request is served from the cached prefix.
  const std::vector<ExactInt>& coefficients(std::size_t max_n) {
    if (cache_.size() < max_n + 1) {
      cache_ = truncated_product(numerator_, pole_coeffs(twice_e_, max_n), max_n);
    }
    prefix_.assign(cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(max_n + 1));
    return prefix_;
  }

  ExactInt coefficient(std::size_t n) { return coefficients(n)[n]; }

 private:
  IntPolynomial numerator_;
  std::int64_t twice_e_;
  std::vector<ExactInt> cache_;
  std::vector<ExactInt> prefix_;
};

}  // namespace gluing
