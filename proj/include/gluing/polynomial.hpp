#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gluing/exact_int.hpp"

namespace gluing {

/// Dense polynomial in z with exact integer coefficients; coeffs[i] is the
/// coefficient of z^i. Trailing zeros are trimmed, so the zero polynomial
/// has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }
  IntPolynomial(std::initializer_list<ExactInt> coeffs)
      : coeffs_(coeffs) {
    trim();
  }

  /// c * z^power
  static IntPolynomial monomial(const ExactInt& c, std::size_t power) {
    std::vector<ExactInt> coeffs(power + 1, 0);
    coeffs[power] = c;
    return IntPolynomial(std::move(coeffs));
  }

  const std::vector<ExactInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Largest v with z^v dividing the polynomial; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  ExactInt operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactInt(0);
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const ExactInt& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const ExactInt& c) {
    return a *= c;
  }
  friend IntPolynomial operator*(const ExactInt& c, IntPolynomial a) {
    return a *= c;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(out));
  }

  /// z^-power * p; the low coefficients must vanish.
  IntPolynomial shift_down(std::size_t power = 1) const {
    for (std::size_t i = 0; i < std::min(power, coeffs_.size()); ++i) {
      if (coeffs_[i] != 0) {
        throw internal_error("IntPolynomial::shift_down: z^" +
                             std::to_string(power) + " does not divide " +
                             to_string());
      }
    }
    if (coeffs_.size() <= power) return {};
    return IntPolynomial(std::vector<ExactInt>(coeffs_.begin() + power,
                                               coeffs_.end()));
  }

  /// z^power * p
  IntPolynomial shift_up(std::size_t power = 1) const {
    if (is_zero()) return {};
    std::vector<ExactInt> out(power, 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(out));
  }

  /// Exact value of 4^deg * p(1/4); it has the sign of p(1/4) and vanishes
  /// iff p(1/4) does.
  ExactInt scaled_value_at_quarter() const {
    // sum a_i 4^(deg - i), Horner from the constant term up.
    ExactInt acc = 0;
    for (const auto& a : coeffs_) acc = acc * 4 + a;
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const ExactInt& c = coeffs_[i];
      if (c == 0) continue;
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      ExactInt mag = c < 0 ? ExactInt(-c) : c;
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << (mag != 1 ? "*" : "") << "z";
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<ExactInt> coeffs_;
};

/// Formal derivative.
inline IntPolynomial poly_derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<ExactInt> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    out[i - 1] = p.coeffs()[i] * static_cast<unsigned long long>(i);
  }
  return IntPolynomial(std::move(out));
}

/// (1 - 4z)^power as a polynomial.
inline IntPolynomial one_minus_4z_pow(std::size_t power) {
  std::vector<ExactInt> out(power + 1);
  ExactInt four_pow = 1;
  for (std::size_t i = 0; i <= power; ++i) {
    out[i] = binomial(static_cast<std::int64_t>(power),
                      static_cast<std::int64_t>(i)) *
             four_pow * ((i % 2) ? -1 : 1);
    four_pow *= 4;
  }
  return IntPolynomial(std::move(out));
}

/// Coefficients 0..order of p(z) * S(z), where `series` holds the leading
/// coefficients of S (at least order + 1 of them).
inline std::vector<ExactInt> truncated_product(const IntPolynomial& p,
                                               std::span<const ExactInt> series,
                                               std::size_t order) {
  if (series.size() < order + 1) {
    throw contract_violation("truncated_product: series prefix too short");
  }
  std::vector<ExactInt> out(order + 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size() && i <= order; ++i) {
    const ExactInt& a = p.coeffs()[i];
    if (a == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      out[i + j] += a * series[j];
    }
  }
  return out;
}

}  // namespace gluing
