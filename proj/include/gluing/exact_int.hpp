#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gluing {

/// Arbitrary-precision signed integer used for every count and coefficient.
using ExactInt = boost::multiprecision::cpp_int;

/// A caller broke a documented precondition.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computation reached a state that valid inputs can never produce
/// (a non-exact division, a vanishing check that failed, a corrupted map).
class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request is well-formed but refused (bad argument, resource cap).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Divides `num` by `den`, throwing internal_error if the division leaves a
/// remainder. `what` names the computation for the error message.
inline ExactInt exact_div(const ExactInt& num, const ExactInt& den,
                          std::string_view what) {
  if (den == 0) {
    throw internal_error(std::string(what) + ": division by zero");
  }
  ExactInt quot;
  ExactInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    throw internal_error(std::string(what) + ": non-exact division " +
                         num.str() + " / " + den.str());
  }
  return quot;
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
inline ExactInt double_factorial(std::int64_t m) {
  if (m < -1) {
    throw contract_violation("double_factorial: argument below -1");
  }
  ExactInt result = 1;
  for (std::int64_t i = m; i > 1; i -= 2) {
    result *= i;
  }
  return result;
}

inline ExactInt catalan(std::int64_t n) {
  if (n < 0) {
    return 0;
  }
  return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

inline std::string to_decimal(const ExactInt& value) { return value.str(); }

inline ExactInt from_decimal(std::string_view text) {
  if (text.empty()) {
    throw argument_error("from_decimal: empty string");
  }
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) {
    throw argument_error("from_decimal: malformed integer");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw argument_error("from_decimal: malformed integer '" +
                           std::string(text) + "'");
    }
  }
  return ExactInt(std::string(text));
}

}  // namespace gluing
