#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gluing/exact_int.hpp"
#include "gluing/families.hpp"
#include "gluing/polynomial.hpp"
#include "gluing/power_series.hpp"
#include "gluing/recurrences.hpp"

namespace gluing {

/// Coefficient of z^n in C_g^[k](z), k in {1, 2, 3}, read off the
/// numerator / (1 - 4z)^e representation. Genus-0 one-polygon counts are the
/// Catalan numbers.
inline ExactInt eps_from_series(int g, int n, int k,
                                PolynomialStore& store = shared_store()) {
  if (k < 1 || k > 3) {
    throw argument_error("eps_from_series: only k = 1, 2, 3 are supported");
  }
  if (g < 0 || n < 0) return 0;
  if (k == 1 && g == 0) return catalan(n);
  const Family f = k == 1 ? Family::P : (k == 2 ? Family::P2 : Family::P3);
  SeriesHandle series(store.get(f, g), twice_pole_order(f, g));
  return series.coefficient(static_cast<std::size_t>(n));
}

/// eps_0(n, 3) = (8n + 5)(n - 1) n (n + 1) C(2n + 1, n) / 210.
inline ExactInt closed_eps0_k3(std::int64_t n) {
  if (n < 0) return 0;
  const ExactInt num = ExactInt(8 * n + 5) * (n - 1) * n * (n + 1) *
                       binomial(2 * n + 1, n);
  return exact_div(num, 210, "closed_eps0_k3");
}

/// eps_1(n, 3) = (808n^2 + 99n - 454) C(2n + 1, n) C(n + 1, 5) / 3003.
inline ExactInt closed_eps1_k3(std::int64_t n) {
  if (n < 0) return 0;
  const ExactInt num = (ExactInt(808) * n * n + 99 * n - 454) *
                       binomial(2 * n + 1, n) * binomial(n + 1, 5);
  return exact_div(num, 3003, "closed_eps1_k3");
}

/// Closed form where one exists: (k=1, g=0) Catalan, (k=3, g in {0,1}).
inline bool has_closed_form(int g, int k) {
  return (k == 1 && g == 0) || (k == 3 && (g == 0 || g == 1));
}

inline ExactInt eps_closed(int g, std::int64_t n, int k) {
  if (k == 1 && g == 0) return catalan(n);
  if (k == 3 && g == 0) return closed_eps0_k3(n);
  if (k == 3 && g == 1) return closed_eps1_k3(n);
  throw argument_error("no closed form for g=" + std::to_string(g) +
                       ", k=" + std::to_string(k));
}

/// F_g(z) = sum (n+1)(2n+1) eps_g(n) z^n, coefficients 0..max_n.
///
/// Computed twice: by weighting the Harer-Zagier numbers, and from P_g via
/// C + 5zC' + 2z^2C'' with C = P_g / (1 - 4z)^a, a = 3g - 1/2, i.e.
///   2z^2 P''                                     / (1 - 4z)^a
/// + (5 + (48g - 28) z) z P'                      / (1 - 4z)^(a+1)
/// + (1 + (60g - 18) z + 48(2g - 1)(3g - 1) z^2) P / (1 - 4z)^(a+2).
/// Throws internal_error if the two disagree.
inline std::vector<ExactInt> f_series(int g, std::size_t max_n,
                                      PolynomialStore& store = shared_store()) {
  if (g < 1) {
    throw argument_error("f_series: closed-form route needs g >= 1");
  }
  std::vector<ExactInt> direct(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    direct[n] = ExactInt((nn + 1) * (2 * nn + 1)) * hz_epsilon(g, static_cast<int>(n));
  }

  const IntPolynomial p = store.P(g);
  const IntPolynomial d1 = poly_derivative(p);
  const IntPolynomial d2 = poly_derivative(d1);
  const std::int64_t gg = g;
  const std::int64_t twice_a = 6 * gg - 1;

  const IntPolynomial t1 = IntPolynomial::monomial(2, 2) * d2;
  const IntPolynomial t2 = IntPolynomial{5, 48 * gg - 28}.shift_up() * d1;
  const IntPolynomial t3 =
      IntPolynomial{1, 60 * gg - 18, 48 * (2 * gg - 1) * (3 * gg - 1)} * p;

  std::vector<ExactInt> closed(max_n + 1, 0);
  const IntPolynomial* terms[] = {&t1, &t2, &t3};
  for (int i = 0; i < 3; ++i) {
    const auto part = truncated_product(*terms[i],
                                        pole_coeffs(twice_a + 2 * i, max_n), max_n);
    for (std::size_t n = 0; n <= max_n; ++n) closed[n] += part[n];
  }

  for (std::size_t n = 0; n <= max_n; ++n) {
    if (direct[n] != closed[n]) {
      throw internal_error("f_series: routes disagree at g=" + std::to_string(g) +
                           ", n=" + std::to_string(n) + ": " + direct[n].str() +
                           " vs " + closed[n].str());
    }
  }
  return direct;
}

}  // namespace gluing
