#include <filesystem>
#include <fstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "gluing/families.hpp"
#include "gluing/generating.hpp"
#include "gluing/polynomial.hpp"
#include "gluing/power_series.hpp"
#include "gluing/recurrences.hpp"
#include "gluing/reference_tables.hpp"

using namespace gluing;
using Rational = boost::multiprecision::cpp_rational;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> v) {
  return {v.begin(), v.end()};
}

// [z^n] (1 - 4z)^(-e) = 4^n * e (e + 1) ... (e + n - 1) / n!, in rationals.
ExactInt generalized_binomial(const Rational& e, int n) {
  Rational c = 1;
  for (int i = 0; i < n; ++i) c = c * (e + i) * 4 / (i + 1);
  EXPECT_EQ(denominator(c), 1);
  return numerator(c);
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const IntPolynomial a{1, 2};
  const IntPolynomial b{0, 0, 3};
  EXPECT_EQ((a + b).coeffs(), ints({1, 2, 3}));
  EXPECT_EQ((a * b).coeffs(), ints({0, 0, 3, 6}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).coeffs().empty());
  EXPECT_EQ(b.valuation(), 2);
  EXPECT_EQ(b.shift_down(2).coeffs(), ints({3}));
  EXPECT_THROW(a.shift_down(1), internal_error);
  EXPECT_EQ(a.shift_up(2).coeffs(), ints({0, 0, 1, 2}));
  EXPECT_EQ(one_minus_4z_pow(2).coeffs(), ints({1, -8, 16}));
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(poly_derivative(IntPolynomial::monomial(1, 2)).coeffs(), ints({0, 2}));
  EXPECT_EQ(poly_derivative(IntPolynomial{7}).degree(), -1);
  const IntPolynomial p = IntPolynomial{0, 0, 0, 0, 21, 21};
  EXPECT_EQ(poly_derivative(poly_derivative(p)).coeffs(), ints({0, 0, 252, 420}));
}

TEST(Polynomial, ScaledValueAtQuarter) {
  // 4^2 * (1 + 2/4 + 3/16) = 16 + 8 + 3
  EXPECT_EQ((IntPolynomial{1, 2, 3}).scaled_value_at_quarter(), 27);
  EXPECT_EQ((IntPolynomial{-1, 4}).scaled_value_at_quarter(), 0);
}

TEST(PowerSeries, HalfIntegerExponents) {
  EXPECT_EQ(halfint_coeffs(1, 5), ints({1, 2, 6, 20, 70, 252}));
  EXPECT_EQ(halfint_coeffs(3, 5), ints({1, 6, 30, 140, 630, 2772}));
  EXPECT_EQ(halfint_coeffs(5, 5), ints({1, 10, 70, 420, 2310, 12012}));
  EXPECT_EQ(halfint_coeffs(9, 5), ints({1, 18, 198, 1716, 12870, 87516}));
  EXPECT_EQ(halfint_coeffs(13, 5), ints({1, 26, 390, 4420, 41990, 352716}));
  EXPECT_THROW(halfint_coeffs(4, 3), argument_error);
}

TEST(PowerSeries, AgreesWithRationalBinomials) {
  for (int s = 1; s <= 41; s += 2) {
    const auto c = halfint_coeffs(s, 40);
    for (int n = 0; n <= 40; ++n) {
      EXPECT_EQ(c[n], generalized_binomial(Rational(s, 2), n)) << s << " " << n;
    }
  }
  for (int m = 1; m <= 12; ++m) {
    const auto c = int_pow_coeffs(m, 30);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(c[n], generalized_binomial(m, n));
  }
}

TEST(PowerSeries, IntegerExponents) {
  EXPECT_EQ(int_pow_coeffs(1, 3), ints({1, 4, 16, 64}));
  EXPECT_EQ(int_pow_coeffs(2, 2), ints({1, 8, 48}));
  EXPECT_EQ(int_pow_coeffs(5, 1)[1], 20);
}

TEST(PowerSeries, HandleExtendsItsCache) {
  SeriesHandle h(IntPolynomial{0, 1}, 4);
  EXPECT_EQ(h.coefficient(3), 48);
  EXPECT_EQ(h.coefficients(5).size(), 6u);
  EXPECT_EQ(h.coefficient(1), 1);
}

TEST(Recurrences, HarerZagier) {
  EXPECT_EQ(hz_epsilon(0, 0), 1);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(hz_epsilon(0, n), catalan(n));
  EXPECT_EQ(hz_epsilon(1, 2), 1);
  EXPECT_EQ(hz_epsilon(2, 4), 21);
  EXPECT_EQ(hz_epsilon(3, 6), 1485);
  EXPECT_EQ(hz_epsilon(1, 0), 0);
  EXPECT_EQ(hz_epsilon(-1, 3), 0);
  for (int n = 1; n <= 10; ++n) {
    ExactInt sum = 0;
    for (int g = 0; 2 * g <= n; ++g) sum += hz_epsilon(g, n);
    EXPECT_EQ(sum, double_factorial(2 * n - 1));
  }
}

TEST(Recurrences, TwoAndThreeFaces) {
  EXPECT_EQ(eps2_rec(0, 2), 8);
  EXPECT_EQ(eps2_rec(1, 3), 21);
  EXPECT_EQ(eps2_rec(0, 0), 0);
  EXPECT_EQ(eps3_rec(0, 2), 6);
  EXPECT_EQ(eps3_rec(0, 3), 116);
  EXPECT_EQ(eps3_rec(1, 5), 18684);
  EXPECT_EQ(eps_recurrence(2, 7, 2), 1052128);
  EXPECT_EQ(eps_recurrence(2, 7, 3), 4611384);
  EXPECT_THROW(eps_recurrence(0, 3, 4), argument_error);
}

TEST(Families, FittedP) {
  EXPECT_EQ(fit_P(1).coeffs(), ints({0, 0, 1}));
  EXPECT_EQ(fit_P(2).coeffs(), ints({0, 0, 0, 0, 21, 21}));
  EXPECT_EQ(fit_P(3).coeffs(), ints({0, 0, 0, 0, 0, 0, 1485, 6138, 1738}));
}

TEST(Families, DerivedFamilies) {
  PolynomialStore store;
  EXPECT_EQ(store.P2(0).coeffs(), ints({0, 1}));
  EXPECT_EQ(store.P2(1).coeffs(), ints({0, 0, 0, 21, 20}));
  EXPECT_EQ(store.P2(2).coeffs(), ints({0, 0, 0, 0, 0, 1485, 6096, 1696}));
  EXPECT_EQ(store.P3(0).coeffs(), ints({0, 0, 6, 8}));
  EXPECT_EQ(store.P3(1).coeffs(), ints({0, 0, 0, 0, 540, 2484, 816}));
  EXPECT_THROW(store.P(0), argument_error);
}

TEST(Families, ReferenceTablesMatch) {
  PolynomialStore store;
  for (const auto& t : reference::tables()) {
    EXPECT_EQ(store.get(t.family, t.g), t.expand())
        << family_name(t.family) << "_" << t.g;
  }
}

TEST(Families, BoundsHoldToGenusEight) {
  PolynomialStore store;
  for (Family f : {Family::P, Family::P2, Family::P3}) {
    for (int g = min_genus(f); g <= 8; ++g) {
      const auto p = store.get(f, g);
      EXPECT_LE(p.degree(), degree_bound(f, g));
      EXPECT_GE(p.valuation(), valuation_bound(f, g));
    }
  }
  EXPECT_THROW(check_family(Family::P, 1, IntPolynomial{1}), internal_error);
}

TEST(Families, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "gluing_cache_test";
  std::filesystem::remove_all(dir);
  IntPolynomial first;
  {
    PolynomialStore store(dir);
    first = store.P3(2);
  }
  const auto file = dir / "P3_2.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  std::ifstream in(file);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("family"), "P3");
  EXPECT_EQ(j.at("g"), 2);
  EXPECT_TRUE(j.at("coeffs").at(0).is_string());
  PolynomialStore again(dir);
  EXPECT_EQ(again.P3(2), first);
  EXPECT_THROW(PolynomialStore::from_json(j, Family::P3, 3), argument_error);
  std::filesystem::remove_all(dir);
}

TEST(Families, CorruptCacheIsRejected) {
  const auto dir = std::filesystem::temp_directory_path() / "gluing_cache_bad";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "P_1.json") << R"({"family":"P","g":1,"coeffs":["1"]})";
  PolynomialStore store(dir);
  EXPECT_THROW(store.P(1), internal_error);
  std::filesystem::remove_all(dir);
}

TEST(Generating, SeriesCoefficients) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(eps_from_series(0, n, 2), ExactInt(n) * boost::multiprecision::pow(ExactInt(4), n - 1));
  }
  EXPECT_EQ(eps_from_series(0, 3, 3), 116);
  EXPECT_EQ(eps_from_series(1, 4, 3), 540);
  EXPECT_EQ(eps_from_series(1, 3, 2), 21);
  EXPECT_EQ(eps_from_series(0, 1, 3), 0);
  EXPECT_EQ(eps_from_series(0, 4, 1), 14);
  EXPECT_THROW(eps_from_series(0, 2, 4), argument_error);
}

TEST(Generating, ClosedForms) {
  EXPECT_EQ(closed_eps0_k3(2), 6);
  EXPECT_EQ(closed_eps0_k3(1), 0);
  EXPECT_EQ(closed_eps0_k3(0), 0);
  EXPECT_EQ(closed_eps1_k3(5), 18684);
  EXPECT_EQ(closed_eps1_k3(3), 0);
  EXPECT_TRUE(has_closed_form(0, 1));
  EXPECT_FALSE(has_closed_form(1, 1));
  EXPECT_FALSE(has_closed_form(2, 3));
  EXPECT_THROW(eps_closed(0, 3, 2), argument_error);
  for (int n = 0; n <= 60; ++n) {
    EXPECT_EQ(closed_eps0_k3(n), eps_from_series(0, n, 3));
    EXPECT_EQ(closed_eps1_k3(n), eps_from_series(1, n, 3));
  }
}

TEST(Generating, FSeries) {
  const auto f1 = f_series(1, 30);
  EXPECT_EQ(f1[0], 0);
  EXPECT_EQ(f1[1], 0);
  EXPECT_EQ(f1[2], 15);
  EXPECT_EQ(f_series(2, 10)[4], 945);
  EXPECT_NO_THROW(f_series(5, 40));
  EXPECT_THROW(f_series(0, 5), argument_error);
}
