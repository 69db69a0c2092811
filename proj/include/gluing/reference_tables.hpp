#pragma once

// Published numerator polynomials, stored in the factored form
// scale * z^shift * (c_0 + c_1 z + ...), inner coefficients lowest first.

#include <string>
#include <vector>

#include "gluing/exact_int.hpp"
#include "gluing/families.hpp"
#include "gluing/polynomial.hpp"

namespace gluing::reference {

struct TabulatedPolynomial {
  Family family;
  int g;
  const char* scale;
  int shift;
  std::vector<const char*> inner;

  IntPolynomial expand() const {
    std::vector<ExactInt> coeffs;
    for (const char* c : inner) coeffs.push_back(from_decimal(c));
    return IntPolynomial(std::move(coeffs)).shift_up(static_cast<std::size_t>(shift)) *
           from_decimal(scale);
  }
};

inline const std::vector<TabulatedPolynomial>& tables() {
  static const std::vector<TabulatedPolynomial> all = {
      {Family::P, 1, "1", 2, {"1"}},
      {Family::P, 2, "21", 4, {"1", "1"}},
      {Family::P, 3, "11", 6, {"135", "558", "158"}},
      {Family::P, 4, "143", 8, {"1575", "13689", "18378", "2339"}},
      {Family::P, 5, "88179", 10, {"675", "9660", "28764", "18908", "1354"}},

      {Family::P2, 0, "1", 1, {"1"}},
      {Family::P2, 1, "1", 3, {"21", "20"}},
      {Family::P2, 2, "1", 5, {"1485", "6096", "1696"}},
      {Family::P2, 3, "1", 7, {"225225", "1954116", "2614896", "330560"}},
      {Family::P2, 4, "1", 9,
       {"59520825", "851296320", "2532145536", "1661701632", "118652416"}},
      {Family::P2, 5, "1", 11,
       {"24325703325", "505213089300", "2561320295136", "3850801696512",
        "1495077259776", "68602726400"}},

      {Family::P3, 0, "2", 2, {"3", "4"}},
      {Family::P3, 1, "12", 4, {"45", "207", "68"}},
      {Family::P3, 2, "6", 6, {"15015", "137934", "197646", "27592"}},
      {Family::P3, 3, "8", 8,
       {"3132675", "46335375", "143262162", "98362965", "7468348"}},
      {Family::P3, 4, "90", 10,
       {"117515475", "2494416504", "12962876908", "20036503284",
        "8028110250", "383244280"}},
  };
  return all;
}

}  // namespace gluing::reference
