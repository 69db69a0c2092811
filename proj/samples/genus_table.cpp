// Prints eps_g(n, k) for k = 1, 2, 3 from the generating functions and, for
// small n, from brute force next to it.

#include <cstdio>
#include <iostream>

#include "gluing/gluing.hpp"

int main() {
  using namespace gluing;
  for (int k = 1; k <= 3; ++k) {
    std::cout << "k = " << k << '\n';
    for (int n = 1; n <= 6; ++n) {
      const GenusTable brute = count_total(n, k);
      std::cout << "  n = " << n << ':';
      for (int g = 0; n >= k + 2 * g - 1; ++g) {
        const ExactInt series = eps_from_series(g, n, k);
        std::cout << "  g" << g << '=' << series;
        if (brute[g] != series) std::cout << " (brute force: " << brute[g] << ")";
      }
      std::cout << '\n';
    }
  }
}
