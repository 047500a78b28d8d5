#pragma once

#include <span>
#include <vector>

namespace polyeq::testing {

// Elementary symmetric functions by expanding prod (x - x_i) term by term; independent of
// power sums. Returns e_1..e_K.
inline std::vector<double> elementary_by_expansion(std::span<const double> roots) {
  // coeffs[j] = coefficient of x^j
  std::vector<double> coeffs{1.0};
  for (double r : roots) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= r * coeffs[j];
    }
    coeffs = std::move(next);
  }
  const std::size_t k_max = roots.size();
  std::vector<double> e(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    e[k - 1] = sign * coeffs[k_max - k];
  }
  return e;
}

}  // namespace polyeq::testing
