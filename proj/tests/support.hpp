#ifndef MODULI_TESTS_SUPPORT_HPP
#define MODULI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>

#include "moduli/action.hpp"
#include "moduli/perm.hpp"

namespace moduli::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline GaussianRational random_gaussian() {
  const long den = uniform(1, 9);
  return {mpq_class(uniform(-30, 30), den), mpq_class(uniform(-30, 30), uniform(1, 9))};
}

inline Complex random_complex() {
  std::uniform_real_distribution<double> d(-4.0, 4.0);
  return {d(rng()), d(rng())};
}

template <class F> F random_scalar() {
  if constexpr (std::is_same_v<F, GaussianRational>) {
    return random_gaussian();
  } else {
    return random_complex();
  }
}

// Rejection-sample a point of Omega_n.
template <class F = GaussianRational> OmegaPoint<F> random_point(int n) {
  for (;;) {
    std::vector<F> coords;
    for (int j = 0; j < n - 2; ++j) {
      coords.push_back(random_scalar<F>());
    }
    try {
      return OmegaPoint<F>(n, std::move(coords), Tolerance{1e-3});
    } catch (const DegenerateConfiguration&) {
    }
  }
}

inline Permutation random_permutation(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation::from_images(images);
}

} // namespace moduli::testing

#endif
