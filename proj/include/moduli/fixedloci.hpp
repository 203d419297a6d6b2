#ifndef MODULI_FIXEDLOCI_HPP
#define MODULI_FIXEDLOCI_HPP

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moduli/action.hpp"
#include "moduli/number_theory.hpp"
#include "moduli/perm.hpp"

namespace moduli {

/// Component structure of Fix(T) for T = theta_n(s), s in a fixed-point class.
struct FixedLocusReport {
  FixedClass cls;
  int n = 0;
  /// Complex dimension of each component (= r).
  int dimension = 0;
  int component_count = 0;
  /// alpha in {1, ..., floor((m-1)/2)} coprime to m; empty for m = 2.
  std::vector<int> admissible_angles;
};

/// Throws std::invalid_argument when the class is inconsistent with n or n < 4.
FixedLocusReport fixed_locus_report(const FixedClass& cls, int n);

/// Admissible rotation indices alpha for order m.
std::vector<int> admissible_angles(int m);

/// Which fixed point of the cycle map occupies the fixed symbols.
/// For m >= 3 the two fixed points are complex conjugate and `primary` is
/// the one in the upper half-plane; for m = 2 `primary` is the principal
/// square root of l_1. In case C, primary puts the primary point at p_n
/// and the other at p_{n+1}; secondary swaps them.
enum class FixedPointChoice { primary, secondary };

/// 4 cos^2(pi alpha / m): the value of l_{m-3} that makes x -> c/(c - x)
/// an elliptic map of order m rotating by 2 pi alpha / m. The exact
/// backend supports m in {3, 4, 6} (c = 1, 2, 3) and throws InexactError
/// otherwise.
template <class F> F anchor_value(int m, int alpha) {
  if (m < 3 || alpha < 1 || alpha >= m || std::gcd(m, alpha) != 1) {
    throw std::invalid_argument("anchor needs m >= 3 and alpha coprime to m in [1, m)");
  }
  if constexpr (std::is_same_v<F, GaussianRational>) {
    // cos(pi alpha/m)^2 is rational only when cos(2 pi alpha/m) is.
    switch (m) {
    case 3: return F(1);
    case 4: return F(2);
    case 6: return F(3);
    default:
      throw InexactError("4cos^2(pi*" + std::to_string(alpha) + "/" + std::to_string(m) + ") is irrational");
    }
  } else {
    const double c = std::cos(std::numbers::pi * alpha / m);
    return F(4.0 * c * c);
  }
}

/// The map x -> c/(c - x) for m >= 3, x -> l1/x for m = 2.
template <class F> Mobius<F> cycle_map(int m, const F& anchor) {
  if (m == 2) {
    return Mobius<F>(F(0), anchor, F(1), F(0));
  }
  return Mobius<F>(F(0), anchor, F(-1), anchor);
}

/// Fixed points of the cycle map ordered (primary, secondary).
template <class F> std::pair<F, F> ordered_fixed_points(int m, const Mobius<F>& map, const F& anchor, Tolerance tol) {
  if (m == 2) {
    const F root = sqrt(anchor);
    return {root, -root};
  }
  const auto fps = fixed_points(map, tol);
  if (fps.size() != 2 || fps[0].is_infinite() || fps[1].is_infinite()) {
    throw std::logic_error("elliptic cycle map must have two finite fixed points");
  }
  if (imag_part(fps[0].value()) > 0) {
    return {fps[0].value(), fps[1].value()};
  }
  return {fps[1].value(), fps[0].value()};
}

/// Number of free parameters of the witness chart (= r).
inline int free_parameter_count(const FixedClass& cls) { return cls.r; }

/// A point of Fix(theta_n(s)) for s = canonical_rep(cls, n).
///
/// Chart: for m >= 3 the first cycle is the orbit of infinity under
/// x -> c/(c - x) with c = anchor_value(m, alpha), and each further cycle is
/// the orbit of a free seed placed at the cycle's last symbol, so
/// free = (l_{2m-3}, l_{3m-3}, ..., l_{(r+1)m-3}). For m = 2 the cycle map
/// is x -> l1/x, free[0] = l_1 and free[j] seeds cycle j+1 (free =
/// (l_1, l_3, l_5, ...)); alpha is ignored. Fixed symbols receive fixed
/// points of the cycle map according to choice.
///
/// The result is certified with apply_theta before it is returned.
/// Throws std::invalid_argument for a bad class, alpha outside the
/// admissible set (m >= 3) or a wrong number of free parameters, and
/// DegenerateConfiguration when the seeds make two marked points collide.
template <class F>
OmegaPoint<F> witness(const FixedClass& cls, int n, int alpha, const std::vector<F>& free,
                      FixedPointChoice choice = FixedPointChoice::primary, Tolerance tol = {}) {
  const Permutation rep = canonical_rep(cls, n);
  if (static_cast<int>(free.size()) != free_parameter_count(cls)) {
    throw std::invalid_argument("class needs " + std::to_string(free_parameter_count(cls)) + " free parameters, got " +
                                std::to_string(free.size()));
  }
  const int m = cls.m;
  F anchor = m == 2 ? free.at(0) : F(0);
  if (m >= 3) {
    const auto allowed = admissible_angles(m);
    if (std::find(allowed.begin(), allowed.end(), alpha) == allowed.end()) {
      throw std::invalid_argument("alpha = " + std::to_string(alpha) + " is not admissible for m = " +
                                  std::to_string(m));
    }
    anchor = anchor_value<F>(m, alpha);
  }
  if (m == 2 && is_zero(anchor, tol)) {
    throw DegenerateConfiguration("l_1 must be nonzero");
  }
  const auto map = cycle_map(m, anchor);

  std::vector<std::optional<Extended<F>>> p(static_cast<std::size_t>(n + 1));
  auto fill_orbit = [&](int cycle, const Extended<F>& seed) {
    // Seed sits at the last symbol of the cycle; symbol k+1 of the cycle gets M^{k+1}(seed).
    Extended<F> x = seed;
    for (int k = 0; k < m; ++k) {
      x = map(x, tol);
      p[static_cast<std::size_t>(cycle * m + k)] = x;
    }
  };
  if (m == 2) {
    p[0] = Extended<F>::infinity();
    p[1] = Extended<F>(F(0));
  } else {
    // M(c) = inf, so seeding at c puts (inf, 0, 1, ...) on symbols 1..m.
    fill_orbit(0, Extended<F>(anchor));
  }
  for (int j = 1; j <= cls.r; ++j) {
    fill_orbit(j, Extended<F>(free[static_cast<std::size_t>(j - 1)]));
  }
  const int fixed = fixed_symbols(cls.fixed_case);
  if (fixed > 0) {
    auto [first, second] = ordered_fixed_points(m, map, anchor, tol);
    if (choice == FixedPointChoice::secondary) {
      std::swap(first, second);
    }
    if (fixed == 1) {
      p[static_cast<std::size_t>(n)] = Extended<F>(first);
    } else {
      p[static_cast<std::size_t>(n - 1)] = Extended<F>(first);
      p[static_cast<std::size_t>(n)] = Extended<F>(second);
    }
  }
  if (p[0]->is_infinite() == false || p[1]->is_infinite() || !near(p[1]->value(), F(0), tol) ||
      p[2]->is_infinite() || !near(p[2]->value(), F(1), tol)) {
    throw std::logic_error("witness chart does not start with (inf, 0, 1)");
  }
  std::vector<F> coords;
  for (int k = 3; k <= n; ++k) {
    const auto& point = p[static_cast<std::size_t>(k)];
    if (!point || point->is_infinite()) {
      throw DegenerateConfiguration("seed orbit reaches infinity");
    }
    coords.push_back(point->value());
  }
  OmegaPoint<F> lambda(n, std::move(coords), tol);
  if (!near(apply_theta(rep, lambda, Tolerance{0.0}), lambda, tol)) {
    throw std::logic_error("witness failed certification for " + rep.to_string());
  }
  return lambda;
}

/// Discrete invariants separating the components of Fix(T):
/// alpha (0 for m = 2) and which fixed point sits on the fixed symbols
/// (0 = primary; always 0 for case A and for m = 2).
struct ComponentLabel {
  int alpha = 0;
  int choice = 0;
  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

/// Label of a point of Fix(theta_n(canonical_rep(cls, n))). Throws
/// std::invalid_argument if the point is not fixed.
ComponentLabel component_label(const FixedClass& cls, int n, const OmegaPoint<Complex>& point, Tolerance tol = {});

/// Deterministic free parameters for a class; `attempt` perturbs them so
/// callers can retry after a DegenerateConfiguration.
template <class F> std::vector<F> default_free_parameters(const FixedClass& cls, int attempt = 0) {
  std::vector<F> out;
  for (int j = 0; j < free_parameter_count(cls); ++j) {
    const long k = j + 3 * attempt;
    if constexpr (std::is_same_v<F, GaussianRational>) {
      out.emplace_back(mpq_class(k + 2, 1) + mpq_class(1, 7 + k), mpq_class(k + 1, 3 + 2 * k));
      if (cls.m == 2 && j == 0) {
        // l_1 a square so its root (a fixed point of l_1/x) stays in Q(i).
        out.back() *= out.back();
      }
    } else {
      out.emplace_back(2.0 + 1.37 * static_cast<double>(k) + 0.11, 0.29 + 0.53 * static_cast<double>(k));
    }
  }
  return out;
}

/// witness() with default free parameters, retrying on collisions.
template <class F>
OmegaPoint<F> default_witness(const FixedClass& cls, int n, int alpha,
                              FixedPointChoice choice = FixedPointChoice::primary, Tolerance tol = {}) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    try {
      return witness<F>(cls, n, alpha, default_free_parameters<F>(cls, attempt), choice, tol);
    } catch (const DegenerateConfiguration&) {
    }
  }
  throw DegenerateConfiguration("no collision-free default witness found");
}

/// Every component label of Fix(T) with a floating witness in it.
std::vector<std::pair<ComponentLabel, OmegaPoint<Complex>>> component_witnesses(const FixedClass& cls, int n,
                                                                               Tolerance tol = {});

struct BranchStratumImage {
  /// Number of connected components of pi_n(Fix(T)); always 1.
  int count = 1;
  /// For n <= kStabilizerMaxN: whether the normalizer of <s> in S_{n+1}
  /// acts transitively on the components of Fix(T) (checked by brute
  /// force). Unset for larger n.
  std::optional<bool> normalizer_transitive;
};

/// Throws std::invalid_argument for an invalid class.
BranchStratumImage branch_stratum_image_count(const FixedClass& cls, int n, Tolerance tol = {});

/// All s in S_{n+1} with s <t> s^-1 = <t>.
std::vector<Permutation> normalizer_of_cyclic(const Permutation& t);

} // namespace moduli

#endif
