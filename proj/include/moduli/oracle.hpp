#ifndef MODULI_ORACLE_HPP
#define MODULI_ORACLE_HPP

#include <vector>

#include <json.hpp>

#include "moduli/action.hpp"

namespace moduli {

/// A nonnegative solution of the axis-count system
///   n+1-2*b1 = 2*d1 + gamma,  n+1-2*b2 = 2*d2 + gamma,
///   2*b1 = 2m*d2 + (2m-2)*d1, 2*b2 = 2m*d1 + (2m-2)*d2.
struct DeltaSolution {
  int m = 0;
  int gamma = 0;
  int delta1 = 0;
  int delta2 = 0;
  friend bool operator==(const DeltaSolution&, const DeltaSolution&) = default;
};

/// Every solution with m >= 1, gamma in {0,1,2}. Brute force; does not use
/// the closed intersection criterion. Throws std::invalid_argument for
/// betas outside {0..floor((n+1)/2)} or n < 4.
std::vector<DeltaSolution> delta_system_solve(int n, int b1, int b2);

/// A point together with the permutations that fix it and the residual of
/// each check.
template <class F> struct Certified {
  OmegaPoint<F> point;
  std::vector<Permutation> permutations;
  std::vector<double> residuals;
};

/// Common fixed point of two symmetries with b1 and b2 transpositions, built
/// from a dihedral configuration: gamma of {0, inf}, d1 orbits of size 2m on
/// the real axis, d2 on the line at angle pi/2m. Radii are distinct primes
/// shifted by `attempt`. Permutations are the twists of the two symmetries.
/// Throws std::invalid_argument when `sol` does not solve the system for
/// (n, b1, b2), std::logic_error if certification fails.
Certified<Complex> dihedral_witness(int n, int b1, int b2, const DeltaSolution& sol, int attempt = 0,
                                    Tolerance tol = {});

/// Order of the composition of the two certificate twists (2m expected).
std::size_t rotation_order(const Certified<Complex>& w);

/// Point fixed by theta_n(s1) and theta_n(s2), s1 with (n-1)/2 transpositions
/// and two fixed symbols, s2 fixed-point free, built exactly from the Klein
/// group {z, 1/z, -z, -1/z}. Permutations are (s1, s2). Needs odd n >= 5.
Certified<GaussianRational> klein_witness(int n);

} // namespace moduli

#endif
