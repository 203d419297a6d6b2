#ifndef MODULI_REALLOCUS_HPP
#define MODULI_REALLOCUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "moduli/action.hpp"
#include "moduli/graph.hpp"

namespace moduli {

/// Irreducible piece of the real locus: F(beta), or the imaginary-reflection
/// piece A1 (odd n only, twist with (n+1)/2 transpositions).
struct RealComponentLabel {
  enum class Kind { F, A1 };
  Kind kind = Kind::F;
  int beta = 0;

  static RealComponentLabel f(int beta) { return {Kind::F, beta}; }
  /// Throws std::invalid_argument for even n.
  static RealComponentLabel a1(int n);

  /// "0", "1", ... or "A1".
  std::string to_string() const;
  friend bool operator==(const RealComponentLabel&, const RealComponentLabel&) = default;
};

/// floor((n+3)/2). Throws std::invalid_argument for n < 4.
int symmetry_class_count(int n);

/// Largest beta, floor((n+1)/2).
inline int max_beta(int n) { return (n + 1) / 2; }

/// (m, gamma) with 2m(b1+b2) = (2m-1)(n+1-gamma), m | (n+1-gamma)/2 and
/// n+1-gamma-2*max(b1,b2) >= 0. Throws std::invalid_argument for betas out
/// of range or equal.
std::vector<std::pair<int, int>> intersection_solutions(int n, int b1, int b2);

/// F(b1) meets F(b2).
bool intersects(int n, int b1, int b2);

/// The bare equation 2m(b1+b2) = (2m-1)(n+1-gamma) over m >= 1, gamma in
/// {0,1,2}, without the nonnegativity of the axis counts.
bool bare_equation_solvable(int n, int b1, int b2);

/// Vertices "0".."floor((n+1)/2)" plus "A1" for odd n (joined to all).
ComponentGraph intersection_graph(int n);

int real_component_count(int n);

/// Seeds for real_witness, in order:
///  - beta = 0: all n-2 coordinates (real);
///  - beta = 1: all n-2 coordinates (unit modulus);
///  - beta >= 2 and A1: l_1 (real; > 0 for F, < 0 for A1), then l_{2k} for
///    k = 1..beta-2 (l_{2k+1} = l_1/conj(l_{2k}) is filled in), then the
///    remaining coordinates from index 2beta-2 on (modulus sqrt(l_1)).
/// The result is certified with apply_symmetry. Throws std::invalid_argument
/// for a bad label or seeds breaking the constraints, DegenerateConfiguration
/// on collisions.
template <class F>
OmegaPoint<F> real_witness(int n, const RealComponentLabel& label, const std::vector<F>& seeds, Tolerance tol = {});

/// Deterministic seeds for a label; `attempt` perturbs them.
template <class F> std::vector<F> default_real_seeds(int n, const RealComponentLabel& label, int attempt = 0);

/// real_witness with default seeds, retrying on collisions.
template <class F> OmegaPoint<F> default_real_witness(int n, const RealComponentLabel& label, Tolerance tol = {});

/// For a point of Fix(S) with 2 beta = n+1: 1, 2 or 3 as l_1 lies in
/// (-inf, 0), (0, 1) or (1, inf).
int a_piece(double lambda1);

} // namespace moduli

#endif
