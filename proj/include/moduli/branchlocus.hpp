#ifndef MODULI_BRANCHLOCUS_HPP
#define MODULI_BRANCHLOCUS_HPP

#include <string>
#include <vector>

#include "moduli/graph.hpp"
#include "moduli/perm.hpp"

namespace moduli {

/// A branch-locus stratum B_{m,r}: the image in moduli space of Fix(T)
/// for T in the class (m, r, case).
struct Stratum {
  FixedClass cls;

  /// "B_{m,r}".
  std::string label() const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

/// Every (m, r, case) with m >= 2 and (r+1)m = n + 1 - fixed symbols,
/// ordered by m, then r. Throws std::invalid_argument for n < 4.
std::vector<Stratum> enumerate_strata(int n);

/// Stabilizer realizability conditions for the groups that can occur as
/// point stabilizers: n+1 written with the listed orbit sizes.
bool cyclic_realizable(int n, int m);
bool dihedral_realizable(int n, int m);
bool a4_realizable(int n);
bool s4_realizable(int n);
bool a5_realizable(int n);

/// Label used for the merged involution cluster.
inline constexpr const char* kInvolutionCluster = "B_2";

/// Stratum-intersection graph:
///  - involution strata form the B_2 cluster (one vertex for even n; two
///    vertices joined by the Klein-four edge for odd n),
///  - every even-order stratum meets the involution stratum of T^{m/2},
///  - B_{m,r} meets B_{(r+1)m,0} for odd m,
///  - B_{(r+1)m,0} meets B_2 for odd m in cases A and C (dihedral extension),
///  - for odd n divisible by 3, B_{3,(n-3)/3} meets B_2 (A_4 extension).
/// Throws std::invalid_argument for n < 4.
ComponentGraph stratum_graph(int n);

/// 1 if n is even or divisible by 3, else 2. Throws std::logic_error if
/// the stratum graph disagrees.
int branch_component_count(int n);

/// Closed form only, without the graph cross-check.
int branch_component_closed_form(int n);

/// The two involution classes for odd n: (2, (n-3)/2, C) and (2, (n-1)/2, A);
/// the single class (2, (n-2)/2, B) for even n.
std::vector<FixedClass> involution_classes(int n);

} // namespace moduli

#endif
