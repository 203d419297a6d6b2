#ifndef MODULI_PERM_HPP
#define MODULI_PERM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moduli {

/// A permutation of the symbols {1, ..., degree}.
///
/// Products follow the left-multiplication convention: (s * t)(i) = s(t(i)),
/// i.e. t acts first. With this convention theta(s * t) = theta(s) o theta(t)
/// for the action on marked configurations (see action.hpp).
///
/// Symbols are 1-based at the interface and 0-based in storage.
class Permutation {
public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 0);

  /// From the image list (1-based): images[i-1] = s(i). Throws
  /// std::invalid_argument unless images is a bijection of {1..degree}.
  static Permutation from_images(const std::vector<int>& images);

  /// From cycles with 1-based symbols; omitted symbols are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  /// Parses "(1,2)(3,4,5)"; "()" or "" is the identity. Symbols larger than
  /// degree are rejected.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }

  /// Image of the 1-based symbol i.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }

  /// 1-based image list.
  std::vector<int> images() const;

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long k) const;
  std::size_t order() const;

  /// Disjoint cycles (1-based), including fixed points as 1-cycles, each
  /// cycle starting at its smallest symbol, cycles ordered by first symbol.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation with fixed symbols omitted; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// 0-based images, for tight loops.
  const std::vector<int>& raw() const { return images_; }

private:
  std::vector<int> images_;
};

/// Cycle lengths in non-increasing order; sums to degree.
std::vector<int> cycle_type(const Permutation& p);

/// Number of 2-cycles of an involution (beta in the real-locus notation).
/// Throws std::invalid_argument if p * p is not the identity.
int transposition_count(const Permutation& p);

enum class FixedCase { A, B, C };

/// Number of fixed symbols of the normal form: A -> 0, B -> 1, C -> 2.
inline int fixed_symbols(FixedCase c) { return static_cast<int>(c); }
char to_char(FixedCase c);
FixedCase parse_case(std::string_view text);

/// Conjugacy class of a permutation whose induced automorphism has fixed
/// points: (r+1) cycles of length m and 0, 1 or 2 fixed symbols.
struct FixedClass {
  int m = 0;
  int r = 0;
  FixedCase fixed_case = FixedCase::A;

  friend bool operator==(const FixedClass&, const FixedClass&) = default;
  friend auto operator<=>(const FixedClass&, const FixedClass&) = default;
};

/// n for which (m, r, case) is a consistent class: (r+1)m - 1 + fixed symbols.
inline int ambient_n(const FixedClass& c) { return (c.r + 1) * c.m - 1 + fixed_symbols(c.fixed_case); }

/// Returns the class if the automorphism theta(p) of Omega_n (n = degree-1)
/// has fixed points, std::nullopt otherwise. Throws std::invalid_argument
/// for the identity.
std::optional<FixedClass> classify_fixed_point_class(const Permutation& p);

/// The normal form (1..m)(m+1..2m)...(rm+1..(r+1)m) with the trailing
/// fixed symbols of the case. Throws std::invalid_argument when
/// (m, r, case, n) is inconsistent.
Permutation canonical_rep(const FixedClass& c, int n);

/// Calls visit on every permutation of the given degree in lexicographic
/// image order. Stops early when visit returns false.
void for_each_permutation(std::size_t degree, const std::function<bool(const Permutation&)>& visit);

} // namespace moduli

#endif
