#ifndef MODULI_ACTION_HPP
#define MODULI_ACTION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "moduli/moebius.hpp"
#include "moduli/perm.hpp"

namespace moduli {

/// Raised when a tuple leaves Omega_n: a coordinate hits 0 or 1, or two
/// coordinates collide (within tolerance for the floating backend).
class DegenerateConfiguration : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A point (l_1, ..., l_{n-2}) of Omega_n, i.e. the marked configuration
/// (inf, 0, 1, l_1, ..., l_{n-2}) of n+1 distinct points on the sphere.
template <class F> class OmegaPoint {
public:
  /// Throws DegenerateConfiguration unless the coordinates avoid 0 and 1
  /// and are pairwise distinct; std::invalid_argument when n < 3 or the
  /// coordinate count is not n-2.
  OmegaPoint(int n, std::vector<F> coords, Tolerance tol = {}) : n_(n), coords_(std::move(coords)) {
    if (n < 3) {
      throw std::invalid_argument("Omega_n needs n >= 3");
    }
    if (coords_.size() != static_cast<std::size_t>(n - 2)) {
      throw std::invalid_argument("Omega_" + std::to_string(n) + " points have " + std::to_string(n - 2) +
                                  " coordinates, got " + std::to_string(coords_.size()));
    }
    const F zero(0), one(1);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (near(coords_[i], zero, tol) || near(coords_[i], one, tol)) {
        throw DegenerateConfiguration("coordinate " + std::to_string(i + 1) + " equals 0 or 1");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (near(coords_[i], coords_[j], tol)) {
          throw DegenerateConfiguration("coordinates " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                        " coincide");
        }
      }
    }
  }

  int n() const { return n_; }
  const std::vector<F>& coords() const { return coords_; }
  /// 1-based coordinate l_j.
  const F& operator[](int j) const { return coords_.at(static_cast<std::size_t>(j - 1)); }

  /// The configuration p_1 = inf, p_2 = 0, p_3 = 1, p_{k+3} = l_k (0-based vector).
  std::vector<Extended<F>> configuration() const {
    std::vector<Extended<F>> p;
    p.reserve(coords_.size() + 3);
    p.push_back(Extended<F>::infinity());
    p.emplace_back(F(0));
    p.emplace_back(F(1));
    for (const auto& c : coords_) {
      p.emplace_back(c);
    }
    return p;
  }

  OmegaPoint conj() const {
    std::vector<F> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
      out.push_back(moduli::conj(c));
    }
    return OmegaPoint(n_, std::move(out), Tolerance{0.0});
  }

private:
  int n_;
  std::vector<F> coords_;
};

template <class F> bool near(const OmegaPoint<F>& a, const OmegaPoint<F>& b, Tolerance tol = {}) {
  if (a.n() != b.n()) {
    return false;
  }
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (!near(a.coords()[i], b.coords()[i], tol)) {
      return false;
    }
  }
  return true;
}

/// Largest coordinate difference; 0 for identical exact points.
template <class F> double residual(const OmegaPoint<F>& a, const OmegaPoint<F>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    worst = std::max(worst, residual(a.coords()[i], b.coords()[i]));
  }
  return worst;
}

inline OmegaPoint<Complex> to_floating(const OmegaPoint<GaussianRational>& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coords()) {
    out.push_back(c.to_complex());
  }
  return OmegaPoint<Complex>(p.n(), std::move(out), Tolerance{0.0});
}

/// Builds the normalized point of a configuration of n+1 distinct points:
/// the unique Moebius map sending config[0], config[1], config[2] to
/// inf, 0, 1 is applied to the rest.
template <class F> OmegaPoint<F> normalize_configuration(const std::vector<Extended<F>>& config, Tolerance tol = {}) {
  if (config.size() < 4) {
    throw std::invalid_argument("a configuration needs at least four points");
  }
  const auto m = cross_ratio_normalizer(config[0], config[1], config[2], tol);
  std::vector<F> coords;
  coords.reserve(config.size() - 3);
  for (std::size_t j = 3; j < config.size(); ++j) {
    const auto image = m(config[j], tol);
    if (image.is_infinite()) {
      throw DegenerateConfiguration("configuration point " + std::to_string(j + 1) + " collides with the first");
    }
    coords.push_back(image.value());
  }
  return OmegaPoint<F>(static_cast<int>(config.size()) - 1, std::move(coords), tol);
}

/// The Moebius map M_{s,l}: sends p_{s^-1(1)}, p_{s^-1(2)}, p_{s^-1(3)} to inf, 0, 1.
template <class F> Mobius<F> theta_normalizer(const Permutation& s, const OmegaPoint<F>& point, Tolerance tol = {}) {
  const auto p = point.configuration();
  const Permutation inv = s.inverse();
  return cross_ratio_normalizer(p[inv(1) - 1], p[inv(2) - 1], p[inv(3) - 1], tol);
}

/// theta_n(s)(l): relabel the marked points by s (the new j-th point is
/// p_{s^-1(j)}) and renormalize the first three to inf, 0, 1.
/// theta_n(s * t) = theta_n(s) o theta_n(t).
/// Throws std::invalid_argument on a degree mismatch and
/// DegenerateConfiguration if the floating result loses separation.
template <class F> OmegaPoint<F> apply_theta(const Permutation& s, const OmegaPoint<F>& point, Tolerance tol = {}) {
  if (s.degree() != static_cast<std::size_t>(point.n() + 1)) {
    throw std::invalid_argument("permutation degree " + std::to_string(s.degree()) + " does not match n+1 = " +
                                std::to_string(point.n() + 1));
  }
  const auto p = point.configuration();
  const Permutation inv = s.inverse();
  std::vector<Extended<F>> relabeled;
  relabeled.reserve(p.size());
  for (int j = 1; j <= static_cast<int>(p.size()); ++j) {
    relabeled.push_back(p[inv(j) - 1]);
  }
  return normalize_configuration(relabeled, tol);
}

/// theta_n(s) o J, with J coordinatewise conjugation.
template <class F>
OmegaPoint<F> apply_theta_conj(const Permutation& s, const OmegaPoint<F>& point, Tolerance tol = {}) {
  return apply_theta(s, point.conj(), tol);
}

/// Closed form of A = theta_n((1,2)): l_j -> 1/l_j.
template <class F> OmegaPoint<F> generator_a(const OmegaPoint<F>& point, Tolerance tol = {}) {
  std::vector<F> out;
  for (const auto& c : point.coords()) {
    out.push_back(F(1) / c);
  }
  return OmegaPoint<F>(point.n(), std::move(out), tol);
}

/// Closed form of B = theta_n((1,2,...,n+1)):
/// (l_{n-2}/(l_{n-2}-1), l_{n-2}/(l_{n-2}-l_1), ..., l_{n-2}/(l_{n-2}-l_{n-3})).
template <class F> OmegaPoint<F> generator_b(const OmegaPoint<F>& point, Tolerance tol = {}) {
  const auto& z = point.coords();
  const F& last = z.back();
  std::vector<F> out;
  out.push_back(last / (last - F(1)));
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    out.push_back(last / (last - z[j]));
  }
  return OmegaPoint<F>(point.n(), std::move(out), tol);
}

/// An antiholomorphic involution T o J of Omega_n, T = theta_n(twist),
/// twist * twist = identity.
class Symmetry {
public:
  /// Throws std::invalid_argument unless twist is an involution (or the identity).
  explicit Symmetry(Permutation twist);

  /// Normal form (1,2)(3,4)...(2beta-1,2beta) on n+1 symbols.
  static Symmetry standard(int n, int beta);

  const Permutation& twist() const { return twist_; }
  int beta() const { return beta_; }

private:
  Permutation twist_;
  int beta_;
};

/// S(l) = theta_n(twist)(conj(l)); equals conj(theta_n(twist)(l)).
template <class F> OmegaPoint<F> apply_symmetry(const Symmetry& s, const OmegaPoint<F>& point, Tolerance tol = {}) {
  return apply_theta_conj(s.twist(), point, tol);
}

/// Upper bound on n for exhaustive stabilizer searches ((n+1)! evaluations).
inline constexpr int kStabilizerMaxN = 8;

struct Stabilizer {
  /// Every s with theta_n(s)(l) = l, in lexicographic image order.
  std::vector<Permutation> holomorphic;
  /// Every s with theta_n(s)(conj l) = l (antiholomorphic maps T o J fixing l).
  std::vector<Permutation> antiholomorphic;
};

/// Brute-force stabilizer over S_{n+1}. With with_antiholomorphic the maps
/// T o J are searched too. Throws std::invalid_argument when n exceeds cap.
template <class F>
Stabilizer stabilizer(const OmegaPoint<F>& point, bool with_antiholomorphic = false, Tolerance tol = {},
                      int cap = kStabilizerMaxN) {
  if (point.n() > cap) {
    throw std::invalid_argument("stabilizer search capped at n = " + std::to_string(cap));
  }
  Stabilizer out;
  const auto conj_point = point.conj();
  const Tolerance loose{0.0};
  for_each_permutation(static_cast<std::size_t>(point.n() + 1), [&](const Permutation& s) {
    // Images of distinct points stay distinct; the loose tolerance keeps
    // the floating separation check from rejecting them.
    if (near(apply_theta(s, point, loose), point, tol)) {
      out.holomorphic.push_back(s);
    }
    if (with_antiholomorphic && near(apply_theta(s, conj_point, loose), point, tol)) {
      out.antiholomorphic.push_back(s);
    }
    return true;
  });
  return out;
}

} // namespace moduli

#endif
