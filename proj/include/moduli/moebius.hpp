#ifndef MODULI_MOEBIUS_HPP
#define MODULI_MOEBIUS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moduli/scalar.hpp"

namespace moduli {

/// A point of the Riemann sphere: a finite scalar or infinity.
template <class F> class Extended {
public:
  Extended(F value) : value_(std::move(value)) {} // NOLINT(google-explicit-constructor)
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::domain_error at infinity.
  const F& value() const {
    if (!value_) {
      throw std::domain_error("point at infinity has no finite value");
    }
    return *value_;
  }

  Extended conj() const { return is_infinite() ? *this : Extended(moduli::conj(*value_)); }

  std::string to_string() const { return is_infinite() ? "inf" : moduli::to_string(*value_); }

private:
  Extended() = default;
  std::optional<F> value_;
};

template <class F> bool near(const Extended<F>& a, const Extended<F>& b, Tolerance tol = {}) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite();
  }
  return near(a.value(), b.value(), tol);
}

enum class Orientation { holomorphic, antiholomorphic };

/// x -> (a x + b) / (c x + d), pre-composed with complex conjugation when
/// the orientation is antiholomorphic. Coefficients matter only up to a
/// common scale.
template <class F> class Mobius {
public:
  /// Throws std::invalid_argument when ad - bc vanishes.
  Mobius(F a, F b, F c, F d, Orientation o = Orientation::holomorphic, Tolerance tol = {})
      : m_{std::move(a), std::move(b), std::move(c), std::move(d)}, orientation_(o) {
    if (is_zero(determinant(), tol)) {
      throw std::invalid_argument("degenerate Moebius coefficients (ad - bc = 0)");
    }
  }

  static Mobius identity() { return Mobius(F(1), F(0), F(0), F(1)); }
  /// z -> conj(z).
  static Mobius conjugation() { return Mobius(F(1), F(0), F(0), F(1), Orientation::antiholomorphic); }

  const F& a() const { return m_[0]; }
  const F& b() const { return m_[1]; }
  const F& c() const { return m_[2]; }
  const F& d() const { return m_[3]; }
  Orientation orientation() const { return orientation_; }
  bool is_holomorphic() const { return orientation_ == Orientation::holomorphic; }

  F determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Extended<F> operator()(const Extended<F>& x, Tolerance tol = {}) const {
    const Extended<F> z = is_holomorphic() ? x : x.conj();
    if (z.is_infinite()) {
      if (is_zero(c(), tol)) {
        return Extended<F>::infinity();
      }
      return Extended<F>(a() / c());
    }
    const F den = c() * z.value() + d();
    if (is_zero(den, tol)) {
      return Extended<F>::infinity();
    }
    return Extended<F>((a() * z.value() + b()) / den);
  }

  /// (*this) o other.
  Mobius compose(const Mobius& other) const {
    // M1 o conj o M2 = M1 * conj(M2) o conj.
    const bool flip = !is_holomorphic();
    auto pick = [&](const F& v) { return flip ? moduli::conj(v) : v; };
    const F oa = pick(other.a()), ob = pick(other.b()), oc = pick(other.c()), od = pick(other.d());
    const Orientation o = (is_holomorphic() == other.is_holomorphic()) ? Orientation::holomorphic
                                                                       : Orientation::antiholomorphic;
    return Mobius(a() * oa + b() * oc, a() * ob + b() * od, c() * oa + d() * oc, c() * ob + d() * od, o,
                  Tolerance{0.0});
  }

  Mobius inverse() const {
    // Holomorphic: adjugate. Antiholomorphic M o conj: inverse is conj o M^-1 = conj(M^-1) o conj.
    Mobius adj(d(), -b(), -c(), a(), Orientation::holomorphic, Tolerance{0.0});
    if (is_holomorphic()) {
      return adj;
    }
    return Mobius(moduli::conj(adj.a()), moduli::conj(adj.b()), moduli::conj(adj.c()), moduli::conj(adj.d()),
                  Orientation::antiholomorphic, Tolerance{0.0});
  }

  Mobius power(int k) const {
    Mobius base = k < 0 ? inverse() : *this;
    Mobius result = identity();
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      result = result.compose(base);
    }
    return result;
  }

  /// Equality as maps: same orientation and proportional coefficients.
  /// Cross-multiplies coefficient pairs so no normalization is chosen; in
  /// the floating backend the tolerance is relative to the coefficient scale.
  bool projectively_equal(const Mobius& o, Tolerance tol = {}) const {
    if (orientation_ != o.orientation_) {
      return false;
    }
    double scale = 1.0;
    if constexpr (!std::is_same_v<F, GaussianRational>) {
      double s1 = 0, s2 = 0;
      for (int i = 0; i < 4; ++i) {
        s1 = std::max(s1, std::abs(to_complex(m_[i])));
        s2 = std::max(s2, std::abs(to_complex(o.m_[i])));
      }
      scale = s1 * s2;
    }
    const Tolerance scaled{tol.absolute * scale};
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (!is_zero(m_[i] * o.m_[j] - m_[j] * o.m_[i], scaled)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_identity(Tolerance tol = {}) const { return projectively_equal(identity(), tol); }

  /// "a,b;c,d" with each coefficient written "(re,im)".
  std::string coefficient_string() const {
    auto f = [](const F& v) { return "(" + moduli::to_string(v) + ")"; };
    return f(a()) + "," + f(b()) + ";" + f(c()) + "," + f(d());
  }

private:
  std::array<F, 4> m_;
  Orientation orientation_;
};

/// Converts an exact map to the floating backend. Explicit by design of the
/// API: there is no implicit path from exact to floating.
inline Mobius<Complex> to_floating(const Mobius<GaussianRational>& m) {
  return Mobius<Complex>(m.a().to_complex(), m.b().to_complex(), m.c().to_complex(), m.d().to_complex(),
                         m.orientation());
}

/// The unique holomorphic map with p -> inf, q -> 0, r -> 1:
/// x -> (x - q)(r - p) / ((x - p)(r - q)), with the infinite limits taken.
/// Throws std::invalid_argument when two of the points coincide.
template <class F>
Mobius<F> cross_ratio_normalizer(const Extended<F>& p, const Extended<F>& q, const Extended<F>& r,
                                 Tolerance tol = {}) {
  if (near(p, q, tol) || near(p, r, tol) || near(q, r, tol)) {
    throw std::invalid_argument("cross-ratio normalizer needs three distinct points");
  }
  const F one(1), zero(0);
  if (p.is_infinite()) {
    return Mobius<F>(one, -q.value(), zero, r.value() - q.value());
  }
  if (q.is_infinite()) {
    return Mobius<F>(zero, r.value() - p.value(), one, -p.value());
  }
  if (r.is_infinite()) {
    return Mobius<F>(one, -q.value(), one, -p.value());
  }
  const F rp = r.value() - p.value();
  const F rq = r.value() - q.value();
  return Mobius<F>(rp, -q.value() * rp, rq, -p.value() * rq);
}

/// Order of a holomorphic map: smallest k >= 1 with M^k the identity,
/// searched up to bound; std::nullopt means "infinite" (beyond the bound).
template <class F> std::optional<int> order_of(const Mobius<F>& m, int bound = 120, Tolerance tol = {}) {
  if (!m.is_holomorphic()) {
    throw std::invalid_argument("order_of expects a holomorphic map");
  }
  Mobius<F> power = m;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_identity(tol)) {
      return k;
    }
    power = power.compose(m);
  }
  return std::nullopt;
}

/// Fixed points of a holomorphic non-identity map: the roots of
/// c x^2 + (d - a) x - b = 0, with infinity reported when c = 0.
/// One point for parabolic maps, two otherwise. The exact backend throws
/// InexactError when the roots leave Q(i).
template <class F> std::vector<Extended<F>> fixed_points(const Mobius<F>& m, Tolerance tol = {}) {
  if (!m.is_holomorphic()) {
    throw std::invalid_argument("fixed_points expects a holomorphic map");
  }
  if (m.is_identity(tol)) {
    throw std::invalid_argument("the identity fixes every point");
  }
  if (is_zero(m.c(), tol)) {
    // a x + b = d x  ->  x = b / (d - a); parabolic when a = d.
    const F diff = m.d() - m.a();
    if (is_zero(diff, tol)) {
      return {Extended<F>::infinity()};
    }
    return {Extended<F>(m.b() / diff), Extended<F>::infinity()};
  }
  const F amd = m.a() - m.d();
  const F disc = amd * amd + F(4) * m.b() * m.c();
  const F two_c = F(2) * m.c();
  if (is_zero(disc, tol)) {
    return {Extended<F>(amd / two_c)};
  }
  const F root = sqrt(disc);
  return {Extended<F>((amd + root) / two_c), Extended<F>((amd - root) / two_c)};
}

} // namespace moduli

#endif
