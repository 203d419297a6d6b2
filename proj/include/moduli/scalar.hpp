#ifndef MODULI_SCALAR_HPP
#define MODULI_SCALAR_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace moduli {

/// Raised when an exact computation would need an irrational value
/// (a square root or a cosine outside Q(i)). Callers switch to the
/// floating backend explicitly; values never degrade on their own.
class InexactError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Absolute tolerance used by the floating backend for equality tests.
/// The exact backend ignores it.
struct Tolerance {
  double absolute = 1e-9;

  /// Default tolerance, overridden by the MODULI_TOLERANCE environment
  /// variable when it parses as a positive number.
  static Tolerance from_environment();
};

/// Element of Q(i), stored as a pair of GMP rationals.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Squared modulus, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "re,im" with each part an integer or p/q.
  std::string to_string() const;

private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

using Complex = std::complex<double>;

/// Exact square root of a rational, if it is rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Uniform free-function interface over both backends. Templates in the
// rest of the library only use these, so an exact value and a floating
// value can never meet in one expression.

inline bool is_exact(const GaussianRational&) { return true; }
inline bool is_exact(const Complex&) { return false; }

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline Complex conj(const Complex& z) { return std::conj(z); }

inline bool is_zero(const GaussianRational& z, Tolerance = {}) { return z.is_zero(); }
inline bool is_zero(const Complex& z, Tolerance tol = {}) { return std::abs(z) <= tol.absolute; }

inline bool near(const GaussianRational& a, const GaussianRational& b, Tolerance = {}) { return a == b; }
inline bool near(const Complex& a, const Complex& b, Tolerance tol = {}) {
  return std::abs(a - b) <= tol.absolute;
}

inline double residual(const GaussianRational& a, const GaussianRational& b) {
  return a == b ? 0.0 : std::abs((a - b).to_complex());
}
inline double residual(const Complex& a, const Complex& b) { return std::abs(a - b); }

inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

/// Principal square root. The exact overload throws InexactError when the
/// root is not in Q(i).
GaussianRational sqrt(const GaussianRational& z);
inline Complex sqrt(const Complex& z) { return std::sqrt(z); }

/// Imaginary part zero (floating: within tolerance).
bool is_real(const GaussianRational& z, Tolerance = {});
bool is_real(const Complex& z, Tolerance tol = {});
double real_part(const GaussianRational& z);
inline double real_part(const Complex& z) { return z.real(); }
double imag_part(const GaussianRational& z);
inline double imag_part(const Complex& z) { return z.imag(); }

std::string to_string(const GaussianRational& z);
std::string to_string(const Complex& z);

/// Builds a scalar of backend F from an integer.
template <class F> F from_int(long v) { return F(v); }

} // namespace moduli

#endif
