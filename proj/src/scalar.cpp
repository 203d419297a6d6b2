#include "moduli/scalar.hpp"

#include <cstdlib>
#include <sstream>

namespace moduli {

Tolerance Tolerance::from_environment() {
  Tolerance tol;
  if (const char* env = std::getenv("MODULI_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) {
      tol.absolute = v;
    }
  }
  return tol;
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) {
    throw std::domain_error("division by zero in Q(i)");
  }
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  return re_.get_str() + "," + im_.get_str();
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) {
    return std::nullopt;
  }
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpq_class root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

GaussianRational sqrt(const GaussianRational& z) {
  if (z.is_zero()) {
    return {};
  }
  // (x + iy)^2 = a + ib  with  x^2 = (|z| + a)/2,  y^2 = (|z| - a)/2, sign(y) = sign(b).
  const auto modulus = rational_sqrt(z.norm());
  if (!modulus) {
    throw InexactError("square root of " + z.to_string() + " is not in Q(i)");
  }
  const auto x = rational_sqrt((*modulus + z.re()) / 2);
  const auto y = rational_sqrt((*modulus - z.re()) / 2);
  if (!x || !y) {
    throw InexactError("square root of " + z.to_string() + " is not in Q(i)");
  }
  // Principal branch: Re >= 0, and Im >= 0 on the negative real axis.
  mpq_class im = *y;
  if (sgn(z.im()) < 0) {
    im = -im;
  }
  return {*x, im};
}

bool is_real(const GaussianRational& z, Tolerance) { return z.is_real(); }
bool is_real(const Complex& z, Tolerance tol) { return std::abs(z.imag()) <= tol.absolute; }

double real_part(const GaussianRational& z) { return z.re().get_d(); }
double imag_part(const GaussianRational& z) { return z.im().get_d(); }

std::string to_string(const GaussianRational& z) { return z.to_string(); }

std::string to_string(const Complex& z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real() << "," << z.imag();
  return out.str();
}

} // namespace moduli
