#include "moduli/reallocus.hpp"

#include <algorithm>
#include <stdexcept>

#include "moduli/number_theory.hpp"

namespace moduli {

namespace {

void require_n(int n) {
  if (n < 4) {
    throw std::invalid_argument("real-locus computations need n >= 4");
  }
}

void require_betas(int n, int b1, int b2) {
  require_n(n);
  const int top = max_beta(n);
  if (b1 < 0 || b2 < 0 || b1 > top || b2 > top) {
    throw std::invalid_argument("beta must lie in {0, ..., " + std::to_string(top) + "}");
  }
  if (b1 == b2) {
    throw std::invalid_argument("intersection needs two different betas");
  }
}

template <class F> F imaginary_unit() {
  if constexpr (std::is_same_v<F, GaussianRational>) {
    return GaussianRational::i();
  } else {
    return F(0.0, 1.0);
  }
}

// ((1 - t^2) + 2ti) / (1 + t^2), a rational point of the unit circle.
template <class F> F unit_point(long t) {
  return (F(1 - t * t) + F(2 * t) * imaginary_unit<F>()) / F(1 + t * t);
}

template <class F> bool has_squared_modulus(const F& z, const F& target, Tolerance tol) {
  return near(z * conj(z), target, tol);
}

} // namespace

RealComponentLabel RealComponentLabel::a1(int n) {
  if (n % 2 == 0) {
    throw std::invalid_argument("A1 exists only for odd n");
  }
  return {Kind::A1, max_beta(n)};
}

std::string RealComponentLabel::to_string() const {
  return kind == Kind::A1 ? "A1" : std::to_string(beta);
}

int symmetry_class_count(int n) {
  require_n(n);
  return (n + 3) / 2;
}

std::vector<std::pair<int, int>> intersection_solutions(int n, int b1, int b2) {
  require_betas(n, b1, b2);
  std::vector<std::pair<int, int>> out;
  for (int gamma = 0; gamma <= 2; ++gamma) {
    const int rest = n + 1 - gamma;
    if (rest % 2 != 0 || rest < 2 * std::max(b1, b2)) {
      continue;
    }
    // 2m | (2m-1) rest forces 2m | rest.
    for (const int m : divisors(rest / 2)) {
      if (2L * m * (b1 + b2) == (2L * m - 1) * rest) {
        out.emplace_back(m, gamma);
      }
    }
  }
  return out;
}

bool intersects(int n, int b1, int b2) { return !intersection_solutions(n, b1, b2).empty(); }

bool bare_equation_solvable(int n, int b1, int b2) {
  require_betas(n, b1, b2);
  for (int gamma = 0; gamma <= 2; ++gamma) {
    for (long m = 1; m <= n + 1; ++m) {
      if (2 * m * (b1 + b2) == (2 * m - 1) * (n + 1 - gamma)) {
        return true;
      }
    }
  }
  return false;
}

ComponentGraph intersection_graph(int n) {
  require_n(n);
  ComponentGraph graph;
  const int top = max_beta(n);
  for (int b = 0; b <= top; ++b) {
    graph.add_vertex(std::to_string(b));
  }
  for (int b1 = 0; b1 <= top; ++b1) {
    for (int b2 = b1 + 1; b2 <= top; ++b2) {
      if (intersects(n, b1, b2)) {
        graph.add_edge(static_cast<std::size_t>(b1), static_cast<std::size_t>(b2));
      }
    }
  }
  if (n % 2 == 1) {
    const auto hub = graph.add_vertex("A1");
    for (int b = 0; b <= top; ++b) {
      graph.add_edge(hub, static_cast<std::size_t>(b));
    }
  }
  return graph;
}

int real_component_count(int n) { return static_cast<int>(intersection_graph(n).component_count()); }

int a_piece(double lambda1) {
  if (lambda1 < 0) {
    return 1;
  }
  return lambda1 < 1 ? 2 : 3;
}

template <class F>
OmegaPoint<F> real_witness(int n, const RealComponentLabel& label, const std::vector<F>& seeds, Tolerance tol) {
  require_n(n);
  const int beta = label.beta;
  if (beta < 0 || beta > max_beta(n)) {
    throw std::invalid_argument("beta out of range");
  }
  const bool a1 = label.kind == RealComponentLabel::Kind::A1;
  if (a1 && (n % 2 == 0 || beta != max_beta(n))) {
    throw std::invalid_argument("A1 needs odd n and beta = (n+1)/2");
  }
  const std::size_t count = static_cast<std::size_t>(n - 2);
  std::vector<F> coords;
  if (beta <= 1) {
    if (seeds.size() != count) {
      throw std::invalid_argument("expected " + std::to_string(count) + " seeds");
    }
    for (const auto& z : seeds) {
      if (beta == 0 ? !is_real(z, tol) : !has_squared_modulus(z, F(1), tol)) {
        throw std::invalid_argument(beta == 0 ? "seeds must be real" : "seeds must have modulus 1");
      }
    }
    coords = seeds;
  } else {
    const std::size_t pairs = static_cast<std::size_t>(beta - 2);
    const std::size_t singles = count - 1 - 2 * pairs;
    if (seeds.size() != 1 + pairs + singles) {
      throw std::invalid_argument("expected " + std::to_string(1 + pairs + singles) + " seeds");
    }
    const F& l1 = seeds[0];
    if (!is_real(l1, tol)) {
      throw std::invalid_argument("l_1 must be real");
    }
    if (a1 ? real_part(l1) >= 0 : real_part(l1) <= 0) {
      throw std::invalid_argument(a1 ? "A1 needs l_1 < 0" : "l_1 must be positive");
    }
    coords.push_back(l1);
    for (std::size_t k = 0; k < pairs; ++k) {
      const F& lead = seeds[1 + k];
      if (is_zero(lead, tol)) {
        throw DegenerateConfiguration("pair seed must be nonzero");
      }
      coords.push_back(lead);
      coords.push_back(l1 / conj(lead));
    }
    for (std::size_t k = 0; k < singles; ++k) {
      const F& z = seeds[1 + pairs + k];
      if (!has_squared_modulus(z, l1, tol)) {
        throw std::invalid_argument("remaining seeds must have modulus sqrt(l_1)");
      }
      coords.push_back(z);
    }
  }
  OmegaPoint<F> point(n, std::move(coords), tol);
  if (!near(apply_symmetry(Symmetry::standard(n, beta), point, Tolerance{0.0}), point, tol)) {
    throw std::logic_error("real witness failed certification");
  }
  return point;
}

template <class F> std::vector<F> default_real_seeds(int n, const RealComponentLabel& label, int attempt) {
  require_n(n);
  std::vector<F> seeds;
  const long count = n - 2;
  const int beta = label.beta;
  if (beta == 0) {
    for (long j = 0; j < count; ++j) {
      seeds.push_back(F(j + 2 + attempt));
    }
    return seeds;
  }
  if (beta == 1) {
    for (long j = 0; j < count; ++j) {
      seeds.push_back(unit_point<F>(j + 2 + attempt));
    }
    return seeds;
  }
  const bool a1 = label.kind == RealComponentLabel::Kind::A1;
  seeds.push_back(F(a1 ? -4 : 4));
  const long pairs = beta - 2;
  for (long k = 0; k < pairs; ++k) {
    seeds.push_back(F(k + 3 + attempt) + imaginary_unit<F>());
  }
  const long singles = count - 1 - 2 * pairs;
  for (long k = 0; k < singles; ++k) {
    seeds.push_back(F(2) * unit_point<F>(k + 2 + attempt));
  }
  return seeds;
}

template <class F> OmegaPoint<F> default_real_witness(int n, const RealComponentLabel& label, Tolerance tol) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    try {
      return real_witness<F>(n, label, default_real_seeds<F>(n, label, attempt), tol);
    } catch (const DegenerateConfiguration&) {
    }
  }
  throw DegenerateConfiguration("no collision-free default real witness found");
}

template OmegaPoint<GaussianRational> real_witness(int, const RealComponentLabel&, const std::vector<GaussianRational>&,
                                                   Tolerance);
template OmegaPoint<Complex> real_witness(int, const RealComponentLabel&, const std::vector<Complex>&, Tolerance);
template std::vector<GaussianRational> default_real_seeds(int, const RealComponentLabel&, int);
template std::vector<Complex> default_real_seeds(int, const RealComponentLabel&, int);
template OmegaPoint<GaussianRational> default_real_witness(int, const RealComponentLabel&, Tolerance);
template OmegaPoint<Complex> default_real_witness(int, const RealComponentLabel&, Tolerance);

} // namespace moduli
