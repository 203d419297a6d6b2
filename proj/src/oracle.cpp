#include "moduli/oracle.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "moduli/number_theory.hpp"

namespace moduli {

namespace {

// s(i) = j where map(p_i) = p_j.
template <class F>
Permutation induced_permutation(const std::vector<Extended<F>>& config, const Mobius<F>& map, Tolerance tol) {
  std::vector<int> images;
  for (const auto& p : config) {
    const auto q = map(p, tol);
    int found = 0;
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (near(q, config[j], tol)) {
        if (found != 0) {
          throw std::logic_error("configuration points too close to match");
        }
        found = static_cast<int>(j) + 1;
      }
    }
    if (found == 0) {
      throw std::logic_error("configuration is not invariant under the map");
    }
    images.push_back(found);
  }
  return Permutation::from_images(images);
}

std::vector<long> primes_from(int skip, std::size_t count) {
  std::vector<long> out;
  for (long p = 2; out.size() < count; ++p) {
    if (is_prime(p) && skip-- <= 0) {
      out.push_back(p);
    }
  }
  return out;
}

} // namespace

std::vector<DeltaSolution> delta_system_solve(int n, int b1, int b2) {
  if (n < 4) {
    throw std::invalid_argument("n must be >= 4");
  }
  const int top = (n + 1) / 2;
  if (b1 < 0 || b2 < 0 || b1 > top || b2 > top) {
    throw std::invalid_argument("beta out of range");
  }
  std::vector<DeltaSolution> out;
  for (int m = 1; m <= n + 1; ++m) {
    for (int gamma = 0; gamma <= 2; ++gamma) {
      const int twice_d1 = n + 1 - 2 * b1 - gamma;
      const int twice_d2 = n + 1 - 2 * b2 - gamma;
      if (twice_d1 < 0 || twice_d2 < 0 || twice_d1 % 2 != 0 || twice_d2 % 2 != 0) {
        continue;
      }
      const int d1 = twice_d1 / 2;
      const int d2 = twice_d2 / 2;
      if (2 * b1 == 2 * m * d2 + (2 * m - 2) * d1 && 2 * b2 == 2 * m * d1 + (2 * m - 2) * d2) {
        out.push_back({m, gamma, d1, d2});
      }
    }
  }
  return out;
}

Certified<Complex> dihedral_witness(int n, int b1, int b2, const DeltaSolution& sol, int attempt, Tolerance tol) {
  const auto all = delta_system_solve(n, b1, b2);
  if (std::find(all.begin(), all.end(), sol) == all.end()) {
    throw std::invalid_argument("not a solution of the axis-count system");
  }
  const int m = sol.m;
  const double step = std::numbers::pi / m;
  std::vector<Extended<Complex>> config;
  if (sol.gamma >= 1) {
    config.emplace_back(Complex(0.0));
  }
  if (sol.gamma == 2) {
    config.push_back(Extended<Complex>::infinity());
  }
  const auto radii = primes_from(attempt, static_cast<std::size_t>(sol.delta1 + sol.delta2));
  std::size_t next = 0;
  auto add_orbit = [&](double offset) {
    const double rho = static_cast<double>(radii[next++]);
    for (int k = 0; k < 2 * m; ++k) {
      config.emplace_back(std::polar(rho, offset + k * step));
    }
  };
  for (int j = 0; j < sol.delta1; ++j) {
    add_orbit(0.0);
  }
  for (int j = 0; j < sol.delta2; ++j) {
    add_orbit(step / 2);
  }
  if (static_cast<int>(config.size()) != n + 1) {
    throw std::logic_error("dihedral configuration has the wrong size");
  }
  const auto tau1 = Mobius<Complex>::conjugation();
  const auto tau2 = Mobius<Complex>(std::polar(1.0, step), 0.0, 0.0, 1.0, Orientation::antiholomorphic);
  Certified<Complex> out{normalize_configuration(config, tol), {}, {}};
  for (const auto& tau : {tau1, tau2}) {
    const Permutation twist = induced_permutation(config, tau, tol);
    const auto image = apply_symmetry(Symmetry(twist), out.point, Tolerance{0.0});
    out.residuals.push_back(residual(image, out.point));
    out.permutations.push_back(twist);
  }
  if (transposition_count(out.permutations[0]) != b1 || transposition_count(out.permutations[1]) != b2) {
    throw std::logic_error("dihedral witness twists have the wrong transposition counts");
  }
  for (const double r : out.residuals) {
    if (r > tol.absolute) {
      throw std::logic_error("dihedral witness failed certification");
    }
  }
  return out;
}

std::size_t rotation_order(const Certified<Complex>& w) {
  return (w.permutations.at(0) * w.permutations.at(1)).order();
}

Certified<GaussianRational> klein_witness(int n) {
  if (n < 5 || n % 2 == 0) {
    throw std::invalid_argument("Klein witness needs odd n >= 5");
  }
  using GR = GaussianRational;
  const GR i = GR::i();
  // n+1 = 4g + 2 (+ 2 when n = 3 mod 4).
  const bool with_i = n % 4 == 3;
  const int generic = (n + 1 - 2 - (with_i ? 2 : 0)) / 4;
  std::vector<Extended<GR>> config;
  for (int k = 0; k < generic; ++k) {
    const GR w = GR(k + 2) + i;
    for (const GR& z : {w, GR(1) / w, -w, GR(-1) / w}) {
      config.emplace_back(z);
    }
  }
  if (with_i) {
    config.emplace_back(i);
    config.emplace_back(-i);
  }
  config.emplace_back(GR(1));
  config.emplace_back(GR(-1));

  const Tolerance exact{0.0};
  const auto inversion = Mobius<GR>(GR(0), GR(1), GR(1), GR(0));
  const auto negation = Mobius<GR>(GR(-1), GR(0), GR(0), GR(1));
  Certified<GR> out{normalize_configuration(config, exact), {}, {}};
  for (const auto& map : {inversion, negation}) {
    const Permutation s = induced_permutation(config, map, exact);
    if (!near(apply_theta(s, out.point, exact), out.point, exact)) {
      throw std::logic_error("Klein witness failed certification");
    }
    out.permutations.push_back(s);
    out.residuals.push_back(0.0);
  }
  return out;
}

} // namespace moduli
