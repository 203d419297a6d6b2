#include "moduli/fixedloci.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace moduli {

std::vector<int> admissible_angles(int m) {
  std::vector<int> out;
  for (int alpha = 1; alpha <= (m - 1) / 2; ++alpha) {
    if (std::gcd(alpha, m) == 1) {
      out.push_back(alpha);
    }
  }
  return out;
}

FixedLocusReport fixed_locus_report(const FixedClass& cls, int n) {
  if (n < 4) {
    throw std::invalid_argument("fixed-locus reports need n >= 4");
  }
  canonical_rep(cls, n); // validates (m, r, case, n)
  FixedLocusReport report;
  report.cls = cls;
  report.n = n;
  report.dimension = cls.r;
  if (cls.m == 2) {
    report.component_count = 1;
  } else {
    report.admissible_angles = admissible_angles(cls.m);
    const int phi = euler_phi(cls.m);
    report.component_count = (n + 1) % cls.m == 0 ? phi / 2 : phi;
  }
  return report;
}

ComponentLabel component_label(const FixedClass& cls, int n, const OmegaPoint<Complex>& point, Tolerance tol) {
  const Permutation rep = canonical_rep(cls, n);
  if (!near(apply_theta(rep, point, Tolerance{0.0}), point, tol)) {
    throw std::invalid_argument("point is not fixed by " + rep.to_string());
  }
  ComponentLabel label;
  if (cls.m == 2) {
    return label;
  }
  if (cls.m == 3) {
    label.alpha = 1;
  } else {
    const Complex c = point[cls.m - 3];
    const double half_root = std::sqrt(std::max(0.0, c.real())) / 2.0;
    const double theta = std::acos(std::clamp(half_root, -1.0, 1.0));
    label.alpha = static_cast<int>(std::lround(theta * cls.m / std::numbers::pi));
  }
  switch (cls.fixed_case) {
  case FixedCase::A: break;
  case FixedCase::B: label.choice = point[n - 2].imag() > 0 ? 0 : 1; break;
  case FixedCase::C: label.choice = point[n - 3].imag() > 0 ? 0 : 1; break;
  }
  return label;
}

std::vector<std::pair<ComponentLabel, OmegaPoint<Complex>>> component_witnesses(const FixedClass& cls, int n,
                                                                               Tolerance tol) {
  std::vector<std::pair<ComponentLabel, OmegaPoint<Complex>>> out;
  if (cls.m == 2) {
    out.emplace_back(ComponentLabel{}, default_witness<Complex>(cls, n, 0, FixedPointChoice::primary, tol));
    return out;
  }
  std::vector<FixedPointChoice> choices{FixedPointChoice::primary};
  if (cls.fixed_case != FixedCase::A) {
    choices.push_back(FixedPointChoice::secondary);
  }
  for (const int alpha : admissible_angles(cls.m)) {
    for (const auto choice : choices) {
      auto w = default_witness<Complex>(cls, n, alpha, choice, tol);
      out.emplace_back(component_label(cls, n, w, tol), std::move(w));
    }
  }
  return out;
}

std::vector<Permutation> normalizer_of_cyclic(const Permutation& t) {
  std::set<Permutation> subgroup;
  Permutation power = t;
  do {
    subgroup.insert(power);
    power = power * t;
  } while (!subgroup.contains(power));
  std::vector<Permutation> out;
  for_each_permutation(t.degree(), [&](const Permutation& s) {
    if (subgroup.contains(s * t * s.inverse())) {
      out.push_back(s);
    }
    return true;
  });
  return out;
}

BranchStratumImage branch_stratum_image_count(const FixedClass& cls, int n, Tolerance tol) {
  const auto report = fixed_locus_report(cls, n);
  BranchStratumImage image;
  if (n > kStabilizerMaxN) {
    return image;
  }
  const auto witnesses = component_witnesses(cls, n, tol);
  if (static_cast<int>(witnesses.size()) != report.component_count) {
    image.normalizer_transitive = false;
    return image;
  }
  std::map<ComponentLabel, std::size_t> index;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    index.emplace(witnesses[i].first, i);
  }
  // Orbit of component 0 under the normalizer.
  std::set<ComponentLabel> reached{witnesses.front().first};
  const auto normalizer = normalizer_of_cyclic(canonical_rep(cls, n));
  for (const auto& s : normalizer) {
    const auto moved = apply_theta(s, witnesses.front().second, Tolerance{0.0});
    reached.insert(component_label(cls, n, moved, tol));
  }
  image.normalizer_transitive = reached.size() == witnesses.size();
  return image;
}

} // namespace moduli
