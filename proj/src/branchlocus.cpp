#include "moduli/branchlocus.hpp"

#include <algorithm>
#include <stdexcept>

namespace moduli {

namespace {

void require_n(int n) {
  if (n < 4) {
    throw std::invalid_argument("branch-locus computations need n >= 4");
  }
}

std::string label_of(const FixedClass& cls) {
  return "B_{" + std::to_string(cls.m) + "," + std::to_string(cls.r) + "}";
}

// An involution reversing the long cycle of tau = (c_0, ..., c_{N-1}) and
// swapping the two symbols tau fixes (case C); it conjugates tau to its inverse.
Permutation dihedral_involution(const Permutation& tau) {
  std::vector<int> cycle;
  std::vector<int> fixed;
  for (const auto& c : tau.cycles()) {
    if (c.size() == 1) {
      fixed.push_back(c.front());
    } else {
      cycle = c;
    }
  }
  std::vector<int> images = Permutation(tau.degree()).images();
  const auto big_n = cycle.size();
  for (std::size_t k = 0; k < big_n; ++k) {
    images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(big_n - k) % big_n];
  }
  if (fixed.size() == 2) {
    images[static_cast<std::size_t>(fixed[0] - 1)] = fixed[1];
    images[static_cast<std::size_t>(fixed[1] - 1)] = fixed[0];
  }
  return Permutation::from_images(images);
}

} // namespace

std::string Stratum::label() const { return label_of(cls); }

std::vector<Stratum> enumerate_strata(int n) {
  require_n(n);
  std::vector<Stratum> out;
  for (int m = 2; m <= n + 1; ++m) {
    for (int fixed = 0; fixed <= 2; ++fixed) {
      const int moved = n + 1 - fixed;
      if (moved % m == 0) {
        out.push_back(Stratum{FixedClass{m, moved / m - 1, static_cast<FixedCase>(fixed)}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    return std::pair(a.cls.m, a.cls.r) < std::pair(b.cls.m, b.cls.r);
  });
  return out;
}

bool cyclic_realizable(int n, int m) {
  if (m < 2) {
    return false;
  }
  return (n + 1) % m <= 2;
}

bool dihedral_realizable(int n, int m) {
  if (m < 2) {
    return false;
  }
  for (int d1 = 0; d1 <= 2; ++d1) {
    for (int d2 : {0, 2}) {
      const int rest = n + 1 - m * d1 - d2;
      if (rest >= 0 && rest % (2 * m) == 0) {
        return true;
      }
    }
  }
  return false;
}

bool a4_realizable(int n) {
  for (int d1 = 0; d1 <= 1; ++d1) {
    for (int d2 = 0; d2 <= 2; ++d2) {
      const int rest = n + 1 - 6 * d1 - 4 * d2;
      if (rest >= 0 && rest % 12 == 0) {
        return true;
      }
    }
  }
  return false;
}

bool s4_realizable(int n) {
  for (int mask = 0; mask < 8; ++mask) {
    const int rest = n + 1 - 12 * (mask & 1) - 8 * ((mask >> 1) & 1) - 6 * ((mask >> 2) & 1);
    if (rest >= 0 && rest % 24 == 0) {
      return true;
    }
  }
  return false;
}

bool a5_realizable(int n) {
  for (int mask = 0; mask < 8; ++mask) {
    const int rest = n + 1 - 30 * (mask & 1) - 20 * ((mask >> 1) & 1) - 12 * ((mask >> 2) & 1);
    if (rest >= 0 && rest % 60 == 0) {
      return true;
    }
  }
  return false;
}

std::vector<FixedClass> involution_classes(int n) {
  require_n(n);
  if (n % 2 == 0) {
    return {FixedClass{2, (n - 2) / 2, FixedCase::B}};
  }
  return {FixedClass{2, (n - 3) / 2, FixedCase::C}, FixedClass{2, (n - 1) / 2, FixedCase::A}};
}

ComponentGraph stratum_graph(int n) {
  require_n(n);
  ComponentGraph graph;
  const auto strata = enumerate_strata(n);
  for (const auto& s : strata) {
    const auto v = graph.add_vertex(s.label());
    if (s.cls.m == 2) {
      graph.set_cluster(v, kInvolutionCluster);
    }
  }
  const auto involutions = involution_classes(n);
  if (involutions.size() == 2) {
    // Klein-four edge: a point fixed by both involution classes.
    graph.add_edge(label_of(involutions[0]), label_of(involutions[1]));
  }
  auto involution_vertex = [&](const Permutation& eta) {
    const auto cls = classify_fixed_point_class(eta);
    if (!cls || cls->m != 2) {
      throw std::logic_error(eta.to_string() + " is not an involution with fixed points");
    }
    return label_of(*cls);
  };
  for (const auto& s : strata) {
    const auto& c = s.cls;
    if (c.m == 2) {
      continue;
    }
    const Permutation sigma = canonical_rep(c, n);
    if (c.m % 2 == 0) {
      // T^{m/2} is an involution fixing Fix(T).
      graph.add_edge(s.label(), involution_vertex(sigma.pow(c.m / 2)));
      continue;
    }
    const FixedClass full{(c.r + 1) * c.m, 0, c.fixed_case};
    if (c.r > 0) {
      // sigma = tau^{r+1} with tau a single (r+1)m-cycle.
      graph.add_edge(s.label(), label_of(full));
    }
    if (c.fixed_case != FixedCase::B) {
      const Permutation tau = canonical_rep(full, n);
      graph.add_edge(label_of(full), involution_vertex(dihedral_involution(tau)));
    }
  }
  if (n % 2 == 1 && n % 3 == 0 && n >= 9) {
    // n = 3(1 + 2(s + 2t)): an A_4 stabilizer joins the order-3 stratum to
    // an involution stratum; the involution fixes two marked points iff s = 1.
    const int k = (n / 3 - 1) / 2;
    const int s = k % 2;
    const FixedClass order_three{3, (n - 3) / 3, FixedCase::B};
    graph.add_edge(label_of(order_three), label_of(involutions[s == 1 ? 0 : 1]));
  }
  return graph;
}

int branch_component_closed_form(int n) {
  require_n(n);
  return (n % 2 == 0 || n % 3 == 0) ? 1 : 2;
}

int branch_component_count(int n) {
  const int closed = branch_component_closed_form(n);
  const auto from_graph = static_cast<int>(stratum_graph(n).component_count());
  if (closed != from_graph) {
    throw std::logic_error("branch locus n=" + std::to_string(n) + ": closed form " + std::to_string(closed) +
                           " but stratum graph has " + std::to_string(from_graph) + " components");
  }
  return closed;
}

} // namespace moduli
