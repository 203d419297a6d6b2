#include "moduli/action.hpp"

namespace moduli {

Symmetry::Symmetry(Permutation twist) : twist_(std::move(twist)), beta_(transposition_count(twist_)) {}

Symmetry Symmetry::standard(int n, int beta) {
  if (n < 3 || beta < 0 || 2 * beta > n + 1) {
    throw std::invalid_argument("beta must lie in {0, ..., floor((n+1)/2)}");
  }
  std::vector<std::vector<int>> cycles;
  for (int k = 0; k < beta; ++k) {
    cycles.push_back({2 * k + 1, 2 * k + 2});
  }
  return Symmetry(Permutation::from_cycles(static_cast<std::size_t>(n + 1), cycles));
}

} // namespace moduli
