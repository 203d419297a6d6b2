#include "moduli/number_theory.hpp"

namespace moduli {

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) {
        m /= p;
      }
      result -= result / p;
    }
  }
  if (m > 1) {
    result -= result / m;
  }
  return result;
}

std::vector<int> divisors(int k) {
  std::vector<int> low, high;
  for (int d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      low.push_back(d);
      if (d != k / d) {
        high.push_back(k / d);
      }
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_prime(int p) {
  if (p < 2) {
    return false;
  }
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

} // namespace moduli
