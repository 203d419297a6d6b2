#ifndef MODULI_NUMBER_THEORY_HPP
#define MODULI_NUMBER_THEORY_HPP

#include <vector>

namespace moduli {

/// Euler's totient.
int euler_phi(int m);

/// Positive divisors of k in increasing order; empty for k <= 0.
std::vector<int> divisors(int k);

bool is_prime(int p);

} // namespace moduli

#endif
