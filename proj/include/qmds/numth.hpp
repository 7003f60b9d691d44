#ifndef QMDS_NUMTH_HPP
#define QMDS_NUMTH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qmds {

bool is_prime(long long n);

// Prime factorization by trial division, (prime, exponent) pairs in ascending order.
std::vector<std::pair<long long, int>> factorize(long long n);

// All positive divisors of n, ascending.
std::vector<long long> divisors(long long n);

// Writes q = p^m with p prime; returns false if q is not a prime power.
bool prime_power(long long q, long long* p, int* m);

bool is_odd_prime_power(long long q);

// min(C(n, k), cap + 1); saturates instead of overflowing.
unsigned long long binom_capped(int n, int k, unsigned long long cap);

long long mod_reduce(long long a, long long mod);

}  // namespace qmds

#endif
