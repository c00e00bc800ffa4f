#pragma once
#include <cstdint>
#include <vector>
#include <gmpxx.h>

namespace nthpow {

struct Factor {
  std::uint64_t p;
  int e;
};

// Prime factorization by trial division, sorted by prime; n = 1 gives {}.
std::vector<Factor> factorize(std::uint64_t n);

// mu(n) = n * product of the distinct primes dividing n.
std::uint64_t mu(std::uint64_t n);

// Exponent of p in r; by convention valuation(0, p) = 0.
long valuation(const mpz_class& r, std::uint64_t p);
long valuation(const mpq_class& r, std::uint64_t p);

}  // namespace nthpow
