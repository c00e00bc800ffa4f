#include "nthpow/padic.hpp"

#include <stdexcept>

namespace nthpow {

std::vector<Factor> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::vector<Factor> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t mu(std::uint64_t n) {
  unsigned __int128 m = n;
  for (const auto& f : factorize(n)) {
    m *= f.p;
    if (m > (static_cast<unsigned __int128>(1) << 62))
      throw std::overflow_error("mu: value exceeds 2^62");
  }
  return static_cast<std::uint64_t>(m);
}

long valuation(const mpz_class& r, std::uint64_t p) {
  if (r == 0) return 0;
  mpz_class a = abs(r);
  long v = 0;
  mpz_class pz(static_cast<unsigned long>(p)), q, rem;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
    if (rem != 0) return v;
    a = q;
    ++v;
  }
}

long valuation(const mpq_class& r, std::uint64_t p) {
  if (r == 0) return 0;
  return valuation(mpz_class(r.get_num()), p) - valuation(mpz_class(r.get_den()), p);
}

}  // namespace nthpow
