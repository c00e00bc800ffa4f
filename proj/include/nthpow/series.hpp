#pragma once
#include <cstdint>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace nthpow {

// Truncated formal power series with exact integer coefficients.
// order() is the number of stored coefficients; arithmetic truncates results
// to the shorter operand.
class IntSeries {
 public:
  explicit IntSeries(std::vector<mpz_class> coeffs);
  static IntSeries one(int order);
  static IntSeries geometric(int order);  // 1/(1-x)

  int order() const { return static_cast<int>(c_.size()); }
  const mpz_class& operator[](int k) const { return c_[k]; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

 private:
  std::vector<mpz_class> c_;
};

// Truncated series with coefficients reduced into [0, modulus).
class ModSeries {
 public:
  ModSeries(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  static ModSeries one(std::uint64_t modulus, int order);

  std::uint64_t modulus() const { return m_; }
  int order() const { return static_cast<int>(c_.size()); }
  std::uint64_t operator[](int k) const { return c_[k]; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

 private:
  std::uint64_t m_;
  std::vector<std::uint64_t> c_;
};

IntSeries from_coeffs(const std::vector<long>& coeffs);

IntSeries add(const IntSeries& f, const IntSeries& g);
IntSeries sub(const IntSeries& f, const IntSeries& g);
IntSeries mul(const IntSeries& f, const IntSeries& g);
IntSeries inverse(const IntSeries& f);          // constant term must be +-1
IntSeries pow(const IntSeries& f, long e);      // e < 0 needs unit constant term
IntSeries substitute_xk(const IntSeries& f, int k);             // order grows
IntSeries substitute_xk(const IntSeries& f, int k, int order);  // fixed order
IntSeries scale_x(const IntSeries& f, const mpz_class& a);      // c_k -> a^k c_k
IntSeries truncate(const IntSeries& f, int order);
bool eq_to_order(const IntSeries& f, const IntSeries& g, int order);

ModSeries reduce_mod(const IntSeries& f, std::uint64_t m);
ModSeries add(const ModSeries& f, const ModSeries& g);
ModSeries sub(const ModSeries& f, const ModSeries& g);
ModSeries mul(const ModSeries& f, const ModSeries& g);
ModSeries pow(const ModSeries& f, long e);      // e >= 0
ModSeries substitute_xk(const ModSeries& f, int k, int order);
ModSeries truncate(const ModSeries& f, int order);

std::string to_string(const IntSeries& f);

}  // namespace nthpow
