#include "nthpow/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nthpow {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

IntSeries::IntSeries(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("IntSeries: empty coefficient list");
}

IntSeries IntSeries::one(int order) {
  std::vector<mpz_class> c(order);
  c[0] = 1;
  return IntSeries(std::move(c));
}

IntSeries IntSeries::geometric(int order) {
  std::vector<mpz_class> c(order, mpz_class(1));
  return IntSeries(std::move(c));
}

IntSeries from_coeffs(const std::vector<long>& coeffs) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return IntSeries(std::move(c));
}

IntSeries add(const IntSeries& f, const IntSeries& g) {
  int n = std::min(f.order(), g.order());
  std::vector<mpz_class> c(n);
  for (int i = 0; i < n; ++i) c[i] = f[i] + g[i];
  return IntSeries(std::move(c));
}

IntSeries sub(const IntSeries& f, const IntSeries& g) {
  int n = std::min(f.order(), g.order());
  std::vector<mpz_class> c(n);
  for (int i = 0; i < n; ++i) c[i] = f[i] - g[i];
  return IntSeries(std::move(c));
}

IntSeries mul(const IntSeries& f, const IntSeries& g) {
  int n = std::min(f.order(), g.order());
  std::vector<mpz_class> c(n);
  for (int i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (g[j] != 0) c[i + j] += f[i] * g[j];
    }
  }
  return IntSeries(std::move(c));
}

IntSeries inverse(const IntSeries& f) {
  if (f[0] != 1 && f[0] != -1)
    throw std::domain_error("inverse: constant term must be +-1");
  int n = f.order();
  std::vector<mpz_class> c(n);
  c[0] = f[0];  // self-inverse unit
  for (int k = 1; k < n; ++k) {
    mpz_class s = 0;
    for (int j = 1; j <= k; ++j) s += f[j] * c[k - j];
    c[k] = -f[0] * s;
  }
  return IntSeries(std::move(c));
}

IntSeries pow(const IntSeries& f, long e) {
  if (e < 0) return pow(inverse(f), -e);
  IntSeries r = IntSeries::one(f.order());
  IntSeries b = f;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

IntSeries substitute_xk(const IntSeries& f, int k) {
  if (k < 1) throw std::domain_error("substitute_xk: k must be >= 1");
  return substitute_xk(f, k, k * (f.order() - 1) + 1);
}

IntSeries substitute_xk(const IntSeries& f, int k, int order) {
  if (k < 1) throw std::domain_error("substitute_xk: k must be >= 1");
  std::vector<mpz_class> c(order);
  for (int i = 0; i < f.order() && static_cast<long>(i) * k < order; ++i)
    c[static_cast<long>(i) * k] = f[i];
  return IntSeries(std::move(c));
}

IntSeries scale_x(const IntSeries& f, const mpz_class& a) {
  std::vector<mpz_class> c(f.order());
  mpz_class ak = 1;
  for (int i = 0; i < f.order(); ++i) {
    c[i] = ak * f[i];
    ak *= a;
  }
  return IntSeries(std::move(c));
}

IntSeries truncate(const IntSeries& f, int order) {
  std::vector<mpz_class> c(f.coeffs().begin(),
                           f.coeffs().begin() + std::min(order, f.order()));
  c.resize(order);
  return IntSeries(std::move(c));
}

bool eq_to_order(const IntSeries& f, const IntSeries& g, int order) {
  if (order > f.order() || order > g.order()) return false;
  for (int i = 0; i < order; ++i)
    if (f[i] != g[i]) return false;
  return true;
}

ModSeries::ModSeries(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : m_(modulus), c_(std::move(coeffs)) {
  if (m_ < 2) throw std::invalid_argument("ModSeries: modulus must be >= 2");
  if (c_.empty()) throw std::invalid_argument("ModSeries: empty coefficient list");
  for (auto& v : c_) v %= m_;
}

ModSeries ModSeries::one(std::uint64_t modulus, int order) {
  std::vector<std::uint64_t> c(order, 0);
  c[0] = 1;
  return ModSeries(modulus, std::move(c));
}

ModSeries reduce_mod(const IntSeries& f, std::uint64_t m) {
  if (m < 2) throw std::domain_error("reduce_mod: modulus must be >= 2");
  std::vector<std::uint64_t> c(f.order());
  mpz_class r;
  for (int i = 0; i < f.order(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), m);
    c[i] = r.get_ui();
  }
  return ModSeries(m, std::move(c));
}

namespace {
std::uint64_t common_mod(const ModSeries& f, const ModSeries& g) {
  if (f.modulus() != g.modulus())
    throw std::invalid_argument("ModSeries: modulus mismatch");
  return f.modulus();
}
}  // namespace

ModSeries add(const ModSeries& f, const ModSeries& g) {
  std::uint64_t m = common_mod(f, g);
  int n = std::min(f.order(), g.order());
  std::vector<std::uint64_t> c(n);
  for (int i = 0; i < n; ++i) c[i] = (f[i] + g[i]) % m;
  return ModSeries(m, std::move(c));
}

ModSeries sub(const ModSeries& f, const ModSeries& g) {
  std::uint64_t m = common_mod(f, g);
  int n = std::min(f.order(), g.order());
  std::vector<std::uint64_t> c(n);
  for (int i = 0; i < n; ++i) c[i] = (f[i] + m - g[i]) % m;
  return ModSeries(m, std::move(c));
}

ModSeries mul(const ModSeries& f, const ModSeries& g) {
  std::uint64_t m = common_mod(f, g);
  int n = std::min(f.order(), g.order());
  std::vector<std::uint64_t> c(n, 0);
  for (int i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (g[j]) c[i + j] = (c[i + j] + mulmod(f[i], g[j], m)) % m;
    }
  }
  return ModSeries(m, std::move(c));
}

ModSeries pow(const ModSeries& f, long e) {
  if (e < 0) throw std::domain_error("ModSeries pow: negative exponent");
  ModSeries r = ModSeries::one(f.modulus(), f.order());
  ModSeries b = f;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

ModSeries substitute_xk(const ModSeries& f, int k, int order) {
  if (k < 1) throw std::domain_error("substitute_xk: k must be >= 1");
  std::vector<std::uint64_t> c(order, 0);
  for (int i = 0; i < f.order() && static_cast<long>(i) * k < order; ++i)
    c[static_cast<long>(i) * k] = f[i];
  return ModSeries(f.modulus(), std::move(c));
}

ModSeries truncate(const ModSeries& f, int order) {
  std::vector<std::uint64_t> c(f.coeffs().begin(),
                               f.coeffs().begin() + std::min(order, f.order()));
  c.resize(order, 0);
  return ModSeries(f.modulus(), std::move(c));
}

std::string to_string(const IntSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < f.order(); ++i) {
    if (f[i] == 0 && !(i == 0 && f.order() == 1)) continue;
    if (!first) os << (f[i] >= 0 ? " + " : " - ");
    else if (f[i] < 0) os << "-";
    mpz_class a = abs(f[i]);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nthpow
