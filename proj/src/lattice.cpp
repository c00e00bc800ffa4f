#include "nthpow/lattice.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nthpow {
namespace {

#ifndef NTHPOW_DATA_DIR
#define NTHPOW_DATA_DIR "data"
#endif

// Exact-rational LDL of a symmetric matrix: Q(v) = sum_i diag[i] *
// (v_i + sum_{j>i} upper[i][j] v_j)^2.  Throws unless positive definite.
struct Ldl {
  std::vector<mpq_class> diag;
  std::vector<std::vector<mpq_class>> upper;
  mpq_class det;
};

Ldl ldl_decompose(const GramMatrix& g) {
  int d = g.d;
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = static_cast<long>(g.entries[i][j]);
  Ldl out;
  out.diag.resize(d);
  out.upper.assign(d, std::vector<mpq_class>(d, mpq_class(0)));
  out.det = 1;
  for (int i = 0; i < d; ++i) {
    if (a[i][i] <= 0) throw std::domain_error("gram matrix not positive definite");
    out.diag[i] = a[i][i];
    out.det *= a[i][i];
    for (int j = i + 1; j < d; ++j) out.upper[i][j] = a[i][j] / a[i][i];
    for (int r = i + 1; r < d; ++r)
      for (int c = r; c < d; ++c) {
        a[r][c] -= a[r][i] * out.upper[i][c];
        if (c != r) a[c][r] = a[r][c];
      }
  }
  return out;
}

long long floordiv(long long p, long long q) {
  return p >= 0 ? p / q : -((-p + q - 1) / q);
}

long long isqrt64(long long v) {
  if (v < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Depth-first short-vector enumeration on the integer-scaled LDL form:
// with L = lcm of the LDL denominators, L^3 * Q(v) = sum_i A[i] * (L v_i +
// ctil_i)^2 where A[i] = L diag[i] and ctil_i = sum_{j>i} N[i][j] v_j with
// N[i][j] = L upper[i][j]: all integers, so bounds and norms are exact.
struct Enumerator {
  int d;
  long long L, L3, budget;
  std::vector<long long> A;
  std::vector<std::vector<long long>> N;
  std::vector<long long> x;
  std::vector<mpz_class> hist;

  void run(int max_norm) {
    hist.assign(max_norm + 1, mpz_class(0));
    x.assign(d, 0);
    dfs(d - 1, budget, true);
  }

  void dfs(int i, long long rem, bool zero_prefix) {
    if (i < 0) {
      long long used = budget - rem;
      if (used % L3) throw std::logic_error("non-integral norm in enumeration");
      hist[used / L3] += zero_prefix ? 1 : 2;
      return;
    }
    long long ctil = 0;
    for (int j = i + 1; j < d; ++j) ctil += N[i][j] * x[j];
    long long s = isqrt64(rem / A[i]);
    long long lo = -floordiv(s + ctil, L);
    long long hi = floordiv(s - ctil, L);
    if (zero_prefix && lo < 0) lo = 0;
    for (long long v = lo; v <= hi; ++v) {
      long long t = L * v + ctil;
      long long term = A[i] * t * t;
      if (term > rem) continue;
      x[i] = v;
      dfs(i - 1, rem - term, zero_prefix && v == 0);
    }
    x[i] = 0;
  }
};

mpz_class lcm_with(const mpz_class& a, const mpz_class& b) {
  mpz_class g = gcd(a, b);
  return a / g * b;
}

void check_square(const GramMatrix& g) {
  int d = g.d;
  if (d <= 0 || static_cast<int>(g.entries.size()) != d)
    throw std::domain_error("gram matrix: bad dimension");
  for (const auto& row : g.entries)
    if (static_cast<int>(row.size()) != d)
      throw std::domain_error("gram matrix: ragged rows");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (g.entries[i][j] != g.entries[j][i])
        throw std::domain_error("gram matrix not symmetric");
}

IntSeries scale(const IntSeries& f, const mpz_class& k) {
  std::vector<mpz_class> c(f.order());
  for (int i = 0; i < f.order(); ++i) c[i] = k * f[i];
  return IntSeries(std::move(c));
}

IntSeries div_exact_ui(const IntSeries& f, unsigned long k) {
  std::vector<mpz_class> c(f.order());
  for (int i = 0; i < f.order(); ++i) {
    if (f[i] % k != 0) throw std::logic_error("inexact coefficient division");
    c[i] = f[i] / k;
  }
  return IntSeries(std::move(c));
}

// theta_3(x^s) = 1 + 2 sum_k x^{s k^2}, truncated.
IntSeries theta3_sub(int s, int order) {
  std::vector<mpz_class> c(order, mpz_class(0));
  c[0] = 1;
  for (long long k = 1; s * k * k < order; ++k) c[s * k * k] = 2;
  return IntSeries(std::move(c));
}

IntSeries theta4_sub(int s, int order) {
  std::vector<mpz_class> c(order, mpz_class(0));
  c[0] = 1;
  for (long long k = 1; s * k * k < order; ++k) c[s * k * k] = (k % 2) ? -2 : 2;
  return IntSeries(std::move(c));
}

// 2(x + x^9 + x^25 + ...): the odd-index theta constant.
IntSeries theta2_odd(int order) {
  std::vector<mpz_class> c(order, mpz_class(0));
  for (long long k = 1; k * k < order; k += 2) c[k * k] = 2;
  return IntSeries(std::move(c));
}

// prod_{m : 2m < order} (1 - x^{2m})^24, the Delta product without the
// leading x^2.
IntSeries delta_product(int order) {
  std::vector<mpz_class> c(order, mpz_class(0));
  c[0] = 1;
  for (int m = 1; 2 * m < order; ++m)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = order - 1; i >= 2 * m; --i) c[i] -= c[i - 2 * m];
  return IntSeries(std::move(c));
}

const std::map<std::string, std::pair<std::string, mpz_class>>& fixture_table() {
  static const std::map<std::string, std::pair<std::string, mpz_class>> t = {
      {"A2", {"a2.gram", mpz_class(3)}},
      {"D4", {"d4.gram", mpz_class(4)}},
      {"E6", {"e6.gram", mpz_class(3)}},
      {"E6dual", {"e6dual.gram", mpz_class(243)}},
      {"E8", {"e8.gram", mpz_class(1)}},
      {"K12", {"k12.gram", mpz_class(729)}},
      {"BW16", {"bw16.gram", mpz_class(1) << 24}},
  };
  return t;
}

std::string data_dir() {
  if (const char* env = std::getenv("NTHPOW_DATA")) return env;
  return NTHPOW_DATA_DIR;
}

}  // namespace

GramMatrix gram_from_entries(std::vector<std::vector<long long>> rows) {
  GramMatrix g{static_cast<int>(rows.size()), std::move(rows)};
  check_square(g);
  ldl_decompose(g);  // validates positive definiteness
  return g;
}

GramMatrix load_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gram file: " + path);
  std::string line, cleaned;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    cleaned += line + ' ';
  }
  std::istringstream ss(cleaned);
  int d;
  if (!(ss >> d) || d < 1 || d > 64)
    throw std::runtime_error("gram file: bad dimension: " + path);
  std::vector<std::vector<long long>> rows(d, std::vector<long long>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!(ss >> rows[i][j]))
        throw std::runtime_error("gram file: expected " + std::to_string(d * d) +
                                 " entries: " + path);
  return gram_from_entries(std::move(rows));
}

mpz_class gram_determinant(const GramMatrix& g) {
  check_square(g);
  mpq_class det = ldl_decompose(g).det;
  if (det.get_den() != 1) throw std::logic_error("integral gram has integral determinant");
  return det.get_num();
}

ThetaSeries theta_from_gram(const GramMatrix& g, int max_norm) {
  check_square(g);
  if (max_norm < 0) throw std::domain_error("theta_from_gram: max_norm must be >= 0");
  Ldl ldl = ldl_decompose(g);
  int d = g.d;
  mpz_class lm = 1;
  for (int i = 0; i < d; ++i) {
    lm = lcm_with(lm, ldl.diag[i].get_den());
    for (int j = i + 1; j < d; ++j) lm = lcm_with(lm, ldl.upper[i][j].get_den());
  }
  if (!lm.fits_slong_p()) throw std::logic_error("LDL denominator overflow");
  Enumerator e;
  e.d = d;
  e.L = lm.get_si();
  e.L3 = e.L * e.L * e.L;
  e.budget = e.L3 * max_norm;
  e.A.resize(d);
  e.N.assign(d, std::vector<long long>(d, 0));
  mpq_class lq(lm);
  for (int i = 0; i < d; ++i) {
    mpq_class ai = ldl.diag[i] * lq;
    if (ai.get_den() != 1) throw std::logic_error("LDL scaling failed");
    e.A[i] = mpz_class(ai.get_num()).get_si();
    for (int j = i + 1; j < d; ++j) {
      mpq_class nij = ldl.upper[i][j] * lq;
      if (nij.get_den() != 1) throw std::logic_error("LDL scaling failed");
      e.N[i][j] = mpz_class(nij.get_num()).get_si();
    }
  }
  e.run(max_norm);
  return IntSeries(std::move(e.hist));
}

ThetaSeries psi_series(int order) {
  if (order < 1) throw std::domain_error("psi_series: order must be >= 1");
  std::vector<mpz_class> c(order, mpz_class(0));
  c[0] = 1;
  std::vector<mpz_class> s3(order / 2 + 1, mpz_class(0));
  for (long dv = 1; 2 * dv < order; ++dv)
    for (long m = dv; 2 * m < order; m += dv) s3[m] += mpz_class(dv) * dv * dv;
  for (int m = 1; 2 * m < order; ++m) c[2 * m] = 240 * s3[m];
  return IntSeries(std::move(c));
}

IntSeries delta_series(int order) {
  if (order < 3) throw std::domain_error("delta_series: order must be >= 3");
  IntSeries p = delta_product(order);
  std::vector<mpz_class> c(order, mpz_class(0));
  for (int i = 2; i < order; ++i) c[i] = p[i - 2];
  return IntSeries(std::move(c));
}

std::vector<mpz_class> extremal_coefficients(int d) {
  if (d <= 0 || d % 8) throw std::domain_error("extremal_theta: d must be a positive multiple of 8");
  int t = d / 8, a = t / 3;
  int order = 2 * a + 2;
  IntSeries psi = psi_series(order);
  IntSeries dp = delta_product(order);  // Delta = x^2 * dp
  std::vector<mpz_class> c{mpz_class(1)};
  // S accumulates sum_j c_j psi^{t-3j} Delta^j; basis j has leading x^{2j},
  // so c_j = -S[2j] kills the x^{2j} coefficient in turn.
  std::vector<mpz_class> S = pow(psi, t).coeffs();
  for (int j = 1; j <= a; ++j) {
    c.push_back(-S[2 * j]);
    IntSeries basis = mul(pow(psi, t - 3 * j), pow(dp, j));
    for (int i = 2 * j; i < order; ++i) S[i] += c[j] * basis[i - 2 * j];
  }
  return c;
}

ThetaSeries extremal_theta(int d, int order) {
  std::vector<mpz_class> c = extremal_coefficients(d);
  int t = d / 8;
  IntSeries psi = psi_series(order);
  IntSeries dp = delta_product(order);
  std::vector<mpz_class> acc(order, mpz_class(0));
  for (size_t j = 0; j < c.size(); ++j) {
    IntSeries basis = mul(pow(psi, t - 3 * static_cast<int>(j)),
                          pow(dp, static_cast<int>(j)));
    for (int i = 2 * static_cast<int>(j); i < order; ++i)
      acc[i] += c[j] * basis[i - 2 * j];
  }
  return IntSeries(std::move(acc));
}

IntSeries j_times_x(int order) {
  if (order < 1) throw std::domain_error("j_times_x: order must be >= 1");
  IntSeries psi = psi_series(order);
  return mul(pow(psi, 3), inverse(delta_product(order)));
}

ThetaSeries zd_theta(int d, int order) {
  if (d < 1) throw std::domain_error("zd_theta: d must be >= 1");
  return pow(theta3_sub(1, order), d);
}

GramMatrix builtin_lattice(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'Z') {
    int d = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(name[i]))) { d = -1; break; }
      d = d * 10 + (name[i] - '0');
    }
    if (d < 1 || d > 24)
      throw std::domain_error("builtin_lattice: Z<d> requires 1 <= d <= 24");
    std::vector<std::vector<long long>> id(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i) id[i][i] = 1;
    return gram_from_entries(std::move(id));
  }
  auto it = fixture_table().find(name);
  if (it == fixture_table().end())
    throw std::domain_error("builtin_lattice: unknown name: " + name);
  GramMatrix g = load_gram(data_dir() + "/" + it->second.first);
  if (gram_determinant(g) != it->second.second)
    throw std::logic_error("fixture " + name + " has unexpected determinant");
  return g;
}

ThetaSeries bw_theta(int m, int order) {
  if (m < 1 || m > 4) throw std::domain_error("bw_theta: m must be in 1..4");
  if (order < 1) throw std::domain_error("bw_theta: order must be >= 1");
  switch (m) {
    case 1: return theta_from_gram(builtin_lattice("Z2"), order - 1);
    case 2: return theta_from_gram(builtin_lattice("D4"), order - 1);
    case 3: {
      IntSeries base = theta_from_gram(builtin_lattice("E8"), order / 2);
      return truncate(substitute_xk(base, 2), order);
    }
    default: {
      // The fixture is the sqrt2-scaled lattice; halving its Gram matrix
      // recovers the unscaled one, whose theta is substituted at x^2.
      GramMatrix g = builtin_lattice("BW16");
      for (auto& row : g.entries)
        for (auto& v : row) {
          if (v % 2) throw std::logic_error("scaled BW16 fixture must have even entries");
          v /= 2;
        }
      IntSeries base = theta_from_gram(g, order / 2);
      return truncate(substitute_xk(base, 2), order);
    }
  }
}

ThetaSeries bw16_theta_closed(int order) {
  IntSeries t3 = theta3_sub(4, order);
  IntSeries t4 = theta4_sub(4, order);
  IntSeries t2 = theta2_odd(order);
  IntSeries even_half = div_exact_ui(add(pow(t3, 16), pow(t4, 16)), 2);
  IntSeries mid = scale(mul(pow(t2, 8), pow(t3, 8)), 15);
  IntSeries odd_half = div_exact_ui(pow(t2, 16), 2);
  return add(add(even_half, mid), odd_half);
}

bool bw_congruence_check(int m, int order) {
  if (m < 2 || m > 4) throw std::domain_error("bw_congruence_check: m must be in 2..4");
  IntSeries A = bw_theta(m, order);
  IntSeries B2 = truncate(substitute_xk(bw_theta(m - 1, order / 2 + 1), 2), order);
  mpz_class big = mpz_class(1) << (m + 1);   // 2^{m+1}
  mpz_class mid = mpz_class(1) << m;         // 2^m
  mpz_class scale = 1 - (mpz_class(1) << (m - 1));
  for (int i = 1; i < order; ++i) {
    if (A[i] % big != 0) return false;        // theta == 1 mod 2^{m+1}
    if (B2[i] % mid != 0) return false;
    mpz_class lhs = A[i] / big;
    mpz_class rhs = scale * (B2[i] / mid);
    if ((lhs - rhs) % mid != 0) return false;
  }
  return true;
}

bool kissing_2adic_check(int max_m) {
  if (max_m < 1 || max_m > 4) throw std::domain_error("kissing_2adic_check: max_m must be in 1..4");
  std::vector<mpz_class> v;
  for (int m = 1; m <= max_m; ++m) {
    int minim = 1 << (m - 1);
    IntSeries th = bw_theta(m, minim + 1);
    mpz_class kiss = th[minim];
    mpz_class sc = mpz_class(1) << (m + 1);
    if (kiss % sc != 0) return false;
    v.push_back(kiss / sc);
    mpz_class prod = 1;
    for (int i = 1; i <= m; ++i) prod *= 1 + (mpz_class(1) << i);
    mpz_class mm = mpz_class(1) << m;
    if ((v.back() - prod) % mm != 0) return false;
    if (m >= 2 && (v[m - 1] - v[m - 2]) % (mm / 2) != 0) return false;
  }
  return true;
}

}  // namespace nthpow
