#include "nthpow/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nthpow/roots.hpp"

namespace nthpow {
namespace {

#ifndef NTHPOW_DATA_DIR
#define NTHPOW_DATA_DIR "data"
#endif

constexpr std::uint8_t MUL4[4][4] = {
    {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

std::uint8_t gf_add(int q, std::uint8_t a, std::uint8_t b) {
  return q == 3 ? static_cast<std::uint8_t>((a + b) % 3)
                : static_cast<std::uint8_t>(a ^ b);
}

std::uint8_t gf_mul(int q, std::uint8_t a, std::uint8_t b) {
  if (q == 4) return MUL4[a][b];
  if (q == 3) return static_cast<std::uint8_t>(a * b % 3);
  return a & b;
}

std::uint8_t gf_inv(int q, std::uint8_t a) {
  if (a == 0) throw std::logic_error("inverse of zero");
  if (q == 4) return a == 1 ? 1 : (a == 2 ? 3 : 2);
  if (q == 3) return a;  // 1->1, 2->2
  return 1;
}

std::uint8_t gf_neg(int q, std::uint8_t a) {
  return q == 3 ? static_cast<std::uint8_t>((3 - a) % 3) : a;
}

int rank_of(int q, std::vector<std::vector<std::uint8_t>> rows, int n) {
  int r = 0;
  for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    std::uint8_t inv = gf_inv(q, rows[r][col]);
    for (int j = col; j < n; ++j) rows[r][j] = gf_mul(q, rows[r][j], inv);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        std::uint8_t f = gf_neg(q, rows[i][col]);
        for (int j = col; j < n; ++j)
          rows[i][j] = gf_add(q, rows[i][j], gf_mul(q, f, rows[r][j]));
      }
    ++r;
  }
  return r;
}

double work_bits(int q) { return q == 2 ? 1.0 : (q == 4 ? 2.0 : std::log2(3.0)); }

// GF(2) Gray-code codeword walk: one row XOR and one popcount per word.
// Supports n <= 128 (two 64-bit limbs).
std::vector<mpz_class> gray_histogram(const std::vector<std::vector<std::uint8_t>>& rows,
                                      int n) {
  int k = static_cast<int>(rows.size());
  if (n > 128) throw std::domain_error("bitset enumeration limited to n <= 128");
  if (k > 30) throw std::domain_error("enumeration work bound exceeded");
  std::vector<std::uint64_t> lo(k, 0), hi(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j]) (j < 64 ? lo[i] : hi[i]) |= 1ull << (j % 64);
  std::vector<std::uint64_t> cnt(n + 1, 0);
  cnt[0] = 1;
  std::uint64_t total = k ? (1ull << k) : 1;
  if (n <= 64) {
    std::uint64_t w = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      w ^= lo[__builtin_ctzll(i)];
      ++cnt[__builtin_popcountll(w)];
    }
  } else {
    std::uint64_t w0 = 0, w1 = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      int j = __builtin_ctzll(i);
      w0 ^= lo[j];
      w1 ^= hi[j];
      ++cnt[__builtin_popcountll(w0) + __builtin_popcountll(w1)];
    }
  }
  return std::vector<mpz_class>(cnt.begin(), cnt.end());
}

// Direct GF(3)/GF(4) enumeration: odometer over digit vectors, with the
// running word and its weight updated only on each stepped row's support.
std::vector<mpz_class> small_field_histogram(const LinearCode& c) {
  std::vector<std::uint64_t> cnt(c.n + 1, 0);
  std::vector<std::uint8_t> digit(c.k, 0);
  std::vector<std::uint8_t> word(c.n, 0);
  std::vector<std::vector<int>> support(c.k);
  // delta[i][s][idx]: add this at support position idx when digit i steps
  // from s to s+1, i.e. (s+1)*row - s*row restricted to the support.
  std::vector<std::vector<std::vector<std::uint8_t>>> delta(c.k);
  for (int i = 0; i < c.k; ++i) {
    for (int j = 0; j < c.n; ++j)
      if (c.gen[i][j]) support[i].push_back(j);
    delta[i].assign(c.q, {});
    for (int s = 0; s < c.q; ++s) {
      std::uint8_t s1 = static_cast<std::uint8_t>((s + 1) % c.q);
      for (int j : support[i]) {
        std::uint8_t lo = gf_mul(c.q, static_cast<std::uint8_t>(s), c.gen[i][j]);
        std::uint8_t hi = gf_mul(c.q, s1, c.gen[i][j]);
        delta[i][s].push_back(gf_add(c.q, hi, gf_neg(c.q, lo)));
      }
    }
  }
  int w = 0;
  for (;;) {
    ++cnt[w];
    int i = 0;
    while (i < c.k) {
      std::uint8_t old = digit[i];
      digit[i] = static_cast<std::uint8_t>((old + 1) % c.q);
      const auto& sup = support[i];
      const auto& d = delta[i][old];
      for (size_t idx = 0; idx < sup.size(); ++idx) {
        std::uint8_t& cell = word[sup[idx]];
        w -= cell != 0;
        cell = gf_add(c.q, cell, d[idx]);
        w += cell != 0;
      }
      if (digit[i] != 0) break;
      ++i;
    }
    if (i == c.k) break;
  }
  return std::vector<mpz_class>(cnt.begin(), cnt.end());
}

// GF(2) dual generator from RREF pivot structure.
std::vector<std::vector<std::uint8_t>> dual_generator_gf2(
    const LinearCode& c) {
  auto rows = c.gen;
  int n = c.n, k = c.k;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < k; ++col) {
    int piv = -1;
    for (int i = r; i < k; ++i)
      if (rows[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < k; ++i)
      if (i != r && rows[i][col])
        for (int j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
    pivot_col.push_back(col);
    ++r;
  }
  if (r != k) throw std::logic_error("generator rows not independent");
  std::vector<bool> is_pivot(n, false);
  for (int p : pivot_col) is_pivot[p] = true;
  std::vector<std::vector<std::uint8_t>> dual;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<std::uint8_t> w(n, 0);
    w[col] = 1;
    for (int i = 0; i < k; ++i) w[pivot_col[i]] = rows[i][col];
    dual.push_back(std::move(w));
  }
  return dual;
}

std::string data_dir() {
  if (const char* env = std::getenv("NTHPOW_DATA")) return env;
  return NTHPOW_DATA_DIR;
}

// Primitive polynomials for GF(2^m), low-bit = constant term.
unsigned primitive_poly(int m) {
  switch (m) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    default: throw std::domain_error("bch: m must be in 2..6");
  }
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.pass; });
}

LinearCode code_from_rows(int q, int n, std::vector<std::vector<std::uint8_t>> rows) {
  if (q != 2 && q != 3 && q != 4) throw std::domain_error("field size must be 2, 3, or 4");
  int k = static_cast<int>(rows.size());
  if (k > n) throw std::domain_error("code dimension exceeds length");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::domain_error("ragged generator row");
    for (auto d : row)
      if (d >= q) throw std::domain_error("generator digit out of field range");
  }
  LinearCode c{q, n, k, std::move(rows)};
  if (gf_rank(c) != k) throw std::domain_error("generator rows not independent");
  return c;
}

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  std::string line;
  std::vector<std::string> toks;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
  }
  if (toks.size() < 3) throw std::runtime_error("code file: missing q n k header: " + path);
  int q = std::stoi(toks[0]), n = std::stoi(toks[1]), k = std::stoi(toks[2]);
  if (static_cast<int>(toks.size()) != 3 + k)
    throw std::runtime_error("code file: expected " + std::to_string(k) + " rows: " + path);
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < k; ++i) {
    const std::string& r = toks[3 + i];
    if (static_cast<int>(r.size()) != n)
      throw std::runtime_error("code file: row length mismatch: " + path);
    std::vector<std::uint8_t> row(n);
    for (int j = 0; j < n; ++j) {
      if (r[j] < '0' || r[j] >= '0' + q)
        throw std::runtime_error("code file: bad digit: " + path);
      row[j] = static_cast<std::uint8_t>(r[j] - '0');
    }
    rows.push_back(std::move(row));
  }
  return code_from_rows(q, n, std::move(rows));
}

int gf_rank(const LinearCode& c) { return rank_of(c.q, c.gen, c.n); }

LinearCode rm_code(int r, int m) {
  if (m < 0 || m > 7 || r < 0 || r > m)
    throw std::domain_error("rm_code: need 0 <= r <= m <= 7");
  // rows(r, m) with r clamped to m; r < 0 yields the zero code.
  struct Rec {
    std::vector<std::vector<std::uint8_t>> operator()(int r, int m) const {
      if (r < 0) return {};
      if (m == 0) return {{1}};
      auto u = (*this)(std::min(r, m - 1), m - 1);
      auto v = (*this)(r - 1, m - 1);
      int half = 1 << (m - 1);
      std::vector<std::vector<std::uint8_t>> rows;
      for (auto& x : u) {
        std::vector<std::uint8_t> row(2 * half);
        std::copy(x.begin(), x.end(), row.begin());
        std::copy(x.begin(), x.end(), row.begin() + half);
        rows.push_back(std::move(row));
      }
      for (auto& x : v) {
        std::vector<std::uint8_t> row(2 * half, 0);
        std::copy(x.begin(), x.end(), row.begin() + half);
        rows.push_back(std::move(row));
      }
      return rows;
    }
  };
  return code_from_rows(2, 1 << m, Rec{}(r, m));
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
  if (std::min(c.k, c.n - c.k) * work_bits(c.q) > 30.0 + 1e-9)
    throw std::domain_error("enumeration work bound exceeded");
  if (c.k == 0) {
    std::vector<mpz_class> one(c.n + 1, mpz_class(0));
    one[0] = 1;
    return IntSeries(std::move(one));
  }
  if (c.q == 2) {
    if (c.k <= c.n - c.k || c.k <= 30)
      return IntSeries(gray_histogram(c.gen, c.n));
    WeightEnumerator wd = IntSeries(gray_histogram(dual_generator_gf2(c), c.n));
    return macwilliams(wd, c.n, c.n - c.k, 2);
  }
  if (c.k * work_bits(c.q) > 30.0 + 1e-9)
    throw std::domain_error("enumeration work bound exceeded");
  return IntSeries(small_field_histogram(c));
}

WeightEnumerator macwilliams(const WeightEnumerator& w, int n, int k, int q) {
  if (w.order() != n + 1) throw std::domain_error("macwilliams: enumerator order must be n+1");
  // (1-x)^j and (1+(q-1)x)^j tables, exact.
  std::vector<std::vector<mpz_class>> onemx(n + 1), onepx(n + 1);
  onemx[0] = {mpz_class(1)};
  onepx[0] = {mpz_class(1)};
  for (int j = 1; j <= n; ++j) {
    onemx[j].assign(j + 1, mpz_class(0));
    onepx[j].assign(j + 1, mpz_class(0));
    for (int i = 0; i < j; ++i) {
      onemx[j][i] += onemx[j - 1][i];
      onemx[j][i + 1] -= onemx[j - 1][i];
      onepx[j][i] += onepx[j - 1][i];
      onepx[j][i + 1] += (q - 1) * onepx[j - 1][i];
    }
  }
  std::vector<mpz_class> acc(n + 1, mpz_class(0));
  for (int j = 0; j <= n; ++j) {
    if (w[j] == 0) continue;
    for (int a = 0; a <= j; ++a) {
      if (onemx[j][a] == 0) continue;
      mpz_class f = w[j] * onemx[j][a];
      for (int b = 0; b + a <= n && b <= n - j; ++b)
        acc[a + b] += f * onepx[n - j][b];
    }
  }
  mpz_class qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;
  std::vector<mpz_class> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (acc[i] % qk != 0 || acc[i] < 0)
      throw std::domain_error("macwilliams: input is not a valid enumerator");
    out[i] = acc[i] / qk;
  }
  if (out[0] != 1) throw std::domain_error("macwilliams: input is not a valid enumerator");
  return IntSeries(std::move(out));
}

Report rm_congruence_check(int m_max) {
  if (m_max < 0 || m_max > 6) throw std::domain_error("rm_congruence_check: m_max must be <= 6");
  Report rep;
  std::vector<std::vector<WeightEnumerator>> W(m_max + 1);
  for (int m = 0; m <= m_max; ++m)
    for (int r = 0; r <= m; ++r)
      W[m].push_back(weight_enumerator(rm_code(r, m)));
  char buf[128];
  for (int m = 0; m <= m_max; ++m)
    for (int r = 0; r <= m; ++r) {
      std::uint64_t mod = 1ull << (r + 1);
      // (1 + x^{2^{m-r}})^{2^r}
      std::vector<mpz_class> base((1 << m) + 1, mpz_class(0));
      base[0] = 1;
      base[1 << (m - r)] = 1;
      IntSeries rhs = pow(IntSeries(std::move(base)), 1l << r);
      bool ok = reduce_mod(W[m][r], mod).coeffs() ==
                reduce_mod(truncate(rhs, (1 << m) + 1), mod).coeffs();
      std::snprintf(buf, sizeof buf, "W(%d,%d) == (1+x^%d)^%d mod %llu", r, m,
                    1 << (m - r), 1 << r, static_cast<unsigned long long>(mod));
      rep.lines.push_back({buf, ok});
    }
  for (int m1 = 1; m1 <= m_max; ++m1)  // m1 = m+1
    for (int r = 0; r <= m1; ++r) {
      std::uint64_t mod = 1ull << m1;
      const WeightEnumerator& A = W[m1][std::min(r, m1)];
      const WeightEnumerator& B = W[m1 - 1][std::min(r, m1 - 1)];
      IntSeries b2 = truncate(substitute_xk(B, 2), (1 << m1) + 1);
      bool ok = reduce_mod(A, mod).coeffs() == reduce_mod(b2, mod).coeffs();
      std::snprintf(buf, sizeof buf, "W(%d,%d)(x) == W(%d,%d)(x^2) mod %llu", r,
                    m1, r, m1 - 1, static_cast<unsigned long long>(mod));
      rep.lines.push_back({buf, ok});
    }
  for (int m = 0; m <= m_max; ++m)
    for (int r = 0; r <= m; ++r) {
      bool ok = is_nth_power(W[m][r], 1l << r).member;
      std::snprintf(buf, sizeof buf, "W(%d,%d) in P_%d", r, m, 1 << r);
      rep.lines.push_back({buf, ok});
    }
  return rep;
}

Report rm_2adic_limit_check(int r, long lam_num, long lam_den, int m_max) {
  if (r < 0 || r > 3 || m_max > 6 || m_max < r)
    throw std::domain_error("rm_2adic_limit_check: need 0 <= r <= 3, r <= m_max <= 6");
  if (lam_den <= 0 || lam_num <= 0 || (lam_den & (lam_den - 1)))
    throw std::domain_error("rm_2adic_limit_check: lambda must be a positive dyadic rational");
  Report rep;
  char buf[160];
  std::vector<int> ms;
  std::vector<mpz_class> fs;
  for (int m = r; m <= m_max; ++m) {
    long num = lam_num << m;
    if (num % lam_den) continue;  // weight not integral at this m
    long wt = num / lam_den;
    if (wt > (1l << m)) continue;
    WeightEnumerator W = weight_enumerator(rm_code(r, m));
    ms.push_back(m);
    fs.push_back(W[wt]);
  }
  for (size_t i = 1; i < ms.size(); ++i) {
    mpz_class mod = mpz_class(1) << (ms[i - 1] + 1);
    bool ok = (fs[i] - fs[i - 1]) % mod == 0;
    std::snprintf(buf, sizeof buf, "f(%d,%d) == f(%d,%d) mod 2^%d", r, ms[i], r,
                  ms[i - 1], ms[i - 1] + 1);
    rep.lines.push_back({buf, ok});
  }
  if (lam_num == 1 && lam_den == (1l << r)) {
    mpz_class prod = 1;
    for (int i = 1; i <= r; ++i) prod *= 1 - (mpz_class(1) << i);
    for (size_t i = 0; i < ms.size(); ++i) {
      mpz_class mod = mpz_class(1) << (ms[i] + 1);
      bool ok = (fs[i] * prod - (mpz_class(1) << r)) % mod == 0;
      std::snprintf(buf, sizeof buf,
                    "f(%d,%d) matches 2^%d/prod(1-2^i) mod 2^%d", r, ms[i], r,
                    ms[i] + 1);
      rep.lines.push_back({buf, ok});
    }
  }
  return rep;
}

LinearCode bch_extended(int m, int t) {
  unsigned poly = primitive_poly(m);
  int n0 = (1 << m) - 1;
  if (t < 1 || 2 * t - 1 >= n0)
    throw std::domain_error("bch_extended: need 1 <= 2t-1 < 2^m - 1");
  // exp/log tables for GF(2^m)
  std::vector<int> expt(2 * n0), logt(n0 + 1, -1);
  int v = 1;
  for (int i = 0; i < n0; ++i) {
    expt[i] = v;
    logt[v] = i;
    v <<= 1;
    if (v > n0) v ^= static_cast<int>(poly);
  }
  for (int i = 0; i < n0; ++i) expt[n0 + i] = expt[i];
  auto gmul = [&](int a, int b) {
    return (a && b) ? expt[logt[a] + logt[b]] : 0;
  };
  // union of cyclotomic cosets of 1..2t-2; one minimal polynomial each
  std::vector<bool> seen(n0, false);
  std::vector<std::uint8_t> g{1};  // generator polynomial over GF(2)
  for (int e = 1; e <= 2 * t - 2; ++e) {
    int e0 = e % n0;
    if (seen[e0]) continue;
    std::vector<int> coset;
    int x = e0;
    do {
      seen[x] = true;
      coset.push_back(x);
      x = 2 * x % n0;
    } while (x != e0);
    // minimal polynomial prod_{j in coset} (X + alpha^j), computed in GF(2^m)
    std::vector<int> mp{1};
    for (int j : coset) {
      std::vector<int> nx(mp.size() + 1, 0);
      int aj = expt[j];
      for (size_t i = 0; i < mp.size(); ++i) {
        nx[i + 1] ^= mp[i];
        nx[i] ^= gmul(aj, mp[i]);
      }
      mp = std::move(nx);
    }
    std::vector<std::uint8_t> mp2(mp.size());
    for (size_t i = 0; i < mp.size(); ++i) {
      if (mp[i] > 1) throw std::logic_error("minimal polynomial not over GF(2)");
      mp2[i] = static_cast<std::uint8_t>(mp[i]);
    }
    std::vector<std::uint8_t> ng(g.size() + mp2.size() - 1, 0);
    for (size_t a = 0; a < g.size(); ++a)
      if (g[a])
        for (size_t b = 0; b < mp2.size(); ++b) ng[a + b] ^= mp2[b];
    g = std::move(ng);
  }
  int deg = static_cast<int>(g.size()) - 1;
  if (deg >= n0) throw std::domain_error("bch_extended: designed distance too large");
  int k = n0 - deg;
  std::vector<std::vector<std::uint8_t>> rows(k, std::vector<std::uint8_t>(n0 + 1, 0));
  for (int i = 0; i < k; ++i) {
    int parity = 0;
    for (int j = 0; j <= deg; ++j) {
      rows[i][i + j] = g[j];
      parity ^= g[j];
    }
    rows[i][n0] = static_cast<std::uint8_t>(parity);
  }
  return code_from_rows(2, n0 + 1, std::move(rows));
}

Report bch_conjecture_check(int m_max) {
  if (m_max < 2 || m_max > 6)
    throw std::domain_error("bch_conjecture_check: m_max must be in 2..6");
  Report rep;
  char buf[128];
  for (int m = 2; m <= m_max; ++m) {
    int n0 = (1 << m) - 1;
    for (int t = 1; 2 * t - 1 < n0; ++t) {
      LinearCode c = bch_extended(m, t);
      WeightEnumerator w = weight_enumerator(c);
      long dprime = 1;
      while (dprime < 2 * t) dprime <<= 1;
      if (dprime > (1 << m)) dprime = 1 << m;
      long nn = (1 << m) / dprime;
      bool ok = is_nth_power(w, nn).member;
      std::snprintf(buf, sizeof buf, "extended BCH m=%d t=%d [%d,%d] in P_%ld",
                    m, t, c.n, c.k, nn);
      rep.lines.push_back({buf, ok});
    }
  }
  return rep;
}

std::map<std::string, WeightEnumerator> fixture_enumerators() {
  std::map<std::string, WeightEnumerator> out;
  {
    std::vector<mpz_class> g(25, mpz_class(0));
    g[0] = 1;
    g[8] = 759;
    g[12] = 2576;
    g[16] = 759;
    g[24] = 1;
    out.emplace("golay", IntSeries(std::move(g)));
  }
  {
    std::vector<mpz_class> rr(49, mpz_class(0));
    const std::pair<int, long> terms[] = {
        {0, 1},          {8, 7530},       {10, 92160},     {12, 1080384},
        {14, 7342080},   {16, 34408911},  {18, 111507456}, {20, 255566784},
        {22, 417404928}, {24, 492663180}, {26, 417404928}, {28, 255566784},
        {30, 111507456}, {32, 34408911},  {34, 7342080},   {36, 1080384},
        {38, 92160},     {40, 7530},      {48, 1}};
    for (auto [i, v] : terms) rr[i] = v;
    out.emplace("rao_reddy", IntSeries(std::move(rr)));
  }
  out.emplace("s18", weight_enumerator(load_code(data_dir() + "/s18.code")));
  out.emplace("golay3", weight_enumerator(load_code(data_dir() + "/golay3.code")));
  return out;
}

}  // namespace nthpow
