#include "nthpow/roots.hpp"

#include <numeric>
#include <stdexcept>

#include "nthpow/padic.hpp"

namespace nthpow {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

// Binomial triangle rows 0..n, reduced mod m (m = 0 keeps exact values).
std::vector<std::vector<mpz_class>> binomials(int n) {
  std::vector<std::vector<mpz_class>> c(n + 1);
  for (int j = 0; j <= n; ++j) {
    c[j].resize(j + 1);
    c[j][0] = 1;
    for (int r = 1; r <= j; ++r)
      c[j][r] = c[j - 1][r - 1] + (r < j ? c[j - 1][r] : mpz_class(0));
  }
  return c;
}

// Root digit extraction over exact integers.  Maintains Q[j] = g^j to the
// full order; appending digit v at index k folds (g + v x^k)^j - g^j into
// each power, descending j so lower powers are still the old ones.
struct ExactTracker {
  long n;
  int N;
  std::vector<std::vector<mpz_class>> Q;
  std::vector<std::vector<mpz_class>> C;

  ExactTracker(long n_, int N_) : n(n_), N(N_), Q(n_ + 1), C(binomials(n_)) {
    for (auto& row : Q) {
      row.assign(N, mpz_class(0));
      row[0] = 1;
    }
  }
  const mpz_class& phi(int k) const { return Q[n][k]; }
  void append(const mpz_class& v, int k) {
    if (v == 0) return;
    std::vector<mpz_class> vp(N / k + 1);
    vp[0] = 1;
    for (size_t r = 1; r < vp.size(); ++r) vp[r] = vp[r - 1] * v;
    for (long j = n; j >= 1; --j) {
      for (int i = N - 1; i >= k; --i) {
        mpz_class acc = Q[j][i];
        for (long r = 1; r <= j && r * k <= i; ++r)
          acc += C[j][r] * vp[r] * Q[j - r][i - r * k];
        Q[j][i] = acc;
      }
    }
  }
};

// Same recursion with all arithmetic in Z/mZ.
struct ModTracker {
  long n;
  int N;
  std::uint64_t m;
  std::vector<std::vector<std::uint64_t>> Q;
  std::vector<std::vector<std::uint64_t>> C;

  ModTracker(long n_, int N_, std::uint64_t m_)
      : n(n_), N(N_), m(m_), Q(n_ + 1), C(n_ + 1) {
    for (auto& row : Q) {
      row.assign(N, 0);
      row[0] = 1 % m;
    }
    auto exact = binomials(n);
    for (long j = 0; j <= n; ++j) {
      C[j].resize(j + 1);
      for (long r = 0; r <= j; ++r) {
        mpz_class red;
        mpz_fdiv_r_ui(red.get_mpz_t(), exact[j][r].get_mpz_t(), m);
        C[j][r] = red.get_ui();
      }
    }
  }
  std::uint64_t phi(int k) const { return Q[n][k]; }
  void append(std::uint64_t v, int k) {
    v %= m;
    if (v == 0) return;
    std::vector<std::uint64_t> vp(N / k + 1);
    vp[0] = 1;
    for (size_t r = 1; r < vp.size(); ++r) vp[r] = mulmod(vp[r - 1], v, m);
    for (long j = n; j >= 1; --j) {
      for (int i = N - 1; i >= k; --i) {
        std::uint64_t acc = Q[j][i];
        for (long r = 1; r <= j && r * k <= i; ++r)
          acc = (acc + mulmod(mulmod(C[j][r], vp[r], m), Q[j - r][i - r * k], m)) % m;
        Q[j][i] = acc;
      }
    }
  }
};

void require_constant_one(const IntSeries& f) {
  if (f[0] != 1)
    throw std::domain_error("series must have constant term 1");
}

// Mod-path verdict: digits in [0, mu(n)/n), or the first index where the
// digit congruence n*g == f_k - phi (mod mu(n)) has no solution.
struct ModRun {
  bool member;
  int fail_index;
  std::vector<std::uint64_t> digits;  // canonical residues mod mu(n)/n
};

ModRun run_mod(const IntSeries& f, long n) {
  std::uint64_t m = mu(n);
  int N = f.order();
  ModTracker t(n, N, m);
  ModSeries fb = reduce_mod(f, m);
  ModRun out{true, -1, std::vector<std::uint64_t>(N, 0)};
  out.digits[0] = 1 % (m / n);
  for (int k = 1; k < N; ++k) {
    std::uint64_t d = (fb[k] + m - t.phi(k)) % m;
    if (d % n) {
      out.member = false;
      out.fail_index = k;
      out.digits.resize(k);
      return out;
    }
    std::uint64_t g = d / n;
    out.digits[k] = g;
    t.append(g, k);
  }
  return out;
}

}  // namespace

MembershipVerdict nth_root(const IntSeries& f, long n) {
  require_constant_one(f);
  if (n < 1) throw std::domain_error("nth_root: n must be >= 1");
  int N = f.order();
  if (n == 1) return {true, N, f, std::nullopt};
  ExactTracker t(n, N);
  std::vector<mpz_class> g(N);
  g[0] = 1;
  for (int k = 1; k < N; ++k) {
    mpz_class d = f[k] - t.phi(k);
    if (d % n != 0)
      return {false, N, std::nullopt, k};
    g[k] = d / n;
    t.append(g[k], k);
  }
  return {true, N, IntSeries(std::move(g)), std::nullopt};
}

MembershipVerdict is_nth_power(const IntSeries& f, long n, PowerPath path) {
  require_constant_one(f);
  if (n < 1) throw std::domain_error("is_nth_power: n must be >= 1");
  int N = f.order();
  if (n == 1 || path == PowerPath::exact) return nth_root(f, n);
  ModRun r = run_mod(f, n);
  if (!r.member) return {false, N, std::nullopt, r.fail_index};
  return nth_root(f, n);  // attach the exact certificate
}

CanonicalRoot canonical_root_mod(const IntSeries& f, long n) {
  require_constant_one(f);
  if (n < 2) throw std::domain_error("canonical_root_mod: n must be >= 2");
  std::uint64_t mn = mu(n) / n;
  ModRun r = run_mod(f, n);
  if (!r.member)
    throw std::domain_error("canonical_root_mod: not an n-th power to order " +
                            std::to_string(f.order()) + " (fails at index " +
                            std::to_string(r.fail_index) + ")");
  return {n, mn, ModSeries(mn, std::move(r.digits))};
}

IntSeries lcm_root_witness(const IntSeries& f, long r, long s) {
  MembershipVerdict u = nth_root(f, r);
  MembershipVerdict v = nth_root(f, s);
  if (!u.member || !v.member)
    throw std::domain_error("lcm_root_witness: root extraction failed");
  long g = std::gcd(r, s);
  // a*r + b*s = g by the extended Euclidean algorithm.
  long a0 = 1, b0 = 0, a1 = 0, b1 = 1, x = r, y = s;
  while (y != 0) {
    long q = x / y;
    std::tie(x, y) = std::make_pair(y, x - q * y);
    std::tie(a0, a1) = std::make_pair(a1, a0 - q * a1);
    std::tie(b0, b1) = std::make_pair(b1, b0 - q * b1);
  }
  long a = a0, b = b0;  // a*r + b*s = gcd
  IntSeries w = mul(pow(*u.root_prefix, b), pow(*v.root_prefix, a));
  long l = r / g * s;
  if (!eq_to_order(pow(w, l), f, f.order()))
    throw std::logic_error("lcm_root_witness: certificate check failed");
  return w;
}

SquareTestResult square_test_mod4(const IntSeries& f) {
  require_constant_one(f);
  int N = f.order();
  ModSeries fb = reduce_mod(f, 4);
  std::vector<int> g(N, 0);
  g[0] = 1;
  for (int s = 1; s < N; ++s) {
    std::uint64_t target;
    int sum_from, sum_to;  // g_r g_{s-r} over r in [sum_from, sum_to]
    if (s % 2 == 0) {
      int t = s / 2;
      target = (fb[s] + 4 - static_cast<std::uint64_t>(g[t])) % 4;
      sum_from = 1;
      sum_to = t - 1;
    } else {
      target = fb[s];
      sum_from = 1;
      sum_to = s / 2;
    }
    if (target % 2) return {false, std::vector<int>(g.begin(), g.begin() + s), s};
    int acc = static_cast<int>(target / 2);
    for (int r = sum_from; r <= sum_to; ++r) acc ^= g[r] & g[s - r];
    g[s] = acc & 1;
  }
  return {true, std::move(g), -1};
}

PthPowerResult pth_power_necessary(const IntSeries& f, long p) {
  require_constant_one(f);
  auto fac = factorize(p);
  if (fac.size() != 1 || fac[0].e != 1)
    throw std::domain_error("pth_power_necessary: p must be prime");
  int N = f.order();
  std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  ModSeries fp2 = reduce_mod(f, p2);
  // Candidate digits h_k = f_{pk} mod p are known only for pk < N; the p-th
  // power congruence is determined (and checkable) exactly that far.
  int M = (N - 1) / static_cast<int>(p) + 1;
  std::vector<std::uint64_t> cand(M, 0);
  cand[0] = 1;
  for (int k = 1; k < M; ++k) cand[k] = fp2[k * static_cast<int>(p)] % p;
  int fail = -1;
  for (int r = 1; r < N && fail < 0; ++r)
    if (r % p != 0 && fp2[r] % p != 0) fail = r;
  if (fail < 0) {
    ModSeries hp = pow(ModSeries(p2, cand), p);
    for (int r = 0; r < M && fail < 0; ++r)
      if (hp[r] != fp2[r]) fail = r;
  }
  return {fail < 0, ModSeries(static_cast<std::uint64_t>(p), std::move(cand)),
          fail};
}

ScaledVerdict scaled_membership(const IntSeries& f, const mpz_class& A, long n) {
  require_constant_one(f);
  if (A < 1) throw std::domain_error("scaled_membership: A must be >= 1");
  mpz_class m(static_cast<unsigned long>(mu(n)));
  if (A * A % m != 0) return ScaledVerdict::unknown;
  mpz_class b0 = m / gcd(m, A);  // smallest B with m | A*B
  if (f.order() < 2) return ScaledVerdict::unknown;
  if (f[1] == 0 || f[1] % b0 == 0) return ScaledVerdict::guaranteed_member;
  return ScaledVerdict::unknown;
}

std::vector<long> max_power_order(const IntSeries& f, long bound) {
  require_constant_one(f);
  std::vector<long> out;
  for (long n = 1; n <= bound; ++n)
    if (is_nth_power(f, n).member) out.push_back(n);
  return out;
}

}  // namespace nthpow
