#include "nthpow/hanna.hpp"

#include <algorithm>
#include <stdexcept>

#include "nthpow/padic.hpp"
#include "nthpow/roots.hpp"

namespace nthpow {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Powers table Q[j] = g^j mod m for j = 0..k over indices 0..N-1, updated
// in place as root digits are appended; Q[k][idx] before appending digit
// idx is the coefficient forced by the earlier digits (g_idx treated as 0).
struct ModTable {
  long k;
  int N;
  std::uint64_t m;
  std::vector<std::vector<std::uint64_t>> Q, C;

  ModTable(long k_, int N_, std::uint64_t m_) : k(k_), N(N_), m(m_) {
    Q.assign(k + 1, std::vector<std::uint64_t>(N, 0));
    for (long j = 0; j <= k; ++j) Q[j][0] = 1 % m;
    C.assign(k + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (long j = 0; j <= k; ++j) {
      C[j][0] = 1 % m;
      for (long r = 1; r <= j; ++r)
        C[j][r] = (C[j - 1][r - 1] + (r <= j - 1 ? C[j - 1][r] : 0)) % m;
    }
  }

  std::uint64_t phi(int idx) const { return Q[k][idx]; }

  void append(std::uint64_t v, int idx) {
    v %= m;
    std::vector<std::uint64_t> vp(k + 1, 1 % m);
    for (long r = 1; r <= k; ++r) vp[r] = mulmod(vp[r - 1], v, m);
    for (long j = k; j >= 1; --j)
      for (int i = N - 1; i >= idx; --i) {
        std::uint64_t acc = Q[j][i];
        for (long r = 1; r <= j && r * idx <= i; ++r)
          acc = (acc + mulmod(mulmod(C[j][r], vp[r], m), Q[j - r][i - r * idx], m)) % m;
        Q[j][i] = acc;
      }
  }
};

// One greedy pass mod mu(k): digit h_n in {1..k} is congruent to the forced
// coefficient Phi mod k (h = k when the residue is 0), and the root digit
// mod mu(k)/k is (h - Phi)/k.
struct GreedyRun {
  std::vector<int> digits;             // 1, h_1, ..., h_{N-1}
  std::vector<std::uint64_t> rdigits;  // root mod mu(k)/k, indices 0..N-1
};

GreedyRun greedy_mod(long k, int N) {
  std::uint64_t m = mu(static_cast<std::uint64_t>(k));
  GreedyRun run;
  run.digits.assign(N, 1);
  run.rdigits.assign(N, 0);
  run.rdigits[0] = 1 % (m / k);
  ModTable t(k, N, m);
  for (int n = 1; n < N; ++n) {
    std::uint64_t ph = t.phi(n);
    std::uint64_t r = ph % static_cast<std::uint64_t>(k);
    std::uint64_t h = r == 0 ? static_cast<std::uint64_t>(k) : r;
    std::uint64_t d = (h + m - ph) % m;  // == h - Phi mod m, divisible by k
    std::uint64_t v = d / static_cast<std::uint64_t>(k);
    run.digits[n] = static_cast<int>(h);
    run.rdigits[n] = v;
    t.append(v, n);
  }
  return run;
}

std::vector<std::uint64_t> root_mod_digits(long k, int N, std::uint64_t mod) {
  auto s = hanna_root_mod(k, N);
  std::vector<std::uint64_t> v(s.coeffs());
  for (auto& x : v) x %= mod;
  return v;
}

}  // namespace

std::vector<int> hanna_digits(long k, int N) {
  if (k < 1 || N < 1) throw std::domain_error("hanna: need k >= 1 and N >= 1");
  if (k == 1) return std::vector<int>(N, 1);
  return greedy_mod(k, N).digits;
}

HannaPair hanna_sequence(long k, int N) {
  std::vector<int> digits = hanna_digits(k, N);
  std::vector<mpz_class> c(N);
  for (int n = 0; n < N; ++n) c[n] = digits[n];
  IntSeries f(std::move(c));
  MembershipVerdict v = nth_root(f, k);
  if (!v.member || !v.root_prefix)
    throw std::logic_error("greedy digit sequence lost root integrality");
  return HannaPair{k, std::move(digits), std::move(*v.root_prefix)};
}

ModSeries hanna_root_mod(long k, int N) {
  if (k < 2) throw std::domain_error("hanna_root_mod: need k >= 2");
  if (N < 1) throw std::domain_error("hanna_root_mod: need N >= 1");
  GreedyRun run = greedy_mod(k, N);
  std::uint64_t mod = mu(static_cast<std::uint64_t>(k)) / static_cast<std::uint64_t>(k);
  return ModSeries(mod, std::move(run.rdigits));
}

bool verify_h2_equations(int N, int perturb) {
  if (N < 2) throw std::domain_error("verify_h2_equations: need N >= 2");
  if (perturb >= N) throw std::domain_error("perturb index beyond checked order");
  std::vector<std::uint64_t> s = root_mod_digits(2, N, 2);
  if (perturb >= 1) s[perturb] ^= 1;
  std::vector<int> f = hanna_digits(2, N);
  // s(x^2) + s(x)^2 == 2 + 2x + 2x^2 + ...   (mod 4)
  for (int i = 0; i < N; ++i) {
    std::uint64_t lhs = i % 2 == 0 ? s[i / 2] : 0;
    for (int a = 0; a <= i; ++a) lhs += s[a] * s[i - a];
    if (lhs % 4 != 2) return false;
  }
  // f(x) == 3 s(x^2) + 2/(1-x^2) + 2x/(1-x^2)   (mod 4)
  for (int i = 0; i < N; ++i) {
    std::uint64_t rhs = 3 * (i % 2 == 0 ? s[i / 2] : 0) + 2;
    if (static_cast<std::uint64_t>(f[i]) % 4 != rhs % 4) return false;
  }
  return true;
}

bool verify_h3_equations(int N, int perturb) {
  if (N < 2) throw std::domain_error("verify_h3_equations: need N >= 2");
  if (perturb >= N) throw std::domain_error("perturb index beyond checked order");
  std::vector<std::uint64_t> s = root_mod_digits(3, N, 3);
  if (perturb >= 1) s[perturb] = (s[perturb] + 1) % 3;
  std::vector<int> f = hanna_digits(3, N);
  std::vector<std::uint64_t> s1(N, 0), s2(N, 0);
  for (int i = 0; i < N; ++i) {
    s1[i] = s[i] == 1;
    s2[i] = s[i] == 2;
  }
  // s^3 via two convolutions, coefficients kept mod 9
  std::vector<std::uint64_t> sq(N, 0), cu(N, 0);
  for (int a = 0; a < N; ++a)
    if (s[a])
      for (int b = 0; a + b < N; ++b) sq[a + b] = (sq[a + b] + s[a] * s[b]) % 9;
  for (int a = 0; a < N; ++a)
    if (s[a])
      for (int b = 0; a + b < N; ++b) cu[a + b] = (cu[a + b] + s[a] * sq[b]) % 9;
  // 2 s1(x^3) + s2(x^3) + s(x)^3 == 3/(1-x)   (mod 9)
  for (int i = 0; i < N; ++i) {
    std::uint64_t lhs = cu[i];
    if (i % 3 == 0) lhs += 2 * s1[i / 3] + s2[i / 3];
    if (lhs % 9 != 3) return false;
  }
  // f(x) == 3/(1-x) - 2 s1(x^3) - s2(x^3)   (mod 9)
  for (int i = 0; i < N; ++i) {
    std::uint64_t rhs = 3 + 18;  // +18 keeps the subtraction nonnegative
    if (i % 3 == 0) rhs -= 2 * s1[i / 3] + s2[i / 3];
    if (static_cast<std::uint64_t>(f[i]) % 9 != rhs % 9) return false;
  }
  return true;
}

int aperiodicity_scan(const std::vector<int>& seq, int max_period) {
  int L = static_cast<int>(seq.size());
  if (max_period < 1 || max_period > L / 2)
    throw std::domain_error("aperiodicity_scan: need 1 <= max_period <= len/2");
  for (int pi = 1; pi <= max_period; ++pi) {
    int last_mismatch = -1;
    for (int i = 0; i + pi < L; ++i)
      if (seq[i] != seq[i + pi]) last_mismatch = i;
    int start = last_mismatch + 1;
    // demand at least pi observed repeats and a tail covering half the data
    if (start <= std::min(L - 2 * pi, L / 2)) return pi;
  }
  return 0;
}

std::vector<long> permutation_sequence(int N) {
  if (N < 1) throw std::domain_error("permutation_sequence: need N >= 1");
  std::vector<long> out{1};
  if (N == 1) return out;
  ModTable t(3, N, 9);
  std::vector<char> used(16, 0);
  used[1] = 1;
  auto take_least = [&used](long residue) {
    long a = residue == 0 ? 3 : residue;
    for (;; a += 3) {
      if (a >= static_cast<long>(used.size())) used.resize(2 * a, 0);
      if (!used[a]) {
        used[a] = 1;
        return a;
      }
    }
  };
  for (int n = 1; n < N; ++n) {
    std::uint64_t ph = t.phi(n);
    long a = take_least(static_cast<long>(ph % 3));
    std::uint64_t d = (static_cast<std::uint64_t>(a % 9) + 9 - ph) % 9;
    t.append(d / 3, n);
    out.push_back(a);
  }
  return out;
}

PostscriptResult postscript_series(int N) {
  if (N < 1) throw std::domain_error("postscript_series: need N >= 1");
  std::vector<mpz_class> c(N, mpz_class(0));
  mpz_class p8 = 1;
  for (long n = 0; n * (n + 1) / 2 < N; ++n) {
    c[n * (n + 1) / 2] = (2 * n + 1) * p8;
    p8 *= 8;
  }
  IntSeries f(std::move(c));
  bool mod8 = true;
  for (int i = 0; i < N; ++i)
    if (f[i] % 8 != (i == 0 ? 1 : 0)) mod8 = false;
  // prod_{m>=1} (1-x^m)^3, three in-place passes
  std::vector<mpz_class> prod(N, mpz_class(0));
  prod[0] = 1;
  for (int pass = 0; pass < 3; ++pass)
    for (int m = 1; m < N; ++m)
      for (int i = N - 1; i >= m; --i) prod[i] -= prod[i - m];
  bool mod9 = true;
  for (int i = 0; i < N; ++i)
    if ((f[i] - prod[i]) % 9 != 0) mod9 = false;
  bool p12 = is_nth_power(f, 12).member;
  return PostscriptResult{std::move(f), mod8, mod9, p12};
}

}  // namespace nthpow
