// Acceptance gate: twelve end-to-end checks, each printed as one PASS/FAIL
// line with its wall time.  Exit status 0 only if every check passes within
// its time budget.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "nthpow/bfile.hpp"
#include "nthpow/codes.hpp"
#include "nthpow/hanna.hpp"
#include "nthpow/lattice.hpp"
#include "nthpow/padic.hpp"
#include "nthpow/roots.hpp"
#include "nthpow/series.hpp"

using namespace nthpow;

namespace {

IntSeries random_unit(std::mt19937& rng, int order, int span) {
  std::uniform_int_distribution<long> d(-span, span);
  std::vector<long> c(order);
  c[0] = 1;
  for (int i = 1; i < order; ++i) c[i] = d(rng);
  return from_coeffs(c);
}

bool one_mod(const IntSeries& f, long m) {
  const auto& c = f.coeffs();
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] % m != 0) return false;
  return true;
}

std::vector<long> divisors(long d) {
  std::vector<long> out;
  for (long j = 1; j <= d; ++j)
    if (d % j == 0) out.push_back(j);
  return out;
}

// ---- criterion bodies ------------------------------------------------------

bool quartic_root_of_d4() {
  const std::vector<long long> expect = {
      1,
      6,
      -48,
      672,
      -10686,
      185472,
      -3398304,
      64606080,
      -1261584768,
      25141699590,
      -509112525600,
      10443131883360,
      -216500232587520,
      4528450460408448,
      -95438941858567104,
      2024550297637849728};
  ThetaSeries theta = theta_from_gram(builtin_lattice("D4"), 30);
  MembershipVerdict v = nth_root(theta, 4);
  if (!v.member || !v.root_prefix) return false;
  const IntSeries& g = *v.root_prefix;
  for (int i = 0; i < 16; ++i)
    if (g[2 * i] != mpz_class(static_cast<long>(expect[i]))) return false;
  return true;
}

bool greedy_sequence_listings() {
  const std::vector<int> h2 = {1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2, 2,
                               2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1};
  const std::vector<int> h3 = {1, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 2, 3, 3,
                               2, 3, 3, 1, 3, 3, 2, 3, 3, 3, 3, 3, 2, 3, 3, 3, 3};
  const std::vector<long> r2 = {1,   1,   0,    1,   0,    1,   -1,  2,   -2,  4,  -6,
                                10,  -16, 27,   -44, 75,   -127, 218, -375, 650, -1130};
  const std::vector<long> r3 = {1,  1,   0,    0,   1,    -1,   2,   -2, 2,  0,  -4,
                                12, -24, 38,   -46, 33,   29,   -176, 443, -827, 1222, -1310};
  const std::vector<int> s2 = {1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1,
                               0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1};
  const std::vector<int> s3 = {1, 1, 0, 0, 1, 2, 2, 1, 2, 0, 2, 0, 0, 2,
                               2, 0, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 1};

  HannaPair p2 = hanna_sequence(2, 33);
  if (p2.digits != h2) return false;
  for (size_t i = 0; i < r2.size(); ++i)
    if (p2.root[static_cast<int>(i)] != r2[i]) return false;

  HannaPair p3 = hanna_sequence(3, 35);
  if (p3.digits != h3) return false;
  for (size_t i = 0; i < r3.size(); ++i)
    if (p3.root[static_cast<int>(i)] != r3[i]) return false;

  ModSeries m2 = hanna_root_mod(2, 27);
  ModSeries m3 = hanna_root_mod(3, 27);
  for (int i = 0; i < 27; ++i) {
    if (m2[i] != static_cast<std::uint64_t>(s2[i])) return false;
    if (m3[i] != static_cast<std::uint64_t>(s3[i])) return false;
  }
  return true;
}

bool root_functional_equations() {
  return verify_h2_equations(512) && verify_h3_equations(243) &&
         !verify_h2_equations(512, 100) && !verify_h3_equations(243, 100);
}

bool extremal_membership() {
  for (auto [d, n] : {std::pair<int, long>{8, 8}, {24, 24}, {32, 32}}) {
    if (!is_nth_power(extremal_theta(d, 101), n).member) return false;
  }
  ThetaSeries t56 = extremal_theta(56, 101);
  if (!is_nth_power(t56, 8).member) return false;
  MembershipVerdict v = is_nth_power(t56, 56);
  if (v.member || !v.fail_index) return false;
  std::printf("      d=56 fails 56th-power membership at index %d\n", *v.fail_index);
  if (*v.fail_index != 14) return false;

  // theta == 1 mod 30n, n the 5-smooth part of d
  for (auto [d, n30] : {std::pair<int, long>{8, 240}, {24, 720}, {32, 960},
                        {56, 240}, {80, 2400}}) {
    if (!one_mod(extremal_theta(d, 101), n30)) return false;
  }
  return true;
}

bool leech_minimal_count() {
  std::vector<mpz_class> c = extremal_coefficients(24);
  if (c.size() != 2 || c[0] != 1 || c[1] != -720) return false;
  if (extremal_theta(24, 6)[4] != 196560) return false;
  // independent hand expansion of the x^4 coefficient of psi^3 - 720 Delta:
  // psi = 1 + 240 x^2 + 2160 x^4 + ..., Delta = x^2 - 24 x^4 + ...
  long hand = 3 * 2160 + 3 * 240 * 240 + (-720) * (-24);
  return hand == 196560;
}

bool rm_congruences() { return rm_congruence_check(6).all_pass(); }

bool code_example_memberships() {
  std::map<std::string, WeightEnumerator> fix = fixture_enumerators();
  for (long n = 2; n <= 24; ++n)
    if (is_nth_power(fix.at("golay"), n).member) return false;
  WeightEnumerator h8 = weight_enumerator(rm_code(1, 3));
  if (!is_nth_power(h8, 2).member) return false;
  if (is_nth_power(h8, 3).member) return false;
  CanonicalRoot rr = canonical_root_mod(fix.at("rao_reddy"), 2);
  for (int i = 0; i < rr.root.order(); ++i) {
    bool on = (i == 0 || i == 8 || i == 16 || i == 24);
    if (rr.root[i] != (on ? 1u : 0u)) return false;
  }
  return is_nth_power(fix.at("golay3"), 4).member &&
         is_nth_power(fix.at("s18"), 18).member;
}

bool bch_sweep() {
  Report r = bch_conjecture_check(6);
  std::printf("      %zu extended BCH codes checked\n", r.lines.size());
  return r.all_pass();
}

bool barnes_wall_family() {
  for (int m = 1; m <= 4; ++m)
    if (!one_mod(bw_theta(m, 25), 1L << (m + 1))) return false;
  for (int m = 2; m <= 4; ++m)
    if (!bw_congruence_check(m, 25)) return false;
  if (bw_theta(4, 9)[8] != 4320) return false;
  return kissing_2adic_check(4);
}

bool postscript_twelfth_power() { return postscript_series(200).all_hold(); }

bool property_suites() {
  int failures = 0;

  {  // exact root round trip
    std::mt19937 rng(101);
    for (int it = 0; it < 2000; ++it) {
      IntSeries g = random_unit(rng, 2 + it % 18, 8);
      long n = 1 + it % 12;
      MembershipVerdict v = nth_root(pow(g, n), n);
      if (!v.member || !v.root_prefix || v.root_prefix->coeffs() != g.coeffs())
        ++failures;
    }
  }
  {  // mod-reduced vs exact path, plus invariance under mu-sized bumps
    std::mt19937 rng(102);
    for (int it = 0; it < 1000; ++it) {
      long n = 2 + it % 11;
      IntSeries f = random_unit(rng, 2 + it % 24, 12);
      MembershipVerdict a = is_nth_power(f, n, PowerPath::mod_reduced);
      MembershipVerdict b = is_nth_power(f, n, PowerPath::exact);
      if (a.member != b.member) ++failures;
      else if (!a.member && *a.fail_index != *b.fail_index) ++failures;
      if (f.order() > 2) {
        std::vector<mpz_class> c = f.coeffs();
        std::uniform_int_distribution<long> pick(1, f.order() - 1), bump(-3, 3);
        c[pick(rng)] += static_cast<long>(mu(n)) * bump(rng);
        MembershipVerdict p = is_nth_power(IntSeries(c), n);
        if (p.member != a.member) ++failures;
        else if (!p.member && *p.fail_index != *a.fail_index) ++failures;
      }
    }
  }
  {  // distinct roots mod mu/n give distinct powers mod mu
    std::mt19937 rng(103);
    for (int it = 0; it < 500; ++it) {
      long n = 2 + it % 7;
      std::uint64_t m = mu(n);
      long md = static_cast<long>(m / static_cast<std::uint64_t>(n));
      IntSeries g = random_unit(rng, 12, 5);
      std::vector<mpz_class> c = g.coeffs();
      std::uniform_int_distribution<long> pick(1, 11), delta(1, md - 1);
      c[pick(rng)] += delta(rng);
      IntSeries g2(c);
      if (reduce_mod(pow(g, n), m).coeffs() == reduce_mod(pow(g2, n), m).coeffs())
        ++failures;
    }
  }
  {  // witness for combined membership at the lcm
    std::mt19937 rng(104);
    const std::vector<std::pair<long, long>> pairs = {{2, 3}, {4, 6}, {3, 5},
                                                      {6, 10}, {2, 4}, {5, 7}};
    for (int it = 0; it < 500; ++it) {
      auto [r, s] = pairs[it % pairs.size()];
      long l = std::lcm(r, s);
      IntSeries g = random_unit(rng, 8 + it % 5, 4);
      IntSeries f = pow(g, l);
      IntSeries w = lcm_root_witness(f, r, s);
      if (w.coeffs() != g.coeffs()) ++failures;
    }
  }
  {  // f = 1 + m x g  =>  f^n == 1 mod m n'
    std::mt19937 rng(105);
    for (int it = 0; it < 500; ++it) {
      long m = 2 + it % 9;
      long n = 2 + it % 12;
      IntSeries g = random_unit(rng, 10, 5);
      std::vector<mpz_class> c(10, mpz_class(0));
      c[0] = 1;
      for (int i = 1; i < 10; ++i) c[i] = m * g[i - 1];
      IntSeries fn = pow(IntSeries(c), n);
      long nprime = 1;
      for (const Factor& pf : factorize(static_cast<std::uint64_t>(m)))
        for (long e = 0; e < valuation(mpz_class(n), pf.p); ++e)
          nprime *= static_cast<long>(pf.p);
      for (int i = 1; i < fn.order(); ++i)
        if (fn[i] % (m * nprime) != 0) ++failures;
    }
  }
  {  // mod-4 square criterion agrees with the square test
    std::mt19937 rng(106);
    for (int it = 0; it < 1000; ++it) {
      IntSeries f = random_unit(rng, 2 + it % 20, 10);
      SquareTestResult st = square_test_mod4(f);
      MembershipVerdict v = is_nth_power(f, 2);
      if (st.is_square != v.member) ++failures;
      else if (!st.is_square && st.fail_index != *v.fail_index) ++failures;
    }
  }

  if (failures) std::printf("      %d property failures\n", failures);
  return failures == 0;
}

bool membership_divides_dimension() {
  const std::vector<long> e6_set = {1, 3};
  struct Entry {
    std::string name;
    long dim;
    IntSeries theta;
    std::vector<long> expect;
  };
  std::vector<Entry> entries;
  for (long d = 1; d <= 24; ++d)
    entries.push_back({"Z" + std::to_string(d), d, zd_theta(static_cast<int>(d), 48),
                       divisors(d)});
  entries.push_back({"A2", 2, theta_from_gram(builtin_lattice("A2"), 25), {1}});
  entries.push_back({"D4", 4, theta_from_gram(builtin_lattice("D4"), 31), {1, 2, 4}});
  entries.push_back({"E6", 6, theta_from_gram(builtin_lattice("E6"), 21), e6_set});
  entries.push_back({"E6dual", 6, theta_from_gram(builtin_lattice("E6dual"), 21), e6_set});
  entries.push_back({"E8", 8, theta_from_gram(builtin_lattice("E8"), 21), {1, 2, 4, 8}});
  entries.push_back({"K12", 12, theta_from_gram(builtin_lattice("K12"), 29), {1, 2, 3, 6}});
  entries.push_back({"BW16", 16, bw16_theta_closed(48), {1, 2, 4, 8, 16}});

  bool ok = true;
  for (const Entry& e : entries) {
    std::vector<long> got = max_power_order(e.theta, e.dim);
    for (long n : got)
      if (e.dim % n != 0) {
        std::printf("      %s: membership order %ld does not divide %ld\n",
                    e.name.c_str(), n, e.dim);
        ok = false;
      }
    if (got != e.expect) {
      std::printf("      %s: unexpected membership set\n", e.name.c_str());
      ok = false;
    }
  }
  if (ok) std::printf("      no violation across %zu lattices\n", entries.size());
  return ok;
}

struct Criterion {
  const char* label;
  double budget_s;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"D4 theta quartic root coefficients", 10, quartic_root_of_d4},
      {"greedy sequence listings and roots", 1, greedy_sequence_listings},
      {"binary/ternary root functional equations", 5, root_functional_equations},
      {"extremal theta memberships and congruence", 30, extremal_membership},
      {"Leech minimal-vector coefficient", 10, leech_minimal_count},
      {"Reed-Muller congruence family", 60, rm_congruences},
      {"reference code enumerator memberships", 10, code_example_memberships},
      {"extended BCH membership sweep", 600, bch_sweep},
      {"Barnes-Wall congruences and 2-adic limit", 300, barnes_wall_family},
      {"triangular-exponent twelfth power", 5, postscript_twelfth_power},
      {"randomized property suites", 60, property_suites},
      {"membership order divides lattice dimension", 300, membership_divides_dimension},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    bool ok = false;
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_s) {
      ok = false;
      note += " (over budget of " + std::to_string(c.budget_s) + "s)";
    }
    std::printf("%2zu %s %7.2fs  %s%s\n", i + 1, ok ? "PASS" : "FAIL", dt,
                c.label, note.c_str());
    if (!ok) ++failed;
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
