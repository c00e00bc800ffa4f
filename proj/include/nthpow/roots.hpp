#pragma once
#include <optional>
#include <vector>

#include "nthpow/series.hpp"

namespace nthpow {

// Outcome of an n-th-power test, always relative to a truncation order.
// A member verdict means "no obstruction up to order_tested", with the root
// prefix as certificate; a non-member verdict carries the first obstructed
// coefficient index.
struct MembershipVerdict {
  bool member;
  int order_tested;
  std::optional<IntSeries> root_prefix;
  std::optional<int> fail_index;
};

enum class PowerPath { mod_reduced, exact };

// Exact-integer n-th root extraction: at each k solve
// n*g_k = f_k - (coefficient k of g^n with g_k = 0), failing where n does not
// divide exactly. Requires constant term 1.
MembershipVerdict nth_root(const IntSeries& f, long n);

// Same verdict, decided by default in Z/mu(n) arithmetic (the exact path can
// be forced). A member verdict additionally carries the exact root prefix.
MembershipVerdict is_nth_power(const IntSeries& f, long n,
                               PowerPath path = PowerPath::mod_reduced);

// The unique root mod mu(n)/n of an n-th power, residues in [0, mu(n)/n).
struct CanonicalRoot {
  long n;
  std::uint64_t modulus;  // mu(n)/n
  ModSeries root;
};
CanonicalRoot canonical_root_mod(const IntSeries& f, long n);

// For f known to be an r-th and an s-th power: a g with g^lcm(r,s) = f,
// assembled as (f^{1/r})^b (f^{1/s})^a where a*r + b*s = gcd(r,s).
IntSeries lcm_root_witness(const IntSeries& f, long r, long s);

// Mod-4 square criterion: recursively extracts the binary root digits and
// checks the two parity conditions at every step; both directions are exact
// (success implies f == g^2 mod 4, failure certifies f is not a square).
struct SquareTestResult {
  bool is_square;
  std::vector<int> root_bits;  // g_0, g_1, ... in {0,1}, meaningful prefix
  int fail_index;              // -1 on success
};
SquareTestResult square_test_mod4(const IntSeries& f);

// Necessary conditions for p-th powers: every coefficient with index not
// divisible by p vanishes mod p, and f == (1 + f_p x + f_{2p} x^2 + ...)^p
// mod p^2. Returns the candidate root mod p; failure certifies non-membership.
struct PthPowerResult {
  bool passes;
  ModSeries candidate_root;  // mod p
  int fail_index;            // -1 when both checks hold
};
PthPowerResult pth_power_necessary(const IntSeries& f, long p);

// Sufficient condition for f(Ax) to be an n-th power: some B with
// mu(n) | A*B, mu(n) | A^2 and B | f_1. One-sided: "guaranteed" or "unknown".
enum class ScaledVerdict { guaranteed_member, unknown };
ScaledVerdict scaled_membership(const IntSeries& f, const mpz_class& A, long n);

// All n <= bound for which is_nth_power holds to order(f).
std::vector<long> max_power_order(const IntSeries& f, long bound);

}  // namespace nthpow
