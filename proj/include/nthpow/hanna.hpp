#pragma once

#include <vector>

#include "nthpow/series.hpp"

namespace nthpow {

// Greedy digit sequence with an exact k-th root: f = 1 + sum h_n x^n where
// each h_n is the smallest value in {1..k} keeping the k-th root of f
// integral.  Exactly one choice works at every step: with Phi the
// coefficient forced by the previous root digits and Phi = q*k + r
// (0 <= r < k), r = 0 gives h_n = k, g_n = 1 - q and r > 0 gives h_n = r,
// g_n = -q.
struct HannaPair {
  long k;
  std::vector<int> digits;  // the sequence 1, h_1, h_2, ... (N values)
  IntSeries root;           // exact root g of order N; pow(root, k) = f
};

// First N sequence values alone (mod-mu(k) arithmetic; no big-integer work).
std::vector<int> hanna_digits(long k, int N);

// Sequence values plus the exact root.
HannaPair hanna_sequence(long k, int N);

// The root reduced mod mu(k)/k (the modulus where it is uniquely
// determined), computed by the mod-reduced greedy recursion itself; agrees
// with canonical_root_mod of the digit series.  Requires k >= 2.
ModSeries hanna_root_mod(long k, int N);

// Functional equations of the k=2 root s(x) (digits of the root mod 2,
// taken as a 0/1 integer series) and the digit series f:
//   s(x^2) + s(x)^2 == 2/(1-x)              (mod 4)
//   f(x) == 3 s(x^2) + (2 + 2x)/(1-x^2)     (mod 4)
// Both checked coefficientwise to order N.  perturb >= 1 flips that bit of
// s first (negative control for tests); the result must then be false.
bool verify_h2_equations(int N, int perturb = -1);

// Same for k=3 with the mod-3 root s = s1 + 2*s2 (s1, s2 the 0/1 indicator
// series of 1-digits and 2-digits):
//   2 s1(x^3) + s2(x^3) + s(x)^3 == 3/(1-x)  (mod 9)
//   f(x) == 3/(1-x) - 2 s1(x^3) - s2(x^3)    (mod 9)
// perturb >= 1 adds 1 (mod 3) to that digit of s first.
bool verify_h3_equations(int N, int perturb = -1);

// Smallest period pi <= max_period such that the sequence is eventually
// pi-periodic over the given prefix: the tail seq[s..] repeats with
// period pi for some start s <= min(len - 2*pi, len/2), so at least pi
// full repeats are actually observed.  Returns 0 if no such period exists.
int aperiodicity_scan(const std::vector<int>& seq, int max_period);

// a_0 = 1; a_n = least unused positive integer such that
// (a_0 + a_1 x + ...)^(1/3) keeps integer coefficients, i.e. the least
// unused value congruent mod 3 to the forced coefficient Phi.  Returns the
// first N terms; the sequence is injective by construction.
std::vector<long> permutation_sequence(int N);

// f = sum_{n>=0} (2n+1) 8^n x^{n(n+1)/2}, truncated to order N, with the
// three properties that make it a 12th power: f == 1 (mod 8),
// f == prod_m (1-x^m)^3 (mod 9), and no obstruction to 12th-power
// membership up to order N.
struct PostscriptResult {
  IntSeries series;
  bool one_mod8;
  bool cube_product_mod9;
  bool twelfth_power;
  bool all_hold() const { return one_mod8 && cube_product_mod9 && twelfth_power; }
};
PostscriptResult postscript_series(int N);

}  // namespace nthpow
