#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nthpow/series.hpp"

namespace nthpow {

// Linear [n, k] code over GF(q), q in {2, 3, 4}; generator rows are
// independent (validated at construction).
struct LinearCode {
  int q = 2;
  int n = 0;
  int k = 0;
  std::vector<std::vector<std::uint8_t>> gen;  // k rows of n digits
};

// Coefficient of x^w counts codewords of Hamming weight w; order n+1.
using WeightEnumerator = IntSeries;

struct CheckLine {
  std::string label;
  bool pass;
};

struct Report {
  std::vector<CheckLine> lines;
  bool all_pass() const;
};

// Parses "q n k" then k rows of n digits over {0..q-1}; '#' starts a
// comment.  Validates digit range and row independence.
LinearCode load_code(const std::string& path);
LinearCode code_from_rows(int q, int n, std::vector<std::vector<std::uint8_t>> rows);

// Rank of the generator over GF(q).
int gf_rank(const LinearCode& c);

// Reed-Muller code of length 2^m by the (u | u+v) recursion:
// rows {(u,u)} from RM(r, m-1) plus {(0,v)} from RM(r-1, m-1).
// Requires 0 <= r <= m <= 7.
LinearCode rm_code(int r, int m);

// Exact enumerator.  GF(2) codes iterate codewords in Gray-code order over
// machine-word bitsets, switching to the dual (then MacWilliams) when the
// dual is smaller; GF(3)/GF(4) enumerate directly.  The work bound
// min(k, n-k) * log2(q) <= 30 keeps every route under ~2^30 word operations.
WeightEnumerator weight_enumerator(const LinearCode& c);

// MacWilliams transform: enumerator of the dual of an [n, k]_q code.
// Throws if the transform yields non-integral or negative coefficients.
WeightEnumerator macwilliams(const WeightEnumerator& w, int n, int k, int q);

// For all 0 <= r <= m <= m_max (m_max <= 6): checks
//   W_{r,m} == (1 + x^{2^{m-r}})^{2^r}  (mod 2^{r+1}),
// the cross-length congruence W_{r,m+1}(x) == W_{r,m}(x^2) (mod 2^{m+1})
// (with W_{r,m} read as W_{m,m} when r > m), and 2^r-th power membership
// of each enumerator.
Report rm_congruence_check(int m_max);

// f_{r,m}(lambda) = number of weight lambda*2^m words in RM(r,m), for
// m = r..m_max, lambda = lam_num/lam_den (a dyadic rational; m with
// non-integral weight are skipped).  Checks successive values agree mod
// 2^{m+1}; for lambda = 2^{-r} also checks each value against the 2-adic
// limit 2^r / prod_{i=1}^r (1 - 2^i), i.e. f * prod == 2^r mod 2^{m+1}.
Report rm_2adic_limit_check(int r, long lam_num, long lam_den, int m_max);

// Extended primitive BCH code of length 2^m (2 <= m <= 6) with designed
// distance 2t-1: generator polynomial = product of the minimal polynomials
// of alpha^e for e in 1..2t-2, then an overall parity bit.
LinearCode bch_extended(int m, int t);

// For every valid (m <= m_max, t): tests the extended BCH enumerator for
// membership in P_{2^m/d'} where d' is the least power of 2 >= 2t
// (clamped to 2^m).
Report bch_conjecture_check(int m_max);

// Named reference enumerators: "golay" [24,12] and "rao_reddy" [48,31]
// as literal data; "s18" [18,9]_4 and "golay3" [12,6]_3 computed from the
// shipped generator fixtures.
std::map<std::string, WeightEnumerator> fixture_enumerators();

}  // namespace nthpow
