#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nthpow/series.hpp"

namespace nthpow {

// Exact integer symmetric positive-definite matrix defining a lattice.
// Positive definiteness is verified by exact-rational LDL at construction.
struct GramMatrix {
  int d = 0;
  std::vector<std::vector<long long>> entries;
};

// Theta series: coefficient of x^k counts lattice vectors of norm k.
// Constant term 1; nonzero-norm counts are even (+v/-v pairing).
using ThetaSeries = IntSeries;

// Parses "d" on the first line, then d rows of d integers; '#' starts a
// comment.  Validates symmetry and positive definiteness.
GramMatrix load_gram(const std::string& path);
GramMatrix gram_from_entries(std::vector<std::vector<long long>> rows);

// Exact determinant via rational LDL; throws if not positive definite.
mpz_class gram_determinant(const GramMatrix& g);

// Exact vector counts per norm 0..max_norm by depth-first bounded
// enumeration on an integer-scaled LDL decomposition (no floating point).
ThetaSeries theta_from_gram(const GramMatrix& g, int max_norm);

// 1 + 240 sum sigma_3(m) x^{2m}: the E8 theta series.
ThetaSeries psi_series(int order);

// x^2 prod_{m>=1} (1 - x^{2m})^24.
IntSeries delta_series(int order);

// Theta series of the d-dimensional extremal even unimodular lattice
// (d divisible by 8): the unique combination sum_j c_j psi^{t-3j} Delta^j
// with t = d/8 normalized to 1 + O(x^{2a+2}), a = floor(t/3).
ThetaSeries extremal_theta(int d, int order);

// The c_j of the extremal combination; c_0 = 1.
std::vector<mpz_class> extremal_coefficients(int d);

// x j(x) = psi^3 / Delta, i.e. psi^3 * inverse(Delta / x^2):
// 1 + 744 x^2 + 196884 x^4 + ...
IntSeries j_times_x(int order);

// Theta of Z^d, computed as theta_3^d (theta_3 = 1 + 2 sum x^{k^2});
// agrees with enumeration of the identity Gram matrix.
ThetaSeries zd_theta(int d, int order);

// Fixture lattices: Z<d> for 1 <= d <= 24, A2, D4, E6, E6dual, E8, K12,
// BW16 (normalized to minimal norm 8).  Validated against expected
// determinants at load.
GramMatrix builtin_lattice(const std::string& name);

// Barnes-Wall theta for dimension 2^m, 1 <= m <= 4, normalized to minimal
// norm 2^{m-1}: BW_2 = Z^2, BW_4 = D4, BW_8 = sqrt2 E8, BW_16 = sqrt2 L16.
// m = 3, 4 substitute x -> x^2 into the unscaled lattice's theta.
ThetaSeries bw_theta(int m, int order);

// BW_16 theta in closed form from the theta-constant decomposition
//   (th3(x^4)^16 + th4(x^4)^16)/2 + 15 th2o(x)^8 th3(x^4)^8 + th2o(x)^16/2
// with th2o(x) = 2(x + x^9 + x^25 + ...); validated against enumeration.
// Usable at orders beyond enumeration reach.
ThetaSeries bw16_theta_closed(int order);

// Verifies, coefficientwise to the given order, that theta of BW_{2^m} is
// 1 mod 2^{m+1} and that
//   (Theta_m(x)-1)/2^{m+1}  ==  (1-2^{m-1}) (Theta_{m-1}(x^2)-1)/2^m
// holds mod 2^m.  Requires 2 <= m <= 4.
bool bw_congruence_check(int m, int order);

// For each m <= max_m (<= 4): kissing number / 2^{m+1} is congruent to
// prod_{i=1}^m (1+2^i) mod 2^m, and successive values agree mod 2^m:
// the 2-adic convergence of normalized Barnes-Wall kissing numbers.
bool kissing_2adic_check(int max_m);

}  // namespace nthpow
