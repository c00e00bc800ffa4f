#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "nthpow/hanna.hpp"
#include "nthpow/roots.hpp"
#include "nthpow/series.hpp"

using namespace nthpow;

namespace {

const std::vector<int> kH2 = {1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2, 2,
                              2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1};
const std::vector<int> kH3 = {1, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3, 1, 3, 3, 2, 3, 3,
                              2, 3, 3, 1, 3, 3, 2, 3, 3, 3, 3, 3, 2, 3, 3, 3, 3};
const std::vector<long long> kRoot2 = {1,    1,    0,  1,    0,   1,   -1,
                                       2,    -2,   4,  -6,   10,  -16, 27,
                                       -44,  75,   -127, 218, -375, 650, -1130};
const std::vector<long long> kRoot3 = {1,   1,   0,   0,   1,    -1,   2,  -2,
                                       2,   0,   -4,  12,  -24,  38,   -46, 33,
                                       29,  -176, 443, -827, 1222, -1310};
const std::vector<int> kS2 = {1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1,
                              0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1};
const std::vector<int> kS3 = {1, 1, 0, 0, 1, 2, 2, 1, 2, 0, 2, 0, 0, 2,
                              2, 0, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 1};
const std::vector<long> kPerm = {1,  3,  6,  4,  9,  12, 7,  15, 18, 2,  21, 24, 27,
                                 30, 33, 36, 39, 42, 45, 48, 51, 5,  54, 57, 10, 60};

std::vector<mpz_class> zv(const std::vector<long long>& v) {
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntSeries digit_series(const std::vector<int>& d) {
  std::vector<mpz_class> c(d.begin(), d.end());
  return IntSeries(std::move(c));
}

}  // namespace

TEST_CASE("greedy digit sequences match the listings") {
  CHECK(hanna_digits(2, 33) == kH2);
  CHECK(hanna_digits(3, 35) == kH3);
  CHECK(hanna_digits(1, 8) == std::vector<int>(8, 1));
}

TEST_CASE("exact roots of the greedy sequences") {
  HannaPair p2 = hanna_sequence(2, 21);
  CHECK(p2.digits == std::vector<int>(kH2.begin(), kH2.begin() + 21));
  CHECK(p2.root.coeffs() == zv(kRoot2));
  CHECK(pow(p2.root, 2).coeffs() == digit_series(p2.digits).coeffs());

  HannaPair p3 = hanna_sequence(3, 22);
  CHECK(p3.root.coeffs() == zv(kRoot3));
  CHECK(pow(p3.root, 3).coeffs() == digit_series(p3.digits).coeffs());

  // k = 4 is less studied but the greedy choice still works at every index.
  HannaPair p4 = hanna_sequence(4, 20);
  for (int i = 1; i < 20; ++i) {
    CHECK(p4.digits[i] >= 1);
    CHECK(p4.digits[i] <= 4);
  }
  CHECK(pow(p4.root, 4).coeffs() == digit_series(p4.digits).coeffs());
}

TEST_CASE("roots reduced mod the uniqueness modulus") {
  ModSeries s2 = hanna_root_mod(2, 27);
  REQUIRE(s2.coeffs().size() == 27);
  for (int i = 0; i < 27; ++i) CHECK(s2.coeffs()[i] == std::uint64_t(kS2[i]));

  ModSeries s3 = hanna_root_mod(3, 27);
  for (int i = 0; i < 27; ++i) CHECK(s3.coeffs()[i] == std::uint64_t(kS3[i]));

  for (long k = 2; k <= 4; ++k) {
    CAPTURE(k);
    IntSeries f = digit_series(hanna_digits(k, 64));
    CHECK(hanna_root_mod(k, 64).coeffs() == canonical_root_mod(f, k).root.coeffs());
  }

  CHECK_THROWS_AS(hanna_root_mod(1, 5), std::domain_error);
}

TEST_CASE("functional equations of the binary and ternary roots") {
  CHECK(verify_h2_equations(512));
  CHECK(verify_h3_equations(243));
  CHECK(verify_h2_equations(2));
  CHECK(verify_h3_equations(2));
  CHECK_FALSE(verify_h2_equations(512, 100));
  CHECK_FALSE(verify_h3_equations(243, 100));
  CHECK_FALSE(verify_h2_equations(64, 1));
  CHECK_FALSE(verify_h3_equations(64, 1));
  CHECK_THROWS_AS(verify_h2_equations(16, 16), std::domain_error);
  CHECK_THROWS_AS(verify_h3_equations(16, 20), std::domain_error);
  CHECK_THROWS_AS(verify_h2_equations(1), std::domain_error);
}

TEST_CASE("periodicity scan") {
  CHECK(aperiodicity_scan({1, 2, 1, 2, 1, 2}, 3) == 2);
  CHECK(aperiodicity_scan({1, 1, 2, 1, 2}, 2) == 2);
  CHECK(aperiodicity_scan({5, 5, 5, 5, 5, 5, 5, 5}, 4) == 1);
  CHECK(aperiodicity_scan({9, 9, 9, 1, 2, 1, 2, 1, 2, 1, 2}, 5) == 2);
  CHECK(aperiodicity_scan({1, 2, 3, 4, 5, 6, 7, 8}, 4) == 0);
  CHECK_THROWS_AS(aperiodicity_scan({1, 2, 3, 4}, 0), std::domain_error);
  CHECK_THROWS_AS(aperiodicity_scan({1, 2, 3, 4}, 3), std::domain_error);

  // No period shows up in the first 4096 digits of either greedy sequence.
  CHECK(aperiodicity_scan(hanna_digits(2, 4096), 2048) == 0);
  CHECK(aperiodicity_scan(hanna_digits(3, 4096), 2048) == 0);
}

TEST_CASE("cube-root permutation sequence") {
  CHECK(permutation_sequence(26) == kPerm);

  std::vector<long> a = permutation_sequence(10000);
  std::set<long> seen(a.begin(), a.end());
  CHECK(seen.size() == a.size());  // injective
  CHECK(*seen.begin() >= 1);
  CHECK(*seen.rbegin() < 1000000);
  for (long v = 1; v <= 2500; ++v) CHECK(seen.count(v) == 1);

  // The generated prefix really is a cube: check the root exists exactly.
  std::vector<mpz_class> c;
  for (int i = 0; i < 200; ++i) c.emplace_back(a[i]);
  CHECK(is_nth_power(IntSeries(std::move(c)), 3).member);

  CHECK_THROWS_AS(permutation_sequence(0), std::domain_error);
}

TEST_CASE("triangular-exponent series is a twelfth power") {
  PostscriptResult r = postscript_series(200);
  CHECK(r.one_mod8);
  CHECK(r.cube_product_mod9);
  CHECK(r.twelfth_power);
  CHECK(r.all_hold());
  CHECK(r.series.coeffs()[0] == 1);
  CHECK(r.series.coeffs()[1] == 24);
  CHECK(r.series.coeffs()[2] == 0);
  CHECK(r.series.coeffs()[3] == 320);
  CHECK(r.series.coeffs()[6] == 3584);
  CHECK_THROWS_AS(postscript_series(0), std::domain_error);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(hanna_digits(0, 5), std::domain_error);
  CHECK_THROWS_AS(hanna_digits(2, 0), std::domain_error);
  CHECK_THROWS_AS(hanna_sequence(-1, 5), std::domain_error);
}
