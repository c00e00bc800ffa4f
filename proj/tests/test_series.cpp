#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nthpow/series.hpp"

using namespace nthpow;

namespace {
IntSeries s(std::initializer_list<long> v) { return from_coeffs(std::vector<long>(v)); }
}  // namespace

TEST_CASE("construction and accessors") {
  IntSeries f = s({1, 2, 3});
  CHECK(f.order() == 3);
  CHECK(f[0] == 1);
  CHECK(f[2] == 3);
  CHECK(IntSeries::one(4).coeffs() == s({1, 0, 0, 0}).coeffs());
  CHECK(IntSeries::geometric(4).coeffs() == s({1, 1, 1, 1}).coeffs());
}

TEST_CASE("ring arithmetic truncates to the shorter operand") {
  IntSeries f = s({1, 2, 3, 4});
  IntSeries g = s({1, -1});
  CHECK(add(f, g).coeffs() == s({2, 1}).coeffs());
  CHECK(sub(f, g).coeffs() == s({0, 3}).coeffs());
  CHECK(mul(f, g).coeffs() == s({1, 1}).coeffs());
  CHECK(mul(s({1, 1, 1}), s({1, 1, 1})).coeffs() == s({1, 2, 3}).coeffs());
}

TEST_CASE("inverse against known expansions") {
  CHECK(inverse(s({1, -1, 0, 0, 0})).coeffs() == s({1, 1, 1, 1, 1}).coeffs());
  IntSeries f = s({1, 5, -3, 7, 2, 9});
  CHECK(mul(f, inverse(f)).coeffs() == IntSeries::one(6).coeffs());
  IntSeries m = s({-1, 4, 4, 1});
  CHECK(mul(m, inverse(m)).coeffs() == IntSeries::one(4).coeffs());
  CHECK_THROWS(inverse(s({2, 1})));
}

TEST_CASE("pow with positive, zero, and negative exponents") {
  IntSeries f = s({1, 1, 0, 0, 0, 0});
  CHECK(pow(f, 2).coeffs() == s({1, 2, 1, 0, 0, 0}).coeffs());
  CHECK(pow(f, 5)[3] == 10);
  CHECK(pow(f, 0).coeffs() == IntSeries::one(6).coeffs());
  CHECK(pow(f, -1).coeffs() == s({1, -1, 1, -1, 1, -1}).coeffs());
  CHECK(mul(pow(f, -3), pow(f, 3)).coeffs() == IntSeries::one(6).coeffs());
}

TEST_CASE("substitution and scaling") {
  IntSeries f = s({1, 2, 3});
  CHECK(substitute_xk(f, 2).coeffs() == s({1, 0, 2, 0, 3}).coeffs());
  CHECK(substitute_xk(f, 3, 4).coeffs() == s({1, 0, 0, 2}).coeffs());
  CHECK(scale_x(f, mpz_class(2)).coeffs() == s({1, 4, 12}).coeffs());
  CHECK(scale_x(f, mpz_class(-1)).coeffs() == s({1, -2, 3}).coeffs());
  CHECK(truncate(f, 2).coeffs() == s({1, 2}).coeffs());
  CHECK(truncate(f, 5).coeffs() == s({1, 2, 3, 0, 0}).coeffs());
}

TEST_CASE("eq_to_order") {
  CHECK(eq_to_order(s({1, 2, 3}), s({1, 2, 7}), 2));
  CHECK_FALSE(eq_to_order(s({1, 2, 3}), s({1, 2, 7}), 3));
}

TEST_CASE("mod-reduced series") {
  ModSeries f = reduce_mod(s({1, -1, 5, 8}), 4);
  CHECK(f.modulus() == 4);
  CHECK(f[0] == 1);
  CHECK(f[1] == 3);
  CHECK(f[2] == 1);
  CHECK(f[3] == 0);
  ModSeries g = ModSeries::one(4, 4);
  CHECK(add(f, g)[0] == 2);
  CHECK(sub(g, f)[1] == 1);
  CHECK(mul(f, f)[1] == 2);  // (1+3x)^2 = 1+6x+... == 1+2x mod 4
  CHECK(pow(f, 2)[1] == 2);
  CHECK(substitute_xk(f, 2, 4)[2] == 3);
  CHECK(truncate(f, 2).order() == 2);
}

TEST_CASE("mod and exact powers agree") {
  IntSeries f = s({1, 7, -2, 5, 3, -8, 1, 0, 4, 2});
  for (long e : {2l, 3l, 5l}) {
    ModSeries a = reduce_mod(pow(f, e), 9);
    ModSeries b = pow(reduce_mod(f, 9), e);
    CHECK(a.coeffs() == b.coeffs());
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(s({1, 0, -3})) == "1 - 3*x^2");
  CHECK(to_string(s({1, 2, 1})) == "1 + 2*x + x^2");
  CHECK(to_string(s({0})) == "0");
}
