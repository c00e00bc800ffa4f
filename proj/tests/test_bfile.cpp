#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nthpow/bfile.hpp"

using namespace nthpow;

TEST_CASE("basic parse") {
  BFile b = parse_bfile("0 1\n1 2\n2 1\n");
  CHECK(b.offset == 0);
  REQUIRE(b.values.size() == 3);
  CHECK(b.values[1] == 2);
}

TEST_CASE("comments, blanks, offset 1") {
  BFile b = parse_bfile("# comment\n\n1 5\n2 7\n");
  CHECK(b.offset == 1);
  REQUIRE(b.values.size() == 2);
  CHECK(b.values[0] == 5);
}

TEST_CASE("huge values survive exactly") {
  std::string big = "123456789012345678901234567890123456789";
  BFile b = parse_bfile("0 1\n1 -" + big + "\n");
  CHECK(b.values[1] == mpz_class("-" + big));
}

TEST_CASE("strictness") {
  CHECK_THROWS_WITH_AS(parse_bfile("0 1\n2 3\n"), doctest::Contains("gap at index 1"),
                       std::runtime_error);
  CHECK_THROWS(parse_bfile("0\n"));
  CHECK_THROWS(parse_bfile("0 1 2\n"));
  CHECK_THROWS(parse_bfile("a 1\n"));
  CHECK_THROWS(parse_bfile("0 x\n"));
  CHECK_THROWS(parse_bfile(""));
  CHECK_THROWS(parse_bfile("# only comments\n"));
}

TEST_CASE("emit then parse round-trips") {
  BFile b;
  b.offset = 1;
  b.values = {mpz_class(5), mpz_class(-7), mpz_class("99999999999999999999")};
  BFile r = parse_bfile(emit_bfile(b));
  CHECK(r.offset == b.offset);
  CHECK(r.values == b.values);
}

TEST_CASE("series conversion") {
  BFile b0 = parse_bfile("0 1\n1 4\n2 9\n");
  CHECK(to_series(b0).coeffs() ==
        std::vector<mpz_class>({mpz_class(1), mpz_class(4), mpz_class(9)}));
  BFile b1 = parse_bfile("1 4\n2 9\n");
  CHECK(to_series(b1).coeffs() ==
        std::vector<mpz_class>({mpz_class(1), mpz_class(4), mpz_class(9)}));
  BFile b5 = parse_bfile("5 1\n6 2\n");
  CHECK_THROWS(to_series(b5));
  BFile back = from_series(to_series(b0));
  CHECK(back.offset == 0);
  CHECK(back.values == b0.values);
}
