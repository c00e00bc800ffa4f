#pragma once

#include <string>
#include <vector>

#include "nthpow/series.hpp"

namespace nthpow {

// Flat sequence file: one "index value" pair per line, indices consecutive
// from offset; '#' lines and blank lines are ignored on input.
struct BFile {
  long offset = 0;
  std::vector<mpz_class> values;
};

// Strict parse; throws std::runtime_error naming the offending line on any
// malformed pair or index gap.
BFile parse_bfile(const std::string& text);
BFile load_bfile(const std::string& path);

// Inverse of parse: "index value\n" lines, no comments.
std::string emit_bfile(const BFile& b);

// Series view: offset 0 is taken as-is; offset 1 gets a constant term 1
// prepended (sequence listings that start at the x^1 coefficient); other
// offsets are rejected.
IntSeries to_series(const BFile& b);

// Series back to a b-file at offset 0.
BFile from_series(const IntSeries& f);

}  // namespace nthpow
