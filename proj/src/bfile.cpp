#include "nthpow/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nthpow {

BFile parse_bfile(const std::string& text) {
  BFile b;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    std::string idx_tok, val_tok, extra;
    if (!(ss >> idx_tok >> val_tok))
      throw std::runtime_error("bfile line " + std::to_string(lineno) +
                               ": expected \"index value\"");
    if (ss >> extra)
      throw std::runtime_error("bfile line " + std::to_string(lineno) +
                               ": trailing token \"" + extra + "\"");
    long idx;
    try {
      size_t pos = 0;
      idx = std::stol(idx_tok, &pos);
      if (pos != idx_tok.size()) throw std::invalid_argument(idx_tok);
    } catch (const std::exception&) {
      throw std::runtime_error("bfile line " + std::to_string(lineno) +
                               ": bad index \"" + idx_tok + "\"");
    }
    mpz_class val;
    if (val.set_str(val_tok, 10) != 0)
      throw std::runtime_error("bfile line " + std::to_string(lineno) +
                               ": bad value \"" + val_tok + "\"");
    if (first) {
      b.offset = idx;
      first = false;
    } else if (idx != b.offset + static_cast<long>(b.values.size())) {
      throw std::runtime_error("bfile line " + std::to_string(lineno) +
                               ": gap at index " +
                               std::to_string(b.offset + b.values.size()));
    }
    b.values.push_back(std::move(val));
  }
  if (first) throw std::runtime_error("bfile: no data lines");
  return b;
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bfile(ss.str());
}

std::string emit_bfile(const BFile& b) {
  std::ostringstream out;
  for (size_t i = 0; i < b.values.size(); ++i)
    out << b.offset + static_cast<long>(i) << ' ' << b.values[i].get_str()
        << '\n';
  return out.str();
}

IntSeries to_series(const BFile& b) {
  if (b.offset != 0 && b.offset != 1)
    throw std::runtime_error("b-file offset must be 0 or 1, got " +
                             std::to_string(b.offset));
  std::vector<mpz_class> c;
  c.reserve(b.values.size() + (b.offset == 1));
  if (b.offset == 1) c.emplace_back(1);
  for (const auto& v : b.values) c.push_back(v);
  return IntSeries(std::move(c));
}

BFile from_series(const IntSeries& f) {
  BFile b;
  b.offset = 0;
  b.values = f.coeffs();
  return b;
}

}  // namespace nthpow
