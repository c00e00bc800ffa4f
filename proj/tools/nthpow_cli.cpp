#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nthpow/bfile.hpp"
#include "nthpow/codes.hpp"
#include "nthpow/hanna.hpp"
#include "nthpow/lattice.hpp"
#include "nthpow/padic.hpp"
#include "nthpow/roots.hpp"
#include "nthpow/series.hpp"

namespace fs = std::filesystem;
using namespace nthpow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Human output is the same two-column data prefixed by a '#' summary, so
// every output mode re-ingests as a b-file.
void print_series(const IntSeries& f, bool bare, const std::string& head) {
  if (!bare) std::cout << "# " << head << "\n";
  std::cout << emit_bfile(from_series(f));
}

void print_values(const std::vector<mpz_class>& v, bool bare, const std::string& head) {
  if (!bare) std::cout << "# " << head << "\n";
  BFile b;
  b.values = v;
  std::cout << emit_bfile(b);
}

IntSeries load_series(const std::string& path, int order) {
  IntSeries f = to_series(load_bfile(path));
  int n = order > 0 ? order : std::min(f.order(), 1000);
  return truncate(f, std::min(n, f.order()));
}

int print_report(const Report& rep) {
  for (const auto& l : rep.lines)
    std::cout << (l.pass ? "PASS " : "FAIL ") << l.label << "\n";
  return rep.all_pass() ? kExitOk : kExitFail;
}

std::vector<long> parse_nspec(const std::string& spec) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stol(part));
      } else {
        long a = std::stol(part.substr(0, dots));
        long b = std::stol(part.substr(dots + 2));
        for (long n = a; n <= b; ++n) out.push_back(n);
      }
    } catch (const std::exception&) {
      throw std::runtime_error("bad n spec: " + spec);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (long n : out)
    if (n < 1) throw std::runtime_error("bad n spec: " + spec);
  if (out.empty()) throw std::runtime_error("bad n spec: " + spec);
  return out;
}

ThetaSeries theta_by_name(const std::string& which, int max_norm) {
  if (fs::is_regular_file(which))
    return theta_from_gram(load_gram(which), max_norm);
  bool zd = which.size() >= 2 && which[0] == 'Z' &&
            std::all_of(which.begin() + 1, which.end(),
                        [](char c) { return c >= '0' && c <= '9'; });
  if (zd)  // closed form, equal to enumerating the identity Gram matrix
    return zd_theta(std::stoi(which.substr(1)), max_norm + 1);
  return theta_from_gram(builtin_lattice(which), max_norm);
}

int run_scan(const std::string& spec, const std::string& target, int order,
             const std::string& cert_dir) {
  std::vector<long> ns = parse_nspec(spec);
  std::vector<fs::path> files;
  if (fs::is_regular_file(target)) {
    files.push_back(target);
  } else if (fs::is_directory(target)) {
    for (const auto& e : fs::directory_iterator(target))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    std::cerr << "scan: no such file or directory: " << target << "\n";
    return kExitUsage;
  }
  for (const auto& p : files) {
    IntSeries f = IntSeries::one(1);
    try {
      f = load_series(p.string(), order);
    } catch (const std::exception& e) {
      std::cout << p.string() << ": error: " << e.what() << "\n";
      continue;
    }
    if (f[0] != 1) {
      std::cout << p.string() << ": skipped (does not begin with 1)\n";
      continue;
    }
    bool one_mod4 = true;
    for (int i = 1; i < f.order() && one_mod4; ++i)
      if (f[i] % 4 != 0) one_mod4 = false;
    std::string flag = one_mod4 ? " [== 1 mod 4]" : "";
    for (long n : ns) {
      if (n == 2) {
        SquareTestResult st = square_test_mod4(f);
        if (!st.is_square) {
          std::cout << p.string() << " n=2: non-member at index "
                    << st.fail_index << flag << "\n";
          continue;
        }
      }
      MembershipVerdict v = is_nth_power(f, n);
      if (v.member) {
        std::cout << p.string() << " n=" << n << ": member (order "
                  << v.order_tested << ")" << flag << "\n";
        if (!cert_dir.empty() && v.root_prefix) {
          fs::create_directories(cert_dir);
          fs::path out = fs::path(cert_dir) /
                         (p.filename().string() + ".n" + std::to_string(n) + ".root");
          std::ofstream os(out);
          os << emit_bfile(from_series(*v.root_prefix));
        }
      } else {
        std::cout << p.string() << " n=" << n << ": non-member at index "
                  << *v.fail_index << flag << "\n";
      }
    }
  }
  return kExitOk;
}

int run_congruence(const std::string& which) {
  if (which == "rm") {
    Report rep = rm_congruence_check(6);
    for (int r = 1; r <= 3; ++r) {
      Report lim = rm_2adic_limit_check(r, 1, 1l << r, 6);
      rep.lines.insert(rep.lines.end(), lim.lines.begin(), lim.lines.end());
    }
    return print_report(rep);
  }
  if (which == "bch") return print_report(bch_conjecture_check(6));
  if (which == "bw") {
    Report rep;
    char buf[96];
    for (int m = 1; m <= 4; ++m) {
      ThetaSeries th = bw_theta(m, 25);
      bool ok = true;
      std::uint64_t mod = 1ull << (m + 1);
      for (int i = 1; i < th.order(); ++i)
        if (th[i] % mod != 0) ok = false;
      std::snprintf(buf, sizeof buf, "theta(BW_%d) == 1 mod 2^%d", 1 << m, m + 1);
      rep.lines.push_back({buf, ok});
    }
    for (int m = 2; m <= 4; ++m) {
      std::snprintf(buf, sizeof buf, "normalized theta(BW_%d) halving congruence", 1 << m);
      rep.lines.push_back({buf, bw_congruence_check(m, 25)});
    }
    rep.lines.push_back({"BW_16 minimal vector count 4320", bw_theta(4, 9)[8] == 4320});
    rep.lines.push_back({"kissing numbers converge 2-adically", kissing_2adic_check(4)});
    return print_report(rep);
  }
  if (which == "hanna2") {
    bool ok = verify_h2_equations(512);
    std::cout << (ok ? "PASS" : "FAIL")
              << " binary root functional equations to order 512\n";
    return ok ? kExitOk : kExitFail;
  }
  if (which == "hanna3") {
    bool ok = verify_h3_equations(243);
    std::cout << (ok ? "PASS" : "FAIL")
              << " ternary root functional equations to order 243\n";
    return ok ? kExitOk : kExitFail;
  }
  if (which == "postscript") {
    PostscriptResult ps = postscript_series(200);
    std::cout << (ps.one_mod8 ? "PASS" : "FAIL") << " f == 1 mod 8\n"
              << (ps.cube_product_mod9 ? "PASS" : "FAIL")
              << " f == prod (1-x^m)^3 mod 9\n"
              << (ps.twelfth_power ? "PASS" : "FAIL")
              << " 12th-power membership to order 200\n";
    return ps.all_hold() ? kExitOk : kExitFail;
  }
  std::cerr << "unknown congruence family: " << which
            << " (want rm|bw|bch|hanna2|hanna3|postscript)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact n-th-power tests for integer power series, with theta,"
               " weight-enumerator, and greedy-sequence generators"};
  app.require_subcommand(1);

  long n = 2;
  int order = 0, dim = 0, max_norm = 0, count = 0, rr = 0, mm = 0, tt = 0;
  long kk = 2, bound = 12;
  bool bare = false, want_root = false, want_mod = false;
  std::string path, name, spec, cert_dir;

  auto* c_root = app.add_subcommand("root", "exact n-th root of a series read from a b-file");
  c_root->add_option("-n", n, "root index")->required();
  c_root->add_option("--order", order, "truncation order (default min(len, 1000))");
  c_root->add_option("input", path, "input b-file")->required();
  c_root->add_flag("--bfile", bare, "bare b-file output");

  auto* c_test = app.add_subcommand("test", "n-th-power membership test with certificate");
  c_test->add_option("-n", n, "power index")->required();
  c_test->add_option("--order", order, "truncation order (default min(len, 1000))");
  c_test->add_option("input", path, "input b-file")->required();
  c_test->add_flag("--bfile", bare, "emit certificate root as bare b-file");

  auto* c_max = app.add_subcommand("maxpow", "all n up to a bound for which the series is an n-th power");
  c_max->add_option("--bound", bound, "largest n to try")->required();
  c_max->add_option("--order", order, "truncation order (default min(len, 1000))");
  c_max->add_option("input", path, "input b-file")->required();
  c_max->add_flag("--bfile", bare, "bare b-file output");

  auto* c_theta = app.add_subcommand("theta", "theta series of a builtin lattice or a Gram-matrix file");
  c_theta->add_option("lattice", name, "builtin name (Zd, A2, D4, E6, E6dual, E8, K12, BW16) or gram file")->required();
  c_theta->add_option("--max-norm", max_norm, "largest norm to count")->required();
  c_theta->add_flag("--bfile", bare, "bare b-file output");

  auto* c_ext = app.add_subcommand("theta-extremal", "extremal even unimodular theta series");
  c_ext->add_option("-d", dim, "dimension (multiple of 8)")->required();
  c_ext->add_option("--order", order, "series order")->required();
  c_ext->add_flag("--bfile", bare, "bare b-file output");

  auto* c_wenum = app.add_subcommand("wenum", "weight enumerators");
  c_wenum->require_subcommand(1);
  auto* w_rm = c_wenum->add_subcommand("rm", "Reed-Muller code RM(r, m)");
  w_rm->add_option("r", rr, "order r")->required();
  w_rm->add_option("m", mm, "length exponent m")->required();
  w_rm->add_flag("--bfile", bare, "bare b-file output");
  auto* w_bch = c_wenum->add_subcommand("bch", "extended primitive BCH code");
  w_bch->add_option("m", mm, "length exponent m (length 2^m)")->required();
  w_bch->add_option("t", tt, "designed distance 2t-1")->required();
  w_bch->add_flag("--bfile", bare, "bare b-file output");
  auto* w_fix = c_wenum->add_subcommand("fixture", "named reference enumerator");
  w_fix->add_option("name", name, "golay, rao_reddy, s18, golay3")->required();
  w_fix->add_flag("--bfile", bare, "bare b-file output");

  auto* c_cong = app.add_subcommand("congruence", "verify a congruence family");
  c_cong->add_option("family", name, "rm | bw | bch | hanna2 | hanna3 | postscript")->required();

  auto* c_hanna = app.add_subcommand("hanna", "greedy k-th-power digit sequences");
  c_hanna->add_option("-k", kk, "root index k")->required();
  c_hanna->add_option("-N", count, "number of terms")->required();
  c_hanna->add_flag("--root", want_root, "print the exact root instead of the digits");
  c_hanna->add_flag("--mod", want_mod, "print the root mod mu(k)/k instead of the digits");
  c_hanna->add_flag("--bfile", bare, "bare b-file output");

  auto* c_perm = app.add_subcommand("perm", "least-unused permutation with integral cube root");
  c_perm->add_option("-N", count, "number of terms")->required();
  c_perm->add_flag("--bfile", bare, "bare b-file output");

  auto* c_scan = app.add_subcommand("scan", "membership scan over a directory of b-files");
  c_scan->add_option("-n", spec, "power indices, e.g. 2 or 2..24 or 2,3,4")->required();
  c_scan->add_option("target", path, "directory (or single b-file)")->required();
  c_scan->add_option("--order", order, "truncation order (default min(len, 1000))");
  c_scan->add_option("--cert-dir", cert_dir, "write member root certificates here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_root) {
      IntSeries f = load_series(path, order);
      MembershipVerdict v = nth_root(f, n);
      if (!v.member) {
        std::cout << "not an n-th power for n=" << n << " to order "
                  << v.order_tested << ": fails at index " << *v.fail_index << "\n";
        return kExitFail;
      }
      print_series(*v.root_prefix, bare,
                   "exact " + std::to_string(n) + "-th root, order " +
                       std::to_string(v.order_tested));
      return kExitOk;
    }
    if (*c_test) {
      IntSeries f = load_series(path, order);
      MembershipVerdict v = is_nth_power(f, n);
      if (!v.member) {
        std::cout << "non-member for n=" << n << ": first obstruction at index "
                  << *v.fail_index << " (order " << v.order_tested << ")\n";
        return kExitFail;
      }
      if (bare) {
        print_series(*v.root_prefix, true, "");
      } else {
        std::cout << "member for n=" << n << " to order " << v.order_tested
                  << "; root certificate:\n";
        print_series(*v.root_prefix, false, "certificate root");
      }
      return kExitOk;
    }
    if (*c_max) {
      IntSeries f = load_series(path, order);
      std::vector<long> ns = max_power_order(f, bound);
      if (bare) {
        BFile b;
        for (long v : ns) b.values.emplace_back(v);
        std::cout << emit_bfile(b);
      } else {
        std::cout << "n-th power to order " << f.order() << " for n:";
        for (long v : ns) std::cout << ' ' << v;
        std::cout << "\n";
      }
      return kExitOk;
    }
    if (*c_theta) {
      ThetaSeries th = theta_by_name(name, max_norm);
      print_series(th, bare, "theta of " + name + ", norms 0.." + std::to_string(max_norm));
      return kExitOk;
    }
    if (*c_ext) {
      print_series(extremal_theta(dim, order), bare,
                   "extremal theta, dimension " + std::to_string(dim));
      return kExitOk;
    }
    if (*w_rm) {
      print_series(weight_enumerator(rm_code(rr, mm)), bare,
                   "weight enumerator of RM(" + std::to_string(rr) + ", " +
                       std::to_string(mm) + ")");
      return kExitOk;
    }
    if (*w_bch) {
      LinearCode c = bch_extended(mm, tt);
      print_series(weight_enumerator(c), bare,
                   "weight enumerator of extended BCH [" + std::to_string(c.n) +
                       ", " + std::to_string(c.k) + "]");
      return kExitOk;
    }
    if (*w_fix) {
      auto table = fixture_enumerators();
      auto it = table.find(name);
      if (it == table.end()) {
        std::cerr << "unknown fixture: " << name << "\n";
        return kExitUsage;
      }
      print_series(it->second, bare, "weight enumerator of " + name);
      return kExitOk;
    }
    if (*c_cong) return run_congruence(name);
    if (*c_hanna) {
      if (want_root && want_mod) {
        std::cerr << "--root and --mod are mutually exclusive\n";
        return kExitUsage;
      }
      if (want_root) {
        HannaPair hp = hanna_sequence(kk, count);
        print_series(hp.root, bare, "exact root of the greedy sequence, k=" + std::to_string(kk));
      } else if (want_mod) {
        ModSeries s = hanna_root_mod(kk, count);
        std::vector<mpz_class> v;
        for (int i = 0; i < s.order(); ++i) v.emplace_back(static_cast<unsigned long>(s[i]));
        print_values(v, bare, "root mod " + std::to_string(s.modulus()) + ", k=" + std::to_string(kk));
      } else {
        std::vector<int> d = hanna_digits(kk, count);
        std::vector<mpz_class> v(d.begin(), d.end());
        print_values(v, bare, "greedy digit sequence, k=" + std::to_string(kk));
      }
      return kExitOk;
    }
    if (*c_perm) {
      std::vector<long> p = permutation_sequence(count);
      std::vector<mpz_class> v(p.begin(), p.end());
      print_values(v, bare, "least-unused permutation with integral cube root");
      return kExitOk;
    }
    if (*c_scan) return run_scan(spec, path, order, cert_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
