// zeroapn: command-line front end.
//
// Exit codes: 0 success (or "is 0-APN" / "all checks pass"), 1 negative
// result, 2 usage or input error.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeroapn/artifacts.hpp"
#include "zeroapn/diff_analysis.hpp"
#include "zeroapn/families.hpp"
#include "zeroapn/int_expr.hpp"
#include "zeroapn/report.hpp"
#include "zeroapn/resultant.hpp"
#include "zeroapn/verifier.hpp"

namespace {

using namespace zapn;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned check_n(unsigned n) {
  if (n < 1 || n > FieldContext::kMaxDegree)
    throw UsageError("n must be in [1, " + std::to_string(FieldContext::kMaxDegree) + "]");
  return n;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Two polynomials separated by one or more blank lines.
std::pair<std::string, std::string> split_blocks(const std::string& text) {
  std::vector<std::string> blocks(1);
  std::istringstream in(text);
  std::string line;
  bool gap = false;
  while (std::getline(in, line)) {
    const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      gap = !blocks.back().empty();
      continue;
    }
    if (gap) {
      blocks.emplace_back();
      gap = false;
    }
    blocks.back() += line + '\n';
  }
  if (blocks.size() != 2 || blocks[0].empty()) throw UsageError("expected two polynomials separated by a blank line");
  return {blocks[0], blocks[1]};
}

std::size_t var_index(const std::string& v) {
  if (v == "x") return 0;
  if (v == "y") return 1;
  throw UsageError("--var must be x or y");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"0-APN power functions over F_{2^n}: scans, checks, symbolic replay"};
  app.require_subcommand(1);

  int threads = 0;
  unsigned table_max_n = 24;
  if (const char* env = std::getenv("ZEROAPN_TABLE_MAX_N")) table_max_n = static_cast<unsigned>(std::atoi(env));
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)")->check(CLI::NonNegativeNumber);
  app.add_option("--table-max-n", table_max_n,
                 "largest n that gets log/antilog tables (env ZEROAPN_TABLE_MAX_N)")
      ->capture_default_str();

  // zero-apn
  auto* zero = app.add_subcommand("zero-apn", "classify one exponent");
  unsigned zn = 0;
  std::string zd;
  std::string zformat = "text";
  zero->add_option("-n", zn, "field degree")->required();
  zero->add_option("-d", zd, "exponent, e.g. 45, -9 or 3*2^5-7")->required()->allow_extra_args(false);
  zero->add_option("--format", zformat)->check(CLI::IsMember({"text", "json"}));

  // scan
  auto* scan = app.add_subcommand("scan", "classify every cyclotomic class for one n");
  unsigned sn = 0;
  unsigned scap = 16;
  std::string sformat = "csv";
  bool sfilter = false;
  scan->add_option("-n", sn, "field degree")->required();
  scan->add_option("--format", sformat)->check(CLI::IsMember({"csv", "json", "text"}))->capture_default_str();
  scan->add_option("--cap", scap, "refuse n above this")->capture_default_str();
  scan->add_flag("--zero-apn-not-apn", sfilter, "only rows that are 0-APN but not APN");

  // factor
  auto* fact = app.add_subcommand("factor", "factor a polynomial over F_2");
  std::string fhex;
  std::string fexpr;
  fact->add_option("hex", fhex, "hex coefficients, lowest digit holds x^0..x^3");
  fact->add_option("--expr", fexpr, "polynomial in x, e.g. x^9+(x+1)^9");

  // resultant
  auto* res = app.add_subcommand("resultant", "resultant of two bivariate polynomials");
  std::string rfile;
  std::string rvar = "y";
  res->add_option("file", rfile, "two polynomials separated by a blank line ('-' for stdin)")->required();
  res->add_option("--var", rvar, "variable to eliminate")->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "check theorems: replay, brute force, subfields, not-APN");
  std::string vtarget = "all";
  unsigned vnmax = 19;
  std::string vformat = "text";
  ver->add_option("target", vtarget, "all or a theorem id TH1..TH7");
  ver->add_option("--theorem", vtarget, "theorem id");
  ver->add_option("--n-max", vnmax, "largest n for brute force")->capture_default_str();
  ver->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));

  // table1
  auto* tab = app.add_subcommand("table1", "recompute the table of unexplained 0-APN exponents");
  std::vector<unsigned> tn{9, 10, 11};
  std::string tformat = "text";
  tab->add_option("--n", tn, "field degrees")->delimiter(',');
  tab->add_option("--format", tformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  const FieldOptions field{table_max_n};

  try {
    if (*zero) {
      const unsigned n = check_n(zn);
      std::int64_t raw = 0;
      try {
        raw = evaluate_int_expression(zd);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const FieldContext ctx(n, field);
      const Exponent d(raw, n, zd);
      const auto r = is_zero_apn_power(ctx, d);
      const auto s = differential_spectrum(ctx, d);
      const bool one = is_one_apn(ctx, d, s);
      const auto cls = cyclotomic_class(n, d.value());
      if (zformat == "json") {
        nlohmann::json doc{{"schema", kJsonSchema}, {"kind", "zero-apn"}, {"n", n},
                           {"d", d.value()},      {"d_raw", raw},       {"canonical_d", cls.canonical},
                           {"is_zero_apn", r.zero_apn}, {"is_apn", s.delta == 2}, {"is_one_apn", one},
                           {"delta", s.delta},    {"witness", nullptr}};
        if (r.witness) doc["witness"] = ctx.to_hex(*r.witness);
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << "n = " << n << ", d = " << d.value() << " (input " << zd << ", class of " << cls.canonical
                  << ")\n";
        std::cout << "0-APN: " << (r.zero_apn ? "yes" : "no") << '\n';
        if (r.witness)
          std::cout << "witness: " << ctx.to_hex(*r.witness) << " = " << ctx.to_poly_string(*r.witness) << '\n';
        std::cout << "1-APN: " << (one ? "yes" : "no") << '\n';
        std::cout << "APN: " << (s.delta == 2 ? "yes" : "no") << " (differential uniformity " << s.delta << ")\n";
      }
      return r.zero_apn ? 0 : 1;
    }

    if (*scan) {
      const unsigned n = check_n(sn);
      if (n > scap) throw UsageError("n = " + std::to_string(n) + " exceeds the scan cap " + std::to_string(scap));
      const FieldContext ctx(n, field);
      auto rows = classify_all_exponents(ctx, {true, scap});
      if (sfilter) std::erase_if(rows, [](const ApnClassification& r) { return !r.is_zero_apn || r.is_apn; });
      if (sformat == "csv")
        std::cout << classification_csv(rows);
      else if (sformat == "json")
        std::cout << classification_json(n, rows);
      else
        std::cout << classification_text(n, rows);
      return 0;
    }

    if (*fact) {
      if (fhex.empty() == fexpr.empty()) throw UsageError("give exactly one of a hex string or --expr");
      BinaryPolynomial p;
      try {
        p = fexpr.empty() ? BinaryPolynomial::from_hex(fhex) : parse_univariate(fexpr);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      if (p.is_zero()) throw UsageError("cannot factor the zero polynomial");
      const auto f = factor(p);
      std::cout << "input: " << p.to_hex() << " (degree " << p.deg() << ")\n";
      std::cout << f.to_string() << '\n';
      return 0;
    }

    if (*res) {
      const std::size_t v = var_index(rvar);
      BivariatePolynomial f;
      BivariatePolynomial g;
      try {
        const auto [a, b] = split_blocks(read_file(rfile));
        f = parse_polynomial_block<2>(a);
        g = parse_polynomial_block<2>(b);
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      if (f.deg_in(v) == 0 || g.deg_in(v) == 0) throw UsageError("both polynomials must involve --var");
      const auto r = resultant(f, g, v);
      const auto u = r.to_univariate(v == 0 ? 1 : 0);
      const char other = v == 0 ? 'y' : 'x';
      std::cout << "hex: " << u.to_hex() << '\n';
      std::cout << "poly: " << u.to_string(other) << '\n';
      return 0;
    }

    if (*ver) {
      std::vector<ProofArtifact> selected;
      std::string key = vtarget;
      for (auto& c : key) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (key == "ALL") {
        selected = load_all_artifacts();
      } else {
        try {
          selected.push_back(load_artifact(key));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (vnmax < 3 || vnmax > FieldContext::kMaxDegree) throw UsageError("--n-max out of range");
      std::vector<TheoremVerification> runs;
      for (const auto& a : selected) runs.push_back(verify_theorem(a, vnmax, field));
      std::cout << (vformat == "json" ? verification_json(runs) : verification_text(runs));
      const bool ok = std::all_of(runs.begin(), runs.end(), [](const TheoremVerification& v) { return v.passed(); });
      return ok ? 0 : 1;
    }

    if (*tab) {
      for (auto n : tn) check_n(n);
      const auto rows = reproduce_table1(tn, field);
      std::cout << (tformat == "json" ? table1_json(rows) : table1_text(rows));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
