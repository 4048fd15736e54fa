#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibcube/certificate.hpp"
#include "fibcube/error.hpp"
#include "fibcube/fibstrings.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/oracle.hpp"
#include "fibcube/packing.hpp"

namespace fibcube::cli {

namespace {

// `pack` refuses to materialize more cubes than this.
constexpr std::size_t kMaxPackedCubes = std::size_t{1} << 22;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One line of JSON with raw (possibly arbitrary-precision) numeric fields.
class JsonLine {
 public:
  JsonLine& number(std::string_view key, const std::string& digits) {
    return raw(key, digits);
  }
  JsonLine& number(std::string_view key, const SeqValue& value) {
    return raw(key, value.str());
  }
  JsonLine& text(std::string_view key, std::string_view value) {
    return raw(key, nlohmann::json(std::string(value)).dump());
  }
  JsonLine& raw(std::string_view key, const std::string& encoded) {
    body_ += body_.empty() ? "{" : ",";
    body_ += nlohmann::json(std::string(key)).dump();
    body_ += ':';
    body_ += encoded;
    return *this;
  }
  std::string str() const { return body_.empty() ? "{}" : body_ + "}"; }

 private:
  std::string body_;
};

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += pad_right(row[c], width[c]);
      } else {
        line += "  " + pad_left(row[c], width[c]);
      }
    }
    out << line << '\n';
  }
}

int cmd_table(int kmax, int nmax, bool json, std::ostream& out) {
  if (kmax < 0 || nmax < 0) {
    throw Error(Errc::kOutOfRange, "table: --kmax and --nmax must be >= 0");
  }
  if (json) {
    for (int n = 0; n <= nmax; ++n) {
      JsonLine q;
      for (int k = 1; k <= kmax; ++k) q.number(std::to_string(k), q_eval(k, n));
      out << JsonLine()
                 .number("n", std::to_string(n))
                 .number("order", fib(n + 2))
                 .raw("q", q.str())
                 .str()
          << '\n';
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n"});
  rows.push_back({"|G_n|"});
  for (int k = 1; k <= kmax; ++k) rows.push_back({"q_" + std::to_string(k)});
  for (int n = 0; n <= nmax; ++n) {
    rows[0].push_back(std::to_string(n));
    rows[1].push_back(fib(n + 2).str());
    for (int k = 1; k <= kmax; ++k) rows[static_cast<std::size_t>(k) + 1].push_back(q_eval(k, n).str());
  }
  print_grid(out, rows);
  return kOk;
}

int cmd_qk(int k, int n, const std::string& method_name, bool json,
           std::ostream& out, std::ostream& err) {
  std::vector<Method> methods;
  if (method_name == "all") {
    methods.assign(kAllMethods.begin(), kAllMethods.end());
  } else if (auto m = parse_method(method_name)) {
    methods.push_back(*m);
  } else {
    throw UsageError("qk: unknown method '" + method_name + "'");
  }
  std::optional<SeqValue> first;
  bool agree = true;
  for (Method m : methods) {
    const SeqValue value = q_eval(k, n, m);
    if (first && *first != value) agree = false;
    if (!first) first = value;
    if (json) {
      out << JsonLine()
                 .number("k", std::to_string(k))
                 .number("n", std::to_string(n))
                 .text("method", to_string(m))
                 .number("value", value)
                 .str()
          << '\n';
    } else {
      out << pad_right(std::string(to_string(m)), 14) << "  " << value << '\n';
    }
  }
  if (!agree) {
    err << "error: counting methods disagree for k=" << k << " n=" << n << '\n';
    return kDomainError;
  }
  return kOk;
}

std::string dirs_text(const std::vector<int>& dirs) {
  std::string s = "{";
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dirs[i]);
  }
  return s + "}";
}

int cmd_pack(int k, int n, const std::string& format, std::ostream& out) {
  if (format != "json" && format != "text") {
    throw UsageError("pack: --format must be json or text");
  }
  if (k >= 1 && n >= 0 && q_eval(k, n) > kMaxPackedCubes) {
    throw Error(Errc::kOutOfRange, "pack: packing of " + q_eval(k, n).str() +
                                       " cubes is too large to emit");
  }
  const Packing packing = build_packing(k, n);
  if (format == "json") {
    out << to_json(packing) << '\n';
    return kOk;
  }
  out << "# n=" << packing.n << " k=" << packing.k
      << " count=" << packing.cubes.size() << '\n';
  for (const auto& cube : packing.cubes) {
    out << cube.base().str() << ' ' << dirs_text(cube.dirs()) << '\n';
  }
  return kOk;
}

std::string index_list(const std::vector<std::size_t>& indices) {
  std::string s = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "]";
}

int cmd_verify(const std::string& source, bool json, std::istream& in,
               std::ostream& out, std::ostream& err) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(source, std::ios::binary);
    if (!file) throw UsageError("verify: cannot open '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }

  Certificate certificate;
  try {
    certificate = parse_certificate(text);
  } catch (const CertificateError& e) {
    if (json) {
      out << JsonLine()
                 .text("verdict", "malformed")
                 .text("error", e.what())
                 .raw("offending_cubes", index_list(e.offending_cubes()))
                 .str()
          << '\n';
    } else {
      out << "verdict: malformed\n";
    }
    err << "error: " << e.what() << '\n';
    return kRejectedCertificate;
  }

  const VerificationReport report = verify_packing(certificate);
  std::vector<std::size_t> invalid;
  for (const auto& issue : report.invalid_cubes) invalid.push_back(issue.index);

  if (json) {
    std::string pairs = "[";
    for (std::size_t i = 0; i < report.overlapping_pairs.size(); ++i) {
      if (i) pairs += ",";
      pairs += "[" + std::to_string(report.overlapping_pairs[i].first) + "," +
               std::to_string(report.overlapping_pairs[i].second) + "]";
    }
    pairs += "]";
    out << JsonLine()
               .number("n", std::to_string(report.n))
               .number("k", std::to_string(report.k))
               .number("count", std::to_string(report.count))
               .raw("count_field_matches", report.count_field_matches ? "true" : "false")
               .raw("invalid_cubes", index_list(invalid))
               .raw("wrong_dimension", index_list(report.wrong_dimension))
               .raw("overlapping_pairs", pairs)
               .number("covered", report.covered)
               .number("order", report.order)
               .number("known_maximum", report.known_maximum)
               .text("verdict", to_string(report.verdict))
               .str()
        << '\n';
  } else {
    out << "n=" << report.n << " k=" << report.k << " cubes=" << report.count << '\n';
    if (!report.count_field_matches) {
      out << "count field " << certificate.count << " does not match "
          << report.count << " listed cubes\n";
    }
    for (const auto& issue : report.invalid_cubes) {
      out << "cube " << issue.index << " invalid: " << issue.message << '\n';
    }
    for (std::size_t i : report.wrong_dimension) {
      out << "cube " << i << " does not have dimension " << report.k << '\n';
    }
    for (const auto& [a, b] : report.overlapping_pairs) {
      out << "cubes " << a << " and " << b << " share a vertex\n";
    }
    out << "covered " << report.covered << " of " << report.order << " vertices\n";
    out << "known maximum " << report.known_maximum << '\n';
    out << "verdict: " << to_string(report.verdict) << '\n';
  }
  if (report.verdict == Verdict::kExceedsKnownMaximum) {
    err << "error: certificate has more cubes than the known maximum q_"
        << report.k << "(" << report.n << ") = " << report.known_maximum << '\n';
  }
  return report.accepted() ? kOk : kRejectedCertificate;
}

std::uint64_t oracle_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FIBCUBE_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError("FIBCUBE_ORACLE_BUDGET must be a nonnegative integer");
    }
    return value;
  }
  return kDefaultOracleBudget;
}

int cmd_oracle(int k, int n, const std::optional<std::uint64_t>& budget_flag,
               bool witness, bool json, std::ostream& out, std::ostream& err) {
  const OracleResult result =
      oracle_max_packing(n, k, OracleOptions{oracle_budget(budget_flag)});
  if (json) {
    out << JsonLine()
               .number("k", std::to_string(k))
               .number("n", std::to_string(n))
               .number("count", std::to_string(result.count))
               .raw("exact", result.exact() ? "true" : "false")
               .number("nodes", std::to_string(result.nodes))
               .str()
        << '\n';
  } else {
    out << "q_" << k << "(" << n << ") " << (result.exact() ? "= " : ">= ")
        << result.count << "  (" << (result.exact() ? "exact" : "lower bound")
        << ", " << result.nodes << " search nodes)\n";
  }
  if (witness) out << to_json(result.witness) << '\n';
  if (!result.exact()) {
    err << "error: node budget exhausted; " << result.count
        << " is only a lower bound\n";
    return kDomainError;
  }
  return kOk;
}

int cmd_ratio(int k, int nmax, int digits, bool json, std::ostream& out) {
  if (nmax < 0) throw Error(Errc::kOutOfRange, "ratio: --nmax must be >= 0");
  if (digits < 0) throw UsageError("ratio: --digits must be >= 0");
  std::vector<std::vector<std::string>> rows{{"n", "q", "order", "ratio"}};
  for (int n = 0; n <= nmax; ++n) {
    const SeqValue q = q_eval(k, n);
    const SeqValue order = fib(n + 2);
    const Rational ratio = density_ratio(k, n);
    const std::string decimal = to_decimal(ratio, digits);
    if (json) {
      out << JsonLine()
                 .number("k", std::to_string(k))
                 .number("n", std::to_string(n))
                 .number("q", q)
                 .number("order", order)
                 .text("ratio", ratio.str())
                 .text("decimal", decimal)
                 .str()
          << '\n';
    } else {
      rows.push_back({std::to_string(n), q.str(), order.str(), decimal});
    }
  }
  if (!json) print_grid(out, rows);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint hypercubes in Fibonacci cubes", "fibcube"};
  app.require_subcommand(1);

  int kmax = 3, nmax = 5;
  bool json = false;
  auto* table = app.add_subcommand("table", "Tabulate |G_n| and q_k(n)");
  table->add_option("--kmax", kmax, "largest cube dimension")->required();
  table->add_option("--nmax", nmax, "largest order")->required();
  table->add_flag("--json", json, "line-delimited JSON");

  int k = 1, n = 0;
  std::string method = "fib-recurrence";
  auto* qk = app.add_subcommand("qk", "Evaluate q_k(n)");
  qk->add_option("-k", k, "cube dimension")->required();
  qk->add_option("-n", n, "order of the Fibonacci cube")->required();
  qk->add_option("--method", method,
                 "recurrence|fib-recurrence|closed|convolution|genfun|all");
  qk->add_flag("--json", json, "line-delimited JSON");

  std::string format = "text";
  auto* pack = app.add_subcommand("pack", "Emit a maximum packing certificate");
  pack->add_option("-k", k, "cube dimension")->required();
  pack->add_option("-n", n, "order of the Fibonacci cube")->required();
  pack->add_option("--format", format, "json|text");

  std::string source;
  auto* verify = app.add_subcommand("verify", "Check a packing certificate");
  verify->add_option("certificate", source, "file path, or - for stdin")->required();
  verify->add_flag("--json", json, "JSON report");

  std::optional<std::uint64_t> budget;
  bool witness = false;
  auto* oracle = app.add_subcommand("oracle", "Exact search for q_k(n)");
  oracle->add_option("-k", k, "cube dimension")->required();
  oracle->add_option("-n", n, "order of the Fibonacci cube")->required();
  oracle->add_option("--budget", budget, "search node limit");
  oracle->add_flag("--witness", witness, "print the witness certificate");
  oracle->add_flag("--json", json, "JSON summary");

  int digits = 12;
  auto* ratio = app.add_subcommand("ratio", "Tabulate q_k(n) / |G_n|");
  ratio->add_option("-k", k, "cube dimension")->required();
  ratio->add_option("--nmax", nmax, "largest order")->required();
  ratio->add_option("--digits", digits, "fractional digits");
  ratio->add_flag("--json", json, "line-delimited JSON");

  std::vector<const char*> argv{"fibcube"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*table) return cmd_table(kmax, nmax, json, out);
    if (*qk) return cmd_qk(k, n, method, json, out, err);
    if (*pack) return cmd_pack(k, n, format, out);
    if (*verify) return cmd_verify(source, json, in, out, err);
    if (*oracle) return cmd_oracle(k, n, budget, witness, json, out, err);
    if (*ratio) return cmd_ratio(k, nmax, digits, json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace fibcube::cli
