#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hfub/combinat.hpp"
#include "hfub/families.hpp"
#include "hfub/transforms.hpp"
#include "hfub/verify.hpp"

namespace hfub::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::plain;
}

json coefficients_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// Prints rows with columns padded to a common width.
void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        line += row[i];
      } else {
        line += row[i] + std::string(width[i] - row[i].size() + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string family;
  int n = 0;
  std::optional<int> nu;
  std::optional<std::string> at;
  std::string method;
  std::string format = "plain";
};

/// Result of a compute: either a polynomial or a single value.
struct Computed {
  std::optional<Polynomial> poly;
  std::optional<Rational> value;
};

void forbid_nu(const ComputeArgs& a) {
  if (a.nu) throw UsageError("--nu is not used by family '" + a.family + "'");
}

void forbid_at(const ComputeArgs& a) {
  if (a.at) throw UsageError("--at is not used by family '" + a.family + "'");
}

void require_methods(const ComputeArgs& a, std::initializer_list<const char*> allowed) {
  if (a.method.empty()) return;
  for (const char* m : allowed) {
    if (a.method == m) return;
  }
  throw UsageError("--method '" + a.method + "' is not available for family '" + a.family + "'");
}

Computed compute(const ComputeArgs& a) {
  const std::optional<Rational> at = a.at ? std::optional<Rational>(Rational::parse(*a.at)) : std::nullopt;
  auto poly_or_value = [&](Polynomial p) {
    Computed c;
    if (at) {
      c.value = eval(p, *at);
    } else {
      c.poly = std::move(p);
    }
    return c;
  };

  const std::string& f = a.family;
  if (f == "fubini") {
    forbid_nu(a);
    require_methods(a, {"direct", "rec"});
    return poly_or_value(a.method == "rec" ? fubini_rec(a.n) : fubini_direct(a.n));
  }
  if (f == "hfubini") {
    forbid_nu(a);
    require_methods(a, {"direct", "rec", "derivatives"});
    if (a.method == "rec") return poly_or_value(hfubini_rec(a.n));
    if (a.method == "derivatives") return poly_or_value(hfubini_via_derivatives(a.n));
    return poly_or_value(hfubini_direct(a.n));
  }
  if (f == "lambda") {
    if (!a.nu) throw UsageError("family 'lambda' requires --nu");
    require_methods(a, {});
    return poly_or_value(lambda_poly(a.n, *a.nu));
  }
  if (f == "psi") {
    forbid_nu(a);
    require_methods(a, {});
    return poly_or_value(psi_poly(a.n));
  }
  if (f == "power-sum") {
    forbid_nu(a);
    require_methods(a, {"bernoulli", "gregory-newton"});
    if (a.method == "gregory-newton") {
      if (!at) throw UsageError("--method gregory-newton requires --at");
      return Computed{std::nullopt, power_sum_gn(a.n, *at)};
    }
    return poly_or_value(power_sum_poly(a.n));
  }
  if (f == "bernoulli") {
    forbid_nu(a);
    require_methods(a, {});
    if (at) return Computed{std::nullopt, eval(bernoulli_poly(a.n), *at)};
    return Computed{std::nullopt, bernoulli(a.n)};
  }
  if (f == "stirling" || f == "sf") {
    forbid_at(a);
    require_methods(a, {});
    if (!a.nu) throw UsageError("family '" + f + "' requires --nu (the k index)");
    return Computed{std::nullopt, Rational(f == "sf" ? sf(a.n, *a.nu) : stirling2(a.n, *a.nu))};
  }
  if (f == "harmonic") {
    forbid_nu(a);
    forbid_at(a);
    require_methods(a, {});
    return Computed{std::nullopt, harmonic(a.n)};
  }
  throw UsageError("unknown family '" + f + "'");
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  if (format == Format::csv) throw UsageError("csv output is only available for 'table'");
  Computed c;
  try {
    c = compute(a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  if (format == Format::json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "compute";
    doc["family"] = a.family;
    doc["n"] = a.n;
    doc["nu"] = a.nu ? json(*a.nu) : json(nullptr);
    doc["at"] = a.at ? json(Rational::parse(*a.at).str()) : json(nullptr);
    doc["method"] = a.method.empty() ? json(nullptr) : json(a.method);
    if (c.poly) {
      doc["coefficients"] = coefficients_json(*c.poly);
    } else {
      doc["value"] = c.value->str();
    }
    out << doc.dump(2) << '\n';
  } else {
    out << (c.poly ? c.poly->str() : c.value->str()) << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int max_n = 64;
  std::vector<std::string> checks{"all"};
  std::string format = "plain";
  bool exhaustive = false;
  std::uint64_t seed = verify::kDefaultSeed;
  unsigned threads = 0;
  bool timing = false;
};

json report_json(const verify::IdentityReport& r, bool timing) {
  json j;
  j["check_id"] = r.check_id;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["status"] = std::string(verify::to_string(r.status));
  j["witness_n"] = r.witness ? json(r.witness->n) : json(nullptr);
  j["lhs"] = r.witness ? json(r.witness->lhs) : json(nullptr);
  j["rhs"] = r.witness ? json(r.witness->rhs) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["elapsed_ms"] = timing ? json(r.elapsed_ms) : json(nullptr);
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  if (format == Format::csv) throw UsageError("csv output is only available for 'table'");
  if (a.max_n < 1) throw UsageError("--max-n must be >= 1");

  verify::RunOptions options;
  options.exhaustive = a.exhaustive;
  options.seed = a.seed;
  options.threads = a.threads;

  std::vector<verify::IdentityReport> reports;
  try {
    reports = verify::run_suite(a.max_n, a.checks, options);
  } catch (const verify::UnknownCheck& e) {
    throw UsageError(e.what());
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status == verify::Status::pass; });

  if (format == Format::json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["max_n"] = a.max_n;
    doc["exhaustive"] = a.exhaustive;
    doc["all_pass"] = all_pass;
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, a.timing));
    doc["reports"] = std::move(arr);
    out << doc.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
      std::vector<std::string> row{r.status == verify::Status::pass ? "PASS" : "FAIL", r.check_id,
                                   "n=" + std::to_string(r.n_min) + ".." + std::to_string(r.n_max)};
      std::string detail;
      if (r.seed) detail += "seed=" + std::to_string(*r.seed) + " ";
      if (a.timing) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.elapsed_ms << "ms ";
        detail += ms.str();
      }
      if (r.witness) {
        detail += "witness n=" + std::to_string(r.witness->n) + ": lhs=" + r.witness->lhs + " rhs=" + r.witness->rhs;
        if (r.failures > 1) detail += " (" + std::to_string(r.failures) + " failing n)";
      }
      if (!detail.empty() && detail.back() == ' ') detail.pop_back();
      row.push_back(detail);
      rows.push_back(std::move(row));
    }
    print_aligned(out, rows);
    const auto passed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.status == verify::Status::pass; });
    out << passed << "/" << reports.size() << " checks passed\n";
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  std::string family;
  int max_n = 0;
  std::string format = "plain";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  if (a.max_n < 1) throw UsageError("--max-n must be >= 1");
  const Format format = parse_format(a.format);

  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // raw cell values
  json json_rows = json::array();

  if (a.family == "sf" || a.family == "stirling") {
    header = {"n", "k", "value"};
    for (int n = 0; n <= a.max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        const std::string v = (a.family == "sf" ? sf(n, k) : stirling2(n, k)).get_str();
        rows.push_back({std::to_string(n), std::to_string(k), v});
        json_rows.push_back({{"n", n}, {"k", k}, {"value", v}});
      }
    }
  } else if (a.family == "bernoulli") {
    header = {"n", "value"};
    for (int n = 0; n <= a.max_n; ++n) {
      const std::string v = bernoulli(n).str();
      rows.push_back({std::to_string(n), v});
      json_rows.push_back({{"n", n}, {"value", v}});
    }
  } else if (a.family == "lambda") {
    header = {"n", "nu", "coefficients"};
    for (int n = 1; n <= a.max_n; ++n) {
      for (int nu = 1; nu <= n; ++nu) {
        const Polynomial p = lambda_poly(n, nu);
        rows.push_back({std::to_string(n), std::to_string(nu), p.str()});
        json_rows.push_back({{"n", n}, {"nu", nu}, {"coefficients", coefficients_json(p)}});
      }
    }
  } else {
    throw UsageError("unknown table family '" + a.family + "' (expected sf, stirling, lambda, bernoulli)");
  }

  switch (format) {
    case Format::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "table";
      doc["family"] = a.family;
      doc["max_n"] = a.max_n;
      doc["rows"] = std::move(json_rows);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          const bool quote = row[i].find_first_of(",\"") != std::string::npos;
          out << (i ? "," : "") << (quote ? csv_quote(row[i]) : row[i]);
        }
        out << '\n';
      }
      break;
    }
    case Format::plain: {
      rows.insert(rows.begin(), header);
      print_aligned(out, rows);
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fubini and harmonic Fubini polynomials: construction and identity verification.\n"
               "Polynomials print as coefficient lists, constant term first: [c0, c1, ..., cn].\n"
               "Rationals print as reduced p/q, or a bare integer when q = 1."};
  app.name("hfub");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json", "csv"};

  ComputeArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Compute one polynomial or value");
  compute_cmd
      ->add_option("family", compute_args.family,
                   "fubini | hfubini | lambda | psi | bernoulli | stirling | sf | harmonic | power-sum")
      ->required();
  compute_cmd->add_option("--n", compute_args.n, "Index n")->required();
  compute_cmd->add_option("--nu", compute_args.nu, "Second index (nu for lambda, k for stirling/sf)");
  compute_cmd->add_option("--at", compute_args.at, "Evaluate at an exact rational, written p/q or as an integer");
  compute_cmd->add_option("--method", compute_args.method,
                          "Construction route: fubini {direct,rec}; hfubini {direct,rec,derivatives}; "
                          "power-sum {bernoulli,gregory-newton}");
  compute_cmd->add_option("--format", compute_args.format, "plain | json")->check(CLI::IsMember(formats));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the identity suite over 1..max-n");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest n to check (default 64)");
  verify_cmd->add_option("--checks", verify_args.checks, "Comma-separated check ids, or 'all'")->delimiter(',');
  verify_cmd->add_option("--format", verify_args.format, "plain | json")->check(CLI::IsMember(formats));
  verify_cmd->add_flag("--exhaustive", verify_args.exhaustive, "Scan every n instead of stopping at the first failure");
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for randomized checks");
  verify_cmd->add_option("--threads", verify_args.threads, "Worker threads (0 = hardware concurrency)");
  verify_cmd->add_flag("--timing", verify_args.timing, "Report elapsed time per check (output is then not reproducible)");
  bool list_checks = false;
  verify_cmd->add_flag("--list", list_checks, "List registered checks and exit");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Emit a table for n = 0..max-n");
  table_cmd->add_option("family", table_args.family, "sf | stirling | lambda | bernoulli")->required();
  table_cmd->add_option("--max-n", table_args.max_n, "Last row")->required();
  table_cmd->add_option("--format", table_args.format, "plain | json | csv")->check(CLI::IsMember(formats));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compute_cmd) return cmd_compute(compute_args, out);
    if (*verify_cmd) {
      if (list_checks) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : verify::builtin_registry().checks()) {
          rows.push_back({c.id, c.applicable.str(), c.description});
        }
        print_aligned(out, rows);
        return kExitOk;
      }
      return cmd_verify(verify_args, out);
    }
    if (*table_cmd) return cmd_table(table_args, out);
  } catch (const UsageError& e) {
    err << "hfub: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "hfub: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hfub::cli
