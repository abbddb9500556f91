#include "albert_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "albert/dirac.hpp"
#include "albert/error.hpp"
#include "albert/group.hpp"
#include "albert/io.hpp"
#include "albert/jordan.hpp"
#include "albert/lie_rank.hpp"
#include "albert/verify.hpp"

namespace albert::cli {

namespace {

using nlohmann::json;

constexpr const char* kGrammar = R"(Family ids:
  rot:xy:<u>[:B]  rot:yz:<u>[:B]  rot:zx[:B]
  boost:tz[:B]    boost:tx[:B]    boost:ty:<u>[:B]
  phase:<u>[:B]
  g2:c1:<u>  g2:c2:<u>   (u != l)
  g2:c3:<pq>             (pq in ij, jk, ki)
  nest:<u>:<v>           (u != v)
with <u> in i j k kl jl il l and B in I II III (default I).

Matrix files: {"diag":[3 reals],"o12":[8],"o13":[8],"o23":[8]}, or
{"entries":[[x11,x12,x13],[x21,x22,x23],[x31,x32,x33]]} with each x an array
of 8 reals. Octonion coefficients are ordered 1 i j k kl jl il l.

Exit codes: 0 ok, 1 verification failure, 2 usage/IO error or malformed JSON,
3 unknown family id, 4 non-Hermitian input.)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << doc.dump(2) << '\n';
}

json dimension_entry(const DimensionCheck& c) {
  json gap = std::isfinite(c.report.gap) ? json(c.report.gap) : json(nullptr);
  return json{{"rank", c.report.rank}, {"gap", gap}, {"expected", c.expected}, {"ok", c.ok()}};
}

std::string product_label(SignedBasis p) {
  std::string s = p.sign < 0 ? "-" : "";
  s += p.index == 0 ? std::string("1") : std::string(unit_name(static_cast<Unit>(p.index)));
  return s;
}

struct Options {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::vector<std::string> tolerances;
  std::vector<std::string> suites;
  std::string json_path;
  std::string family;
  double param = 0.0;
  std::string input;
};

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerificationConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.suites = o.suites;
  for (const auto& entry : o.tolerances) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + entry + "'");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(entry.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != entry.size() - eq - 1) {
      throw UsageError("bad tolerance value in '" + entry + "'");
    }
    config.tolerances[entry.substr(0, eq)] = value;
  }

  const auto start = std::chrono::steady_clock::now();
  const Report report = run_verification(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const auto& s : report.suites) {
    err << (s.passed() ? "PASS " : "FAIL ") << s.name << '\n';
    for (const auto& c : s.checks) {
      err << "  " << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(28) << c.name
          << " max " << std::scientific << std::setprecision(3) << c.max
          << (c.bound == Bound::at_most ? " <= " : " > ") << c.tolerance << std::defaultfloat
          << '\n';
    }
  }
  err << "runtime " << std::fixed << std::setprecision(2) << seconds << " s\n" << std::defaultfloat;
  emit(report.to_json(), o.json_path, out);
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_dims(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<DimensionCheck> checks = subgroup_dimensions();
  checks.push_back(triality_check());
  checks.push_back(naive_span_check());
  for (auto& c : flip_span_checks()) checks.push_back(std::move(c));

  json doc = json::object();
  bool all = true;
  for (const auto& c : checks) {
    doc[c.report.name] = dimension_entry(c);
    all = all && c.ok();
    err << (c.ok() ? "ok   " : "FAIL ") << std::left << std::setw(24) << c.report.name << " rank "
        << c.report.rank << " (expected " << c.expected << "), gap " << std::scientific
        << std::setprecision(2) << c.report.gap << std::defaultfloat << '\n';
  }
  emit(doc, o.json_path, out);
  return all ? kOk : kVerificationFailed;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const GeneratorFamily f = family_by_id(o.family);
  const Hermitian3 x = parse_matrix(read_input(o.input));
  emit(to_json(act(f, o.param, x)), o.json_path, out);
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Hermitian3 x = parse_matrix(read_input(o.input));
  emit(to_json(spectral_decompose(x)), o.json_path, out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (!o.json_path.empty()) {
    json rows = json::array();
    for (Unit a : kUnits) {
      json row = json::array();
      for (Unit b : kUnits) row.push_back(product_label(kStructure[slot(a)][slot(b)]));
      rows.push_back(row);
    }
    json units = json::array();
    for (Unit u : kUnits) units.push_back(unit_name(u));
    emit(json{{"units", units}, {"products", rows}}, o.json_path, out);
    return kOk;
  }
  out << std::right << std::setw(5) << "";
  for (Unit b : kUnits) out << std::setw(5) << unit_name(b);
  out << '\n';
  for (Unit a : kUnits) {
    out << std::setw(5) << unit_name(a);
    for (Unit b : kUnits) out << std::setw(5) << product_label(kStructure[slot(a)][slot(b)]);
    out << '\n';
  }
  return kOk;
}

int cmd_states(const Options& o, std::ostream& out) {
  json doc = json::array();
  for (const auto& s : lepton_spectrum()) doc.push_back(to_json(s));
  emit(doc, o.json_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octonions, the exceptional Jordan algebra and E6 = SL(3,O)", "albert"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  Options o;
  auto* verify = app.add_subcommand("verify", "Run randomized property suites");
  verify->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  verify->add_option("--trials", o.trials, "Trials per check")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tolerances, "Tolerance override <suite>.<check>=<value>");
  verify->add_option("--suite", o.suites, "Suites to run (default all)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--json", o.json_path, "Write the report here instead of stdout");

  auto* dims = app.add_subcommand("dims", "Numerical ranks of the generator subsets");
  dims->add_option("--json", o.json_path, "Write the report here instead of stdout");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a generator family to a matrix");
  apply_cmd->add_option("family", o.family, "Family id")->required();
  apply_cmd->add_option("param", o.param, "Curve parameter")->required();
  apply_cmd->add_option("matrix", o.input, "Matrix JSON file, - for stdin")->required();
  apply_cmd->add_option("--json", o.json_path, "Write the result here instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "Spectral decomposition of a matrix");
  decompose->add_option("matrix", o.input, "Matrix JSON file, - for stdin")->required();
  decompose->add_option("--json", o.json_path, "Write the result here instead of stdout");

  auto* table = app.add_subcommand("table", "Print the signed 7x7 unit multiplication table");
  table->add_option("--json", o.json_path, "Write the table as JSON here");

  auto* states = app.add_subcommand("states", "Print the lepton spectrum");
  states->add_option("--json", o.json_path, "Write the spectrum here instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (dims->parsed()) return cmd_dims(o, out, err);
    if (apply_cmd->parsed()) return cmd_apply(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (states->parsed()) return cmd_states(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::unknown_family:
        return kUnknownFamily;
      case Errc::not_hermitian:
        return kNotHermitian;
      default:
        return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace albert::cli
