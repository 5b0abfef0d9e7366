#include "sjack/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sjack/constants.hpp"
#include "sjack/jack.hpp"
#include "sjack/report.hpp"

namespace sjack {

namespace {

/// Thrown for malformed user input; mapped to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition_arg(const std::string& text, const char* name) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::vector<BigRat> parse_rational_list(const std::string& text, const char* name) {
  std::vector<BigRat> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--") + name + ": " + e.what());
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show(const Partition& p) { return p.empty() ? "()" : p.to_string(); }

// -- coeff ------------------------------------------------------------------

struct CoeffArgs {
  std::string mu, nu, lambda;
  std::string format = "human";
  std::string engine = "recursive";
};

int cmd_coeff(const CoeffArgs& a, std::ostream& out) {
  TripleKey key{parse_partition_arg(a.mu, "mu"), parse_partition_arg(a.nu, "nu"),
                parse_partition_arg(a.lambda, "lambda")};
  ConstantRecord rec = g_coeff(key);
  if (a.engine == "triple-sum" || a.engine == "linear-solve") {
    // Recompute c with the requested engine; g follows from c.
    AlphaRational c;
    if (a.engine == "triple-sum") {
      c = c_triple_sum(key);
    } else {
      auto all = c_linear_solve(key.mu, key.nu);
      if (auto it = all.find(key.lam); it != all.end()) c = it->second;
    }
    rec.c = c;
    rec.g = c * AlphaRational(hook_H(key.mu) * hook_H(key.nu) * hook_Hprime(key.lam));
    rec.g_laurent = to_laurent(rec.g);
    rec.nonneg_integer.reset();
    if (rec.g_laurent) rec.nonneg_integer = is_nonneg_integer_coeffs(*rec.g_laurent);
  }
  if (a.format == "json") {
    out << to_json(rec).dump(2) << '\n';
    return kExitOk;
  }
  out << "mu       = " << show(key.mu) << '\n'
      << "nu       = " << show(key.nu) << '\n'
      << "lambda   = " << show(key.lam) << '\n'
      << "c        = " << rec.c.to_string() << '\n'
      << "g        = " << rec.g.to_string() << '\n'
      << "laurent  = " << yes_no(rec.g_laurent.has_value()) << '\n';
  if (rec.nonneg_integer) out << "nonneg integer coefficients = " << yes_no(*rec.nonneg_integer) << '\n';
  out << "alpha-shift polynomial = " << yes_no(alpha_shift_poly_check(rec)) << '\n';
  return kExitOk;
}

// -- verify -----------------------------------------------------------------

struct VerifyArgs {
  int max_mu = 2;
  int max_nu = 2;
  std::string out_path;
  std::string format = "json";
  std::string samples = "1/2,1,3";
  std::string timestamp;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_mu < 0 || a.max_nu < 0) throw UsageError("sweep bounds must be nonnegative");
  const auto samples = parse_rational_list(a.samples, "samples");
  for (const auto& s : samples)
    if (sgn(s) <= 0) throw UsageError("--samples: alpha samples must be positive");

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << a.out_path << "'\n";
      return kExitUsage;
    }
  }

  VerifyResult result = verify_conjecture(a.max_mu, a.max_nu, samples, a.jobs);

  ReportMetadata meta{a.max_mu, a.max_nu, samples, std::nullopt};
  if (a.timestamp == "now") meta.timestamp = utc_timestamp();
  else if (!a.timestamp.empty()) meta.timestamp = a.timestamp;

  std::ostream& sink = a.out_path.empty() ? out : file;
  if (a.format == "csv") sink << report_to_csv(result);
  else sink << report_to_json(meta, result).dump(2) << '\n';
  sink.flush();
  if (!sink) {
    err << "error: failed writing the report\n";
    return kExitUsage;
  }

  err << result.records.size() << " triples checked, " << result.failures.size() << " failure(s)\n";
  for (const auto& f : result.failures)
    err << "  mu=" << f.key.mu.to_string() << " nu=" << f.key.nu.to_string() << " lambda=" << f.key.lam.to_string()
        << ": " << to_string(f.reason) << '\n';
  return verify_exit_code(result);
}

// -- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string mu;
  std::string lambda;
  std::string point;
  std::string alpha;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Partition mu = parse_partition_arg(a.mu, "mu");
  if (!a.point.empty()) {
    if (a.alpha.empty()) throw UsageError("--point requires --alpha");
    const auto x = parse_rational_list(a.point, "point");
    const auto alpha = parse_rational_list(a.alpha, "alpha");
    if (alpha.size() != 1) throw UsageError("--alpha takes a single value");
    if (sgn(alpha[0]) == 0) throw UsageError("--alpha must be nonzero");
    if (static_cast<int>(x.size()) < mu.length()) throw UsageError("--point has fewer coordinates than mu has parts");
    out << shifted_P_eval_point(mu, x, alpha[0]).get_str() << '\n';
    return kExitOk;
  }
  const Partition lam = parse_partition_arg(a.lambda, "lambda");
  AlphaRational v = shifted_P_eval(mu, lam);
  if (!a.alpha.empty()) {
    const auto alpha = parse_rational_list(a.alpha, "alpha");
    if (alpha.size() != 1) throw UsageError("--alpha takes a single value");
    try {
      out << v.eval_at(alpha[0]).get_str() << '\n';
    } catch (const PoleError& e) {
      throw UsageError(e.what());
    }
    return kExitOk;
  }
  out << v.to_string() << '\n';
  return kExitOk;
}

// -- falling ----------------------------------------------------------------

struct FallingArgs {
  std::string mu;
  int n = 1;
  std::string format = "human";
};

int cmd_falling(const FallingArgs& a, std::ostream& out) {
  const Partition mu = parse_partition_arg(a.mu, "mu");
  if (a.n < mu.length()) throw UsageError("--n must be at least the number of parts of mu");
  bool pass = false;
  FallingExpansion fe;
  std::string note;
  try {
    fe = falling_expansion_of_shifted_jack(mu, a.n);
    pass = fe.all_nonnegative();
  } catch (const std::domain_error& e) {
    note = e.what();
  }
  if (a.format == "json") {
    Json j;
    j["mu"] = mu.to_string();
    j["n"] = a.n;
    Json terms = Json::array();
    for (const auto& [k, c] : fe.terms) {
      Json t;
      t["alpha_power"] = k.alpha_power;
      t["falling"] = k.falling;
      t["coeff"] = c.get_str();
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["verdict"] = pass ? "PASS" : "FAIL";
    if (!note.empty()) j["note"] = note;
    out << j.dump(2) << '\n';
  } else {
    out << "alpha^(l(mu)-1) H_mu P#_mu for mu=" << mu.to_string() << ", n=" << a.n << '\n';
    for (const auto& [k, c] : fe.terms) {
      out << "  alpha^" << k.alpha_power << " b=(";
      for (std::size_t i = 0; i < k.falling.size(); ++i) out << (i ? "," : "") << k.falling[i];
      out << "): " << c.get_str() << '\n';
    }
    if (!note.empty()) out << "  " << note << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitFinding;
}

// -- table ------------------------------------------------------------------

struct TableArgs {
  std::string mu, nu;
  std::string format = "human";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Partition mu = parse_partition_arg(a.mu, "mu");
  const Partition nu = parse_partition_arg(a.nu, "nu");
  auto all = c_linear_solve(mu, nu);
  std::vector<Partition> order;
  for (const auto& [lam, c] : all) order.push_back(lam);
  std::sort(order.begin(), order.end(), enumeration_less);

  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& lam : order) {
      Json r;
      r["lambda"] = lam.to_string();
      r["c"] = to_json(all.at(lam));
      rows.push_back(std::move(r));
    }
    Json j;
    j["mu"] = mu.to_string();
    j["nu"] = nu.to_string();
    j["coefficients"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "lambda,c\n";
    for (const auto& lam : order) out << '"' << lam.to_string() << "\",\"" << all.at(lam).to_string() << "\"\n";
  } else {
    for (const auto& lam : order) out << show(lam) << "\t" << all.at(lam).to_string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int verify_exit_code(const VerifyResult& result) { return result.failures.empty() ? kExitOk : kExitFinding; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack and shifted Jack structure constants in exact arithmetic", "shifted-jack"};
  app.set_version_flag("--version", std::string("shifted-jack ") + kToolVersion);
  app.require_subcommand(1);

  CoeffArgs coeff;
  auto* sc = app.add_subcommand("coeff", "c and g for one triple (mu, nu, lambda)");
  sc->add_option("--mu", coeff.mu, "partition, e.g. 3,1")->required();
  sc->add_option("--nu", coeff.nu, "partition")->required();
  sc->add_option("--lambda", coeff.lambda, "partition")->required();
  sc->add_option("--format", coeff.format)->check(CLI::IsMember({"human", "json"}));
  sc->add_option("--engine", coeff.engine)->check(CLI::IsMember({"recursive", "triple-sum", "linear-solve"}));

  VerifyArgs verify;
  auto* sv = app.add_subcommand("verify", "sweep all triples and check Laurent positivity of g");
  sv->add_option("--max-mu", verify.max_mu)->required();
  sv->add_option("--max-nu", verify.max_nu)->required();
  sv->add_option("--out", verify.out_path, "report file (default: stdout)");
  sv->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));
  sv->add_option("--samples", verify.samples, "comma-separated positive alpha values");
  sv->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  sv->add_option("--timestamp", verify.timestamp, "pin the report timestamp, or 'now'");

  EvalArgs eval;
  auto* se = app.add_subcommand("eval", "evaluate P#_mu at a partition or at a numeric point");
  se->add_option("--mu", eval.mu)->required();
  auto* lam_opt = se->add_option("--lambda", eval.lambda);
  auto* point_opt = se->add_option("--point", eval.point, "comma-separated rationals");
  se->add_option("--alpha", eval.alpha, "numeric alpha");
  lam_opt->excludes(point_opt);

  FallingArgs falling;
  auto* sf = app.add_subcommand("falling", "falling-power expansion of alpha^(l-1) H_mu P#_mu");
  sf->add_option("--mu", falling.mu)->required();
  sf->add_option("--n", falling.n, "number of variables")->required()->check(CLI::NonNegativeNumber);
  sf->add_option("--format", falling.format)->check(CLI::IsMember({"human", "json"}));

  TableArgs table;
  auto* st = app.add_subcommand("table", "all c^lambda_{mu,nu} for fixed mu, nu (linear solve)");
  st->add_option("--mu", table.mu)->required();
  st->add_option("--nu", table.nu)->required();
  st->add_option("--format", table.format)->check(CLI::IsMember({"human", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sc->parsed()) return cmd_coeff(coeff, out);
    if (sv->parsed()) return cmd_verify(verify, out, err);
    if (se->parsed()) {
      if (eval.point.empty() && lam_opt->count() == 0) throw UsageError("eval needs --lambda or --point");
      return cmd_eval(eval, out);
    }
    if (sf->parsed()) return cmd_falling(falling, out);
    if (st->parsed()) return cmd_table(table, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sjack
