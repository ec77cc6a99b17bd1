#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <splitoc/splitoc.hpp>

namespace splitoc::cli {
namespace {

// Bad flag values or combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path, const char* flag) {
  std::ifstream in(path);
  if (!in)
    throw UsageError(std::string(flag) + ": cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string(flag) + ": '" + path + "' is not valid JSON: " + e.what());
  }
}

void write_block_text(std::ostream& out, const char* label, const ConditionBlock& block) {
  out << label << "[" << block.order << "]\n";
  for (const auto& c : block.conditions)
    out << c.word.str() << ": " << to_string(c.poly) << "\n";
}

std::string spec_header(const SchemeSpec& spec, int order) {
  std::ostringstream os;
  os << "# stages=" << spec.stages << " operators=" << spec.operators
     << " ansatz=" << ansatz_name(spec.ansatz) << " order=" << order;
  if (!spec.fixed.empty()) {
    os << " fixed=";
    bool first = true;
    for (const auto& [u, v] : spec.fixed) {
      os << (first ? "" : ",") << u.name() << "=" << to_string(v);
      first = false;
    }
  }
  return os.str();
}

struct GenOptions {
  int stages = 0;
  int order = 0;
  int operators = 2;
  std::string ansatz = "plain";
  std::vector<std::string> fixes;
  bool leading = false;
  unsigned workers = 0;
  std::string format = "text";
  std::string output;
};

SchemeSpec gen_spec(const GenOptions& o) {
  SchemeSpec spec;
  spec.stages = o.stages;
  spec.operators = o.operators;
  try {
    spec.ansatz = parse_ansatz(o.ansatz);
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--ansatz: ") + e.what());
  }
  for (const auto& fix : o.fixes) {
    auto eq = fix.find('=');
    if (eq == std::string::npos)
      throw UsageError("--fix: expected name=value, got '" + fix + "'");
    try {
      Unknown u = parse_unknown(fix.substr(0, eq));
      Rational v = parse_rational(fix.substr(eq + 1));
      auto [it, inserted] = spec.fixed.emplace(u, v);
      if (!inserted && it->second != v)
        throw UsageError("--fix: contradictory values for " + u.name());
    } catch (const invalid_input& e) {
      throw UsageError(std::string("--fix: ") + e.what());
    }
  }
  if (!spec.fixed.empty() && spec.ansatz == Ansatz::plain)
    spec.ansatz = Ansatz::fixed_subset;
  try {
    spec.validate();
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--ansatz/--operators: ") + e.what());
  }
  try {
    ansatz_substitution(spec);
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--fix: ") + e.what());
  }
  return spec;
}

int run_gen(const GenOptions& o, std::ostream& out) {
  const SchemeSpec spec = gen_spec(o);
  const unsigned workers = o.workers == 0 ? default_worker_count() : o.workers;
  const OrderConditionSystem system = order_conditions(spec, o.order, workers);
  std::optional<LeadingErrorTerm> leading;
  if (o.leading)
    leading = leading_error(spec, o.order, workers);

  std::ostringstream text;
  if (o.format == "json") {
    text << to_json(system, leading).dump(2) << "\n";
  } else {
    text << spec_header(spec, o.order) << "\n";
    for (const auto& block : system.blocks)
      write_block_text(text, "OC", block);
    if (leading)
      write_block_text(text, "LE", leading->block);
  }

  if (o.output.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.output);
    if (!file)
      throw UsageError("--output: cannot write '" + o.output + "'");
    file << text.str();
  }
  return kExitOk;
}

int run_lyndon(int alphabet, int degree, bool bracket, std::ostream& out) {
  for (const Word& w : lyndon_words(Alphabet(alphabet), degree)) {
    out << w.str();
    if (bracket)
      out << ": " << to_string(bracket_expansion(w));
    out << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& system_path, const std::string& coeffs_path, double tol,
               std::ostream& out) {
  LoadedSystem loaded;
  try {
    loaded = system_from_json(read_json_file(system_path, "--system"));
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--system: ") + e.what());
  }
  SchemeCoefficients coeffs;
  try {
    coeffs = scheme_coefficients_from_json(read_json_file(coeffs_path, "--coeffs"));
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--coeffs: ") + e.what());
  }
  if (coeffs.stages() != loaded.system.spec.stages ||
      coeffs.operators() != loaded.system.spec.operators)
    throw UsageError("--coeffs: shape (s, m) does not match the system");

  ConditionReport report;
  try {
    report = check_conditions(loaded.system, coeffs, tol);
  } catch (const unbound_variable& e) {
    throw UsageError(std::string("--coeffs: ") + e.what());
  }
  for (const auto& r : report.residuals)
    out << "q=" << r.order << " " << r.word.str() << " value=" << to_string(r.value)
        << " residual=" << std::setprecision(6) << std::scientific << r.residual << "\n";
  if (loaded.leading) {
    const Assignment values = coeffs.assignment();
    for (const auto& c : loaded.leading->block.conditions)
      out << "leading q=" << loaded.leading->block.order << " " << c.word.str()
          << " value=" << to_string(evaluate(c.poly, values)) << "\n";
  }
  out << (report.passed ? "PASS" : "FAIL") << " max_residual=" << std::setprecision(6)
      << std::scientific << report.max_residual << " tol=" << tol << "\n";
  return report.passed ? kExitOk : kExitCheckFailed;
}

int run_estimate(const std::string& coeffs_path, int dim, std::uint64_t seed, double h_max,
                 double h_min, int points, std::ostream& out) {
  SchemeCoefficients coeffs;
  try {
    coeffs = scheme_coefficients_from_json(read_json_file(coeffs_path, "--coeffs"));
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--coeffs: ") + e.what());
  }
  std::vector<double> grid;
  try {
    grid = geometric_grid(h_max, h_min, points);
  } catch (const invalid_input& e) {
    throw UsageError(std::string("--h-max/--h-min/--points: ") + e.what());
  }
  const auto ops = random_operators(coeffs.operators(), dim, seed);
  const auto est = estimate_order<double>(coeffs, std::span<const RealMatrix>(ops), grid);
  out << std::setprecision(6) << std::scientific;
  for (std::size_t i = 0; i < est.steps.size(); ++i)
    out << "h=" << est.steps[i] << " error=" << est.errors[i] << "\n";
  out << std::fixed << std::setprecision(4) << "slope=" << est.slope
      << " points=" << est.points_used << "\n";
  if (est.warning)
    out << "warning: " << *est.warning << "\n";
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order conditions for operator splitting methods", "splitoc"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate the order-condition system");
  gen_cmd->add_option("--stages", gen.stages, "Number of stages s")->required()->check(CLI::Range(1, 64));
  gen_cmd->add_option("--order", gen.order, "Target order p")->required()->check(CLI::Range(1, 30));
  gen_cmd->add_option("--operators", gen.operators, "Number of split operators")->check(CLI::IsMember({2, 3}));
  gen_cmd->add_option("--ansatz", gen.ansatz, "plain|sym-a|sym-b|palindromic|fixed")
      ->check(CLI::IsMember({"plain", "sym-a", "sym-b", "palindromic", "fixed"}));
  gen_cmd->add_option("--fix", gen.fixes, "Fix an unknown, e.g. a1=1/2 (repeatable)");
  gen_cmd->add_flag("--leading", gen.leading, "Also emit the order p+1 leading error block");
  gen_cmd->add_option("--workers", gen.workers, "Worker threads (default: available cores)")
      ->check(CLI::Range(1u, 4096u));
  gen_cmd->add_option("--format", gen.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  gen_cmd->add_option("--output", gen.output, "Write to this file instead of stdout");

  int alphabet = 2;
  int degree = 1;
  bool bracket = false;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "List Lyndon words of one degree");
  lyndon_cmd->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::IsMember({2, 3}));
  lyndon_cmd->add_option("--degree", degree, "Word length")->required()->check(CLI::Range(1, kMaxWordDegree));
  lyndon_cmd->add_flag("--bracket", bracket, "Print each word's commutator expansion");

  std::string system_path;
  std::string coeffs_path;
  double tol = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate a system at given coefficients");
  verify_cmd->add_option("--system", system_path, "System JSON from `gen --format json`")->required();
  verify_cmd->add_option("--coeffs", coeffs_path, "Coefficient JSON")->required();
  verify_cmd->add_option("--tol", tol, "Residual tolerance")->check(CLI::NonNegativeNumber);

  std::string est_coeffs;
  int dim = 4;
  std::uint64_t seed = 1;
  double h_max = 1e-1;
  double h_min = 1e-3;
  int points = 8;
  auto* est_cmd = app.add_subcommand("estimate-order", "Fit the observed local error order");
  est_cmd->add_option("--coeffs", est_coeffs, "Coefficient JSON")->required();
  est_cmd->add_option("--dim", dim, "Matrix dimension")->check(CLI::Range(1, 512));
  est_cmd->add_option("--seed", seed, "Random seed for the operator matrices");
  est_cmd->add_option("--h-max", h_max, "Largest step size")->check(CLI::PositiveNumber);
  est_cmd->add_option("--h-min", h_min, "Smallest step size")->check(CLI::PositiveNumber);
  est_cmd->add_option("--points", points, "Number of step sizes")->check(CLI::Range(2, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed())
      return run_gen(gen, out);
    if (lyndon_cmd->parsed())
      return run_lyndon(alphabet, degree, bracket, out);
    if (verify_cmd->parsed())
      return run_verify(system_path, coeffs_path, tol, out);
    if (est_cmd->parsed())
      return run_estimate(est_coeffs, dim, seed, h_max, h_min, points, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

} // namespace splitoc::cli
