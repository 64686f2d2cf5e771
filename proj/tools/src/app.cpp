#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "qeei/random.hpp"
#include "qeei_cli/app.hpp"
#include "qeei_cli/matrix_file.hpp"

namespace qeei::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_tolerance(const std::string& text, const char* source) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value > 0.0) || !std::isfinite(value)) {
    throw UsageError(std::string(source) + " must be a positive number, got \"" + text + "\"");
  }
  return value;
}

void emit_error(std::ostream& out, std::ostream& err, const CommandOptions& opts,
                const std::string& kind, const std::string& message) {
  err << "qeei: " << message << "\n";
  if (opts.format == OutputFormat::kJson) {
    const nlohmann::json report = {{"command", opts.command},
                                   {"status", "error"},
                                   {"error", {{"kind", kind}, {"message", message}}}};
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol) {
  CLI::App app{"Right eigenpairs of quaternion Hermitian matrices"};
  app.name("qeei");
  app.require_subcommand(1);

  CommandOptions opts;
  std::string format = "text";
  std::optional<std::string> tol_text;
  std::size_t index = 0;
  double lambda = 0.0;
  std::size_t pivot = 0;

  const auto add_matrix_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opts.path, "JSON matrix file with keys n, re, im_i, im_j, im_k")
        ->required();
    sub->add_option("--tol", tol_text, "base tolerance (default 1e-8, env QEEI_TOL)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  add_matrix_command("eig", "ascending right eigenvalues");
  CLI::App* vec = add_matrix_command("vec", "unit eigenvector for one eigenvalue");
  CLI::Option* index_opt = vec->add_option("--index", index, "1-based eigenvalue index")->required();
  CLI::Option* pivot_opt = vec->add_option("--pivot", pivot, "1-based component made real");
  add_matrix_command("det", "permutation determinant");
  CLI::App* qadj_cmd = add_matrix_command("qadj", "quaternion adjugate, of lambda E - A with --lambda");
  CLI::Option* lambda_opt = qadj_cmd->add_option("--lambda", lambda, "real shift");
  add_matrix_command("verify", "all identity residuals");

  std::size_t random_n = 0;
  std::uint64_t seed = 0;
  CLI::App* random_cmd = app.add_subcommand("random", "print a random Hermitian matrix file");
  random_cmd->add_option("N", random_n, "dimension")->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", seed, "generator seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qeei: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (random_cmd->parsed()) {
    std::mt19937_64 rng(seed);
    out << matrix_to_json(random_hermitian(random_n, rng).matrix()).dump(2) << "\n";
    return kExitOk;
  }

  opts.command = app.get_subcommands().front()->get_name();
  opts.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  if (index_opt->count()) opts.index = index;
  if (pivot_opt->count()) opts.pivot = pivot;
  if (lambda_opt->count()) opts.lambda = lambda;

  try {
    if (tol_text) {
      opts.tol = parse_tolerance(*tol_text, "--tol");
    } else if (env_tol && !env_tol->empty()) {
      opts.tol = parse_tolerance(*env_tol, "QEEI_TOL");
    }
    const CommandResult result = run_command(opts, read_file(opts.path));
    if (opts.format == OutputFormat::kJson) {
      out << result.report.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    emit_error(out, err, opts, "Usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(out, err, opts, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  }
}

}  // namespace qeei::cli
