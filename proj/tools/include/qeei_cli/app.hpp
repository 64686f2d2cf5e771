#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeei/error.hpp"
#include "qeei/qmatrix.hpp"

namespace qeei::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNotHermitian = 3,
  kExitNumerical = 4,
  kExitDegenerate = 5,
  kExitComplexity = 6,
  kExitViolation = 7,
};

int exit_code_for(ErrorKind kind);

enum class OutputFormat { kText, kJson };

struct CommandOptions {
  std::string command;  // eig, vec, det, qadj, verify
  std::string path;     // echoed in the report
  std::optional<std::size_t> index;
  std::optional<double> lambda;
  std::optional<std::size_t> pivot;
  double tol = 1e-8;
  OutputFormat format = OutputFormat::kText;
};

/// Tolerances derived from the base tolerance t and s = 1 + ||A||_inf.
struct Tolerances {
  double base = 0.0;
  double eei = 0.0;            // t * s^(n-1)
  double outer_product = 0.0;  // t * s^(n-1)
  double eigen_residual = 0.0; // t * s
  double unitarity = 0.0;      // t
  double adjugate = 0.0;       // t * (1 + ||A||_inf^n)
  double det_product = 0.0;    // t * (1 + ||A||_inf^n)
};

Tolerances derive_tolerances(double tol, const QMatrix& a);

struct CommandResult {
  nlohmann::json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Runs one matrix command on already-read file contents. Library errors
/// propagate as qeei::Error, malformed input as UsageError.
CommandResult run_command(const CommandOptions& options, const std::string& file_text);

/// Full command line entry point. args excludes the program name. env_tol is
/// the value of QEEI_TOL if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol = std::nullopt);

}  // namespace qeei::cli
