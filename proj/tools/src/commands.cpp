#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qeei/eigen.hpp"
#include "qeei/qdet.hpp"
#include "qeei_cli/app.hpp"
#include "qeei_cli/matrix_file.hpp"

namespace qeei::cli {

namespace {

using nlohmann::json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string general(double v, int precision = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json real_matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string real_matrix_text(const RealMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += general(m(r, c));
    }
  }
  return s + "]";
}

json tolerances_json(const Tolerances& t) {
  return {{"base", t.base},
          {"eei", t.eei},
          {"outer_product", t.outer_product},
          {"eigen_residual", t.eigen_residual},
          {"unitarity", t.unitarity},
          {"adjugate", t.adjugate},
          {"det_product", t.det_product}};
}

json spectrum_json(const Spectrum& s, const EigenOptions& options) {
  bool simple = true;
  for (std::size_t i = 1; i <= s.values.size() && s.values.size() > 1; ++i)
    simple = simple && s.gap(i) > s.simple_tol(options);
  return {{"values", s.values},
          {"grouping_tol", s.grouping_tol},
          {"max_spread", s.max_spread},
          {"simple", simple}};
}

json pair_json(const EigenPair& p) {
  json comps = json::array();
  for (std::size_t r = 0; r < p.vector.rows(); ++r) comps.push_back(quaternion_json(p.vector(r, 0)));
  return {{"index", p.index},   {"lambda", p.lambda},     {"pivot", p.pivot},
          {"vector", comps},    {"residual", p.residual}, {"norm_dev", p.norm_dev}};
}

// One residual row: value, tolerance and whether it passed.
struct Check {
  std::string name;
  double value;
  double tol;
  bool ok() const { return value <= tol; }
};

json checks_json(const std::vector<Check>& checks) {
  json out = json::object();
  for (const Check& c : checks) out[c.name] = {{"value", c.value}, {"tol", c.tol}, {"ok", c.ok()}};
  return out;
}

std::string checks_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const Check& c : checks)
    os << "  " << c.name << " = " << sci(c.value) << " (tol " << sci(c.tol) << ") "
       << (c.ok() ? "ok" : "VIOLATION") << "\n";
  return os.str();
}

// Both sides of the eigenvector-eigenvalue identity for every component of
// one eigenpair, scaled by the separation product.
std::vector<EeiReport> eei_rows(const HermitianQMatrix& h, const Spectrum& s, const EigenPair& pair) {
  const std::size_t n = h.size();
  std::vector<EeiReport> rows;
  if (n == 1) {
    const double lhs = norm_sq(pair.vector(0, 0));
    rows.push_back({1, 1, lhs, 1.0, std::abs(lhs - 1.0)});
    return rows;
  }
  const double c = s.separation_product(pair.index);
  for (std::size_t j = 1; j <= n; ++j) {
    const double lhs = norm_sq(pair.vector(j - 1, 0)) * c;
    const double rhs = eei_ratio(h, s, pair.index, j) * c;
    rows.push_back({pair.index, j, lhs, rhs, std::abs(lhs - rhs)});
  }
  return rows;
}

double max_residual(const std::vector<EeiReport>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);
  return worst;
}

json eei_json(const std::vector<EeiReport>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"i", r.i}, {"j", r.j}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}});
  return out;
}

std::string status_of(bool degenerate, const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.ok()) return "violation";
  return degenerate ? "degenerate" : "ok";
}

int exit_for_status(const std::string& status) {
  if (status == "violation") return kExitViolation;
  if (status == "degenerate") return kExitDegenerate;
  return kExitOk;
}

void cmd_eig(const HermitianQMatrix& h, CommandResult& out) {
  const EigenOptions options;
  const Spectrum s = right_eigenvalues(h, options);
  out.report["spectrum"] = spectrum_json(s, options);
  std::string line = "eigenvalues: ";
  for (std::size_t k = 0; k < s.values.size(); ++k) line += (k ? ", " : "") + fixed6(s.values[k]);
  out.text += line + "\n";
  out.report["status"] = "ok";
  out.text += "status: ok\n";
}

void cmd_vec(const HermitianQMatrix& h, const CommandOptions& opts, const Tolerances& tol,
             CommandResult& out) {
  if (!opts.index) throw UsageError("vec requires --index");
  const std::size_t n = h.size();
  if (*opts.index < 1 || *opts.index > n) {
    throw UsageError("--index must be in 1.." + std::to_string(n));
  }
  EigenOptions options;
  options.pivot = opts.pivot.value_or(0);
  const Spectrum s = right_eigenvalues(h, options);
  out.report["spectrum"] = spectrum_json(s, options);
  const std::size_t i = *opts.index;

  EigenPair pair;
  try {
    pair = eigenvector_from_qadj(h, s, i, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateEigenvalue) throw;
    out.report["status"] = "degenerate";
    out.report["message"] = e.what();
    out.text += "lambda_" + std::to_string(i) + " = " + fixed6(s.values[i - 1]) + "\n";
    out.text += std::string("status: degenerate (") + e.what() + ")\n";
    out.exit_code = kExitDegenerate;
    return;
  }
  const auto rows = eei_rows(h, s, pair);
  const std::vector<Check> checks = {
      {"eigen_residual", pair.residual, tol.eigen_residual},
      {"norm_dev", pair.norm_dev, tol.unitarity},
      {"outer_product", verify_outer_product(h, s, pair), tol.outer_product},
      {"eei", max_residual(rows), tol.eei},
  };
  const std::string status = status_of(false, checks);
  out.report["eigenpairs"] = json::array({pair_json(pair)});
  out.report["eei"] = eei_json(rows);
  out.report["residuals"] = checks_json(checks);
  out.report["status"] = status;
  out.exit_code = exit_for_status(status);

  out.text += "lambda_" + std::to_string(i) + " = " + fixed6(pair.lambda) + "\n";
  for (std::size_t r = 0; r < n; ++r)
    out.text += "v[" + std::to_string(r + 1) + "] = " + to_string(pair.vector(r, 0)) + "\n";
  out.text += "pivot m = " + std::to_string(pair.pivot) + "\n";
  out.text += "residuals:\n" + checks_text(checks);
  out.text += "status: " + status + "\n";
}

void cmd_verify(const HermitianQMatrix& h, const Tolerances& tol, CommandResult& out) {
  const EigenOptions options;
  const Spectrum s = right_eigenvalues(h, options);
  out.report["spectrum"] = spectrum_json(s, options);
  const QMatrix& a = h.matrix();
  const std::size_t n = h.size();

  std::vector<Check> checks;
  bool degenerate = false;
  std::string degenerate_reason;
  try {
    const auto pairs = eigenpairs_from_qadj(h, s, options);
    json pairs_json = json::array();
    std::vector<EeiReport> all_rows;
    double worst_outer = 0.0;
    double worst_eigen = 0.0;
    for (const EigenPair& p : pairs) {
      pairs_json.push_back(pair_json(p));
      const auto rows = eei_rows(h, s, p);
      all_rows.insert(all_rows.end(), rows.begin(), rows.end());
      worst_outer = std::max(worst_outer, verify_outer_product(h, s, p));
      worst_eigen = std::max(worst_eigen, p.residual);
    }
    out.report["eigenpairs"] = pairs_json;
    out.report["eei"] = eei_json(all_rows);
    checks.push_back({"eei", max_residual(all_rows), tol.eei});
    checks.push_back({"outer_product", worst_outer, tol.outer_product});
    checks.push_back({"eigen_residual", worst_eigen, tol.eigen_residual});
    checks.push_back({"unitarity", unitarity_residual(pairs), tol.unitarity});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateEigenvalue) throw;
    degenerate = true;
    degenerate_reason = e.what();
    out.report["message"] = degenerate_reason;
  }

  const QMatrix adj = qadj(a);
  const Quaternion d = det(a);
  const QMatrix scaled = scale_right(QMatrix::identity(n), d);
  const double adjugate = std::max((adj * a - scaled).inf_norm(), (a * adj - scaled).inf_norm());
  double product = 1.0;
  for (double v : s.values) product *= v;
  checks.push_back({"adjugate_identity", adjugate, tol.adjugate});
  checks.push_back({"det_vs_eigenvalue_product", modulus(d - Quaternion{product}), tol.det_product});

  const std::string status = status_of(degenerate, checks);
  out.report["det"] = quaternion_json(d);
  out.report["residuals"] = checks_json(checks);
  out.report["status"] = status;
  out.exit_code = exit_for_status(status);

  std::string line = "eigenvalues: ";
  for (std::size_t k = 0; k < s.values.size(); ++k) line += (k ? ", " : "") + fixed6(s.values[k]);
  out.text += line + "\n";
  out.text += "det = " + to_string(d, 10) + "\n";
  out.text += "residuals:\n" + checks_text(checks);
  if (degenerate) out.text += "note: " + degenerate_reason + "\n";
  out.text += "status: " + status + "\n";
}

void cmd_det(const QMatrix& a, CommandResult& out) {
  const Quaternion d = det(a);
  out.report["det"] = quaternion_json(d);
  out.report["status"] = "ok";
  out.text += "det = " + to_string(d, 10) + "\n";
  out.text += "components = [" + general(d.w) + ", " + general(d.x) + ", " + general(d.y) + ", " +
              general(d.z) + "]\n";
  out.text += "status: ok\n";
}

void cmd_qadj(const QMatrix& a, const CommandOptions& opts, CommandResult& out) {
  const QMatrix target = opts.lambda ? characteristic_matrix(a, *opts.lambda) : a;
  const QMatrix b = qadj(target);
  json parts = json::object();
  for (int part = 0; part < 4; ++part) {
    const std::string name = "B" + std::to_string(part);
    const RealMatrix comp = b.component(part);
    parts[name] = real_matrix_json(comp);
    out.text += name + " = " + real_matrix_text(comp) + "\n";
  }
  out.report["qadj"] = parts;
  out.report["status"] = "ok";
  out.text += "status: ok\n";
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian:
      return kExitNotHermitian;
    case ErrorKind::kDegenerateEigenvalue:
      return kExitDegenerate;
    case ErrorKind::kComplexityLimit:
      return kExitComplexity;
    case ErrorKind::kIdentityViolation:
      return kExitViolation;
    case ErrorKind::kNotSquare:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kIndexOutOfRange:
      return kExitUsage;
    case ErrorKind::kZeroDivisor:
    case ErrorKind::kNotSymmetric:
    case ErrorKind::kNoConvergence:
    case ErrorKind::kGroupingFailure:
    case ErrorKind::kPivotFailure:
    case ErrorKind::kNoZeroEigenvalue:
      return kExitNumerical;
  }
  return kExitNumerical;
}

Tolerances derive_tolerances(double tol, const QMatrix& a) {
  const double norm = a.inf_norm();
  const double n = static_cast<double>(a.rows());
  const double s = 1.0 + norm;
  Tolerances t;
  t.base = tol;
  t.eei = tol * std::pow(s, n - 1.0);
  t.outer_product = t.eei;
  t.eigen_residual = tol * s;
  t.unitarity = tol;
  t.adjugate = tol * (1.0 + std::pow(norm, n));
  t.det_product = t.adjugate;
  return t;
}

CommandResult run_command(const CommandOptions& opts, const std::string& file_text) {
  const QMatrix a = parse_matrix_file(file_text);
  const Tolerances tol = derive_tolerances(opts.tol, a);

  CommandResult out;
  json args = {{"tol", opts.tol}, {"format", opts.format == OutputFormat::kJson ? "json" : "text"}};
  if (opts.index) args["index"] = *opts.index;
  if (opts.lambda) args["lambda"] = *opts.lambda;
  if (opts.pivot) args["pivot"] = *opts.pivot;
  out.report["command"] = opts.command;
  out.report["args"] = args;
  out.report["input"] = {{"path", opts.path}, {"sha256", sha256_hex(file_text)}, {"matrix", matrix_to_json(a)}};
  out.report["tolerances"] = tolerances_json(tol);

  if (opts.command == "det") {
    cmd_det(a, out);
  } else if (opts.command == "qadj") {
    cmd_qadj(a, opts, out);
  } else {
    const HermitianQMatrix h = validate_hermitian(a);
    if (opts.command == "eig") {
      cmd_eig(h, out);
    } else if (opts.command == "vec") {
      cmd_vec(h, opts, tol, out);
    } else if (opts.command == "verify") {
      cmd_verify(h, tol, out);
    } else {
      throw UsageError("unknown command " + opts.command);
    }
  }
  return out;
}

}  // namespace qeei::cli
