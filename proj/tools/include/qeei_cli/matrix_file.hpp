#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qeei/qmatrix.hpp"

namespace qeei::cli {

/// Malformed input file or command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"n": N, "re": [[..]], "im_i": [[..]], "im_j": [[..]], "im_k": [[..]]}
/// where each array is N x N. Throws UsageError on any deviation.
QMatrix matrix_from_json(const nlohmann::json& doc);
QMatrix parse_matrix_file(std::string_view text);

/// Inverse of matrix_from_json. Doubles are written in shortest round-trip
/// form so re-reading the output reproduces every bit.
nlohmann::json matrix_to_json(const QMatrix& m);

/// Lowercase hex SHA-256 of the raw bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace qeei::cli
