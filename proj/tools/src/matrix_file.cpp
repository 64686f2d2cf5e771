#include "qeei_cli/matrix_file.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace qeei::cli {

namespace {

constexpr std::array<const char*, 4> kPartKeys = {"re", "im_i", "im_j", "im_k"};

RealMatrix read_part(const nlohmann::json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key)) throw UsageError(std::string("missing key \"") + key + "\"");
  const nlohmann::json& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != n) {
    throw UsageError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
  }
  RealMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const nlohmann::json& row = rows[r];
    if (!row.is_array() || row.size() != n) {
      throw UsageError(std::string("\"") + key + "\" row " + std::to_string(r + 1) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number()) {
        throw UsageError(std::string("\"") + key + "\" entry (" + std::to_string(r + 1) + "," +
                         std::to_string(c + 1) + ") is not a number");
      }
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

}  // namespace

QMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("matrix file must contain a single JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_unsigned() || doc.at("n").get<std::size_t>() == 0) {
    throw UsageError("\"n\" must be a positive integer");
  }
  const std::size_t n = doc.at("n").get<std::size_t>();
  return from_components(read_part(doc, kPartKeys[0], n), read_part(doc, kPartKeys[1], n),
                         read_part(doc, kPartKeys[2], n), read_part(doc, kPartKeys[3], n));
}

QMatrix parse_matrix_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json doc;
  doc["n"] = m.rows();
  for (int part = 0; part < 4; ++part) {
    const RealMatrix comp = m.component(part);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < comp.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < comp.cols(); ++c) row.push_back(comp(r, c));
      rows.push_back(std::move(row));
    }
    doc[kPartKeys[part]] = std::move(rows);
  }
  return doc;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

}  // namespace qeei::cli
