#include "rfun/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace rfun {
namespace {

double finite_number(const nlohmann::json& v, const char* where) {
  if (!v.is_number()) throw StateFormatError(std::string(where) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw StateFormatError(std::string(where) + ": non-finite number");
  return x;
}

}  // namespace

RawState parse_state_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw StateFormatError("state document must be a JSON object");
  if (!doc.contains("dims") || !doc.contains("matrix")) {
    throw StateFormatError("state document needs \"dims\" and \"matrix\"");
  }
  const auto& dims = doc.at("dims");
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer()) {
    throw StateFormatError("\"dims\" must be an array of two integers");
  }
  RawState out;
  out.dim_a = dims[0].get<int>();
  out.dim_b = dims[1].get<int>();

  const auto& rows = doc.at("matrix");
  if (!rows.is_array() || rows.empty()) throw StateFormatError("\"matrix\" must be a non-empty array");
  const std::size_t n_rows = rows.size();
  std::size_t n_cols = 0;
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!rows[r].is_array()) throw StateFormatError("matrix row " + std::to_string(r) + " is not an array");
    if (r == 0) n_cols = rows[r].size();
    if (rows[r].size() != n_cols) {
      throw StateFormatError("ragged matrix: row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(n_cols));
    }
  }
  out.matrix.resize(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      const auto& entry = rows[r][c];
      const std::string where = "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!entry.is_array() || entry.size() != 2) {
        throw StateFormatError(where + ": expected [re, im]");
      }
      out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {
          finite_number(entry[0], where.c_str()), finite_number(entry[1], where.c_str())};
    }
  }
  return out;
}

RawState parse_state_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StateFormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_state_json(doc);
}

RawState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

DensityMatrix load_state(const std::filesystem::path& path) {
  const auto raw = read_state_file(path);
  return validate_state(raw.matrix, raw.dim_a, raw.dim_b);
}

nlohmann::ordered_json state_to_json(const ComplexMatrix& matrix, int dim_a, int dim_b) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      row.push_back({matrix(r, c).real(), matrix(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"dims", {dim_a, dim_b}}, {"matrix", std::move(rows)}};
}

nlohmann::ordered_json to_json(const CheckEntry& entry) {
  return {{"name", entry.name},
          {"claim", entry.claim},
          {"measured", entry.measured},
          {"threshold", entry.threshold},
          {"pass", entry.pass}};
}

nlohmann::ordered_json to_json(const CertificateReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"m", report.m.value()}, {"checks", std::move(checks)}, {"overall", report.overall}};
}

}  // namespace rfun
