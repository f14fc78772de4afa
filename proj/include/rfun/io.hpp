#pragma once

// JSON formats: density-matrix files and certificate reports.
//
// State file: {"dims": [m, n], "matrix": [[[re, im], ...], ...]}, row-major.
// Report:     {"m": int, "checks": [{"name", "claim", "measured", "threshold",
//              "pass"}], "overall": bool}

#include <filesystem>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfun/analysis.hpp"
#include "rfun/quantum.hpp"

namespace rfun {

/// Malformed state document (syntax, shape, ragged rows, non-finite numbers).
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I/O failure (unreadable or unwritable path).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RawState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix matrix;
};

RawState parse_state_json(const nlohmann::json& doc);
RawState parse_state_text(const std::string& text);
RawState read_state_file(const std::filesystem::path& path);

/// Parses, then validates.
DensityMatrix load_state(const std::filesystem::path& path);

nlohmann::ordered_json state_to_json(const ComplexMatrix& matrix, int dim_a, int dim_b);

nlohmann::ordered_json to_json(const CheckEntry& entry);
nlohmann::ordered_json to_json(const CertificateReport& report);

}  // namespace rfun
