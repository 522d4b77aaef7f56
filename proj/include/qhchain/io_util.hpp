#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qhchain {

// FNV-1a over the bytes of a string; used to fingerprint model descriptors.
std::uint64_t fnv1a64(const std::string& data);
std::string to_hex(std::uint64_t value);

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double value);
std::string format_complex(const std::complex<double>& value);

// RFC 4180 quoting: wrap in quotes when the field contains , " or newline.
std::string csv_field(const std::string& raw);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void comment(const std::string& key, const std::string& value);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

// Serializes with sorted keys and no whitespace; stable across runs.
std::string canonical_json(const nlohmann::json& j);

}  // namespace qhchain
