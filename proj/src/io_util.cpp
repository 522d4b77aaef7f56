#include "qhchain/io_util.hpp"

#include <cstdio>

namespace qhchain {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_complex(const std::complex<double>& value) {
  if (value.imag() == 0.0) return format_double(value.real());
  std::string im = format_double(value.imag());
  std::string sep = (!im.empty() && im[0] == '-') ? "" : "+";
  return format_double(value.real()) + sep + im + "i";
}

std::string csv_field(const std::string& raw) {
  bool needs_quotes = raw.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void CsvWriter::comment(const std::string& key, const std::string& value) {
  out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (j) out_ << ",";
    out_ << csv_field(fields[j]);
  }
  out_ << "\n";
}

std::string canonical_json(const nlohmann::json& j) {
  // nlohmann::json already stores object keys sorted
  return j.dump();
}

}  // namespace qhchain
