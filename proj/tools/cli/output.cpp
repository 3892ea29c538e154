#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace casimir1d::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (r.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, r.ptr);
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string field(const Record& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return quote(v.get<std::string>());
  return quote(v.dump());
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << quote(t.columns[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const auto it = row.find(t.columns[i]);
      os << (i ? "," : "") << (it == row.end() ? std::string() : field(*it));
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& c : t.columns) {
      const auto it = row.find(c);
      obj[c] = it == row.end() ? nullptr : *it;
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_table_file(const std::string& path, const Table& t, bool json) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (json) {
    write_json(f, t);
  } else {
    write_csv(f, t);
  }
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void write_metadata_file(const std::string& path, const nlohmann::ordered_json& meta) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << meta.dump(2) << '\n';
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace casimir1d::cli
