#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace casimir1d::cli {

using Record = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<Record> rows;
};

/// Locale-independent rendering with 17 significant digits.
std::string format_number(double x);

/// RFC-4180 style: header line, then one line per row, '\n' terminated.
void write_csv(std::ostream& os, const Table& t);

/// JSON array of row objects with keys in column order.
void write_json(std::ostream& os, const Table& t);

/// Writes the table as CSV or JSON to `path`; throws std::runtime_error on I/O failure.
void write_table_file(const std::string& path, const Table& t, bool json);

/// Writes a metadata document next to an output file.
void write_metadata_file(const std::string& path, const nlohmann::ordered_json& meta);

}  // namespace casimir1d::cli
