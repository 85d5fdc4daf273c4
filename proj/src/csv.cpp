#include "lotsizer/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lotsizer {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  for (std::string& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.pop_back();
  }
  return fields;
}

}  // namespace

CsvTable read_csv(const std::string& path,
                  const std::vector<std::string>& expected_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  CsvTable table;
  table.path = path;

  std::string line;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split_fields(line);
    if (!header_seen) {
      if (fields != expected_header) {
        std::string expected;
        for (size_t i = 0; i < expected_header.size(); ++i) {
          if (i > 0) expected += ",";
          expected += expected_header[i];
        }
        throw ParseError(path, line_number, 1,
                         "header mismatch, expected '" + expected + "'");
      }
      table.header = std::move(fields);
      header_seen = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError(path, line_number,
                       static_cast<int>(fields.size()),
                       "expected " + std::to_string(table.header.size()) +
                           " fields, found " + std::to_string(fields.size()));
    }
    table.rows.push_back({line_number, std::move(fields)});
  }
  if (!header_seen) throw ParseError(path, line_number, 1, "missing header row");
  return table;
}

const std::string& string_field(const CsvTable& table, const CsvRow& row,
                                int column) {
  if (column < 1 || column > static_cast<int>(row.fields.size())) {
    throw ParseError(table.path, row.line, column, "missing field");
  }
  return row.fields[column - 1];
}

int parse_int_field(const CsvTable& table, const CsvRow& row, int column) {
  const std::string& field = string_field(table, row, column);
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(table.path, row.line, column,
                     "'" + field + "' is not an integer");
  }
  return value;
}

double parse_double_field(const CsvTable& table, const CsvRow& row, int column) {
  const std::string& field = string_field(table, row, column);
  double value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(table.path, row.line, column,
                     "'" + field + "' is not a number");
  }
  return value;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lotsizer
