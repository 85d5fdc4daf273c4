#ifndef LOTSIZER_CSV_HPP_
#define LOTSIZER_CSV_HPP_

#include <string>
#include <vector>

#include "lotsizer/errors.hpp"

namespace lotsizer {

// One data row with the 1-based line number it came from.
struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};

struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// Reads a comma-separated file: UTF-8, '.' decimal separator, mandatory
// header, no quoting. Blank lines and lines starting with '#' are skipped.
// The header must match expected_header exactly and every row must have the
// same number of fields. Reported columns are 1-based field positions.
CsvTable read_csv(const std::string& path,
                  const std::vector<std::string>& expected_header);

// Strict full-field numeric parses; failures carry file/line/column.
int parse_int_field(const CsvTable& table, const CsvRow& row, int column);
double parse_double_field(const CsvTable& table, const CsvRow& row, int column);
const std::string& string_field(const CsvTable& table, const CsvRow& row,
                                int column);

// Writes content to path, throwing on failure.
void write_text_file(const std::string& path, const std::string& content);

// Reads a whole file, throwing on failure.
std::string read_text_file(const std::string& path);

}  // namespace lotsizer

#endif  // LOTSIZER_CSV_HPP_
