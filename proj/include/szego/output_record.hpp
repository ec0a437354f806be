#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace szego {

/// One line of CLI output.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> params;
  double value_re = 0.0;
  double value_im = 0.0;
  double abs_err = 0.0;
  std::string method;
};

/// Field-by-field equality; NaN compares equal to NaN.
bool same_record(const OutputRecord& a, const OutputRecord& b);

/// %.17g, which reads back to the same double.
std::string format_number(double x);

/// A JSON array of objects. Non-finite numbers are written as the strings
/// "nan", "inf", "-inf".
std::string records_to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_json(std::string_view text);

/// RFC 4180 CSV with columns command, method, value_re, value_im, abs_err and
/// one param:<key> column per parameter key in use. An empty param cell means
/// the record has no such key.
std::string records_to_csv(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_csv(std::string_view text);

}  // namespace szego
