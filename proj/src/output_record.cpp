#include "szego/output_record.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <set>

#include "json.hpp"

#include "szego/types.hpp"

namespace szego {

namespace {

using nlohmann::json;

constexpr std::string_view kParamPrefix = "param:";
const std::vector<std::string> kFixedColumns{"command", "method", "value_re", "value_im", "abs_err"};

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double parse_number(const std::string& text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || std::isspace(static_cast<unsigned char>(text[0]))) {
    throw UsageError("not a number: '" + text + "'");
  }
  return x;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw UsageError("expected a number in record");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw UsageError("unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool same_record(const OutputRecord& a, const OutputRecord& b) {
  return a.command == b.command && a.params == b.params && a.method == b.method &&
         same_number(a.value_re, b.value_re) && same_number(a.value_im, b.value_im) &&
         same_number(a.abs_err, b.abs_err);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string records_to_json(const std::vector<OutputRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    out.push_back(json{{"command", r.command},
                       {"params", r.params},
                       {"value_re", number_to_json(r.value_re)},
                       {"value_im", number_to_json(r.value_im)},
                       {"abs_err", number_to_json(r.abs_err)},
                       {"method", r.method}});
  }
  return out.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON records: ") + e.what());
  }
  if (!doc.is_array()) throw UsageError("JSON records must be an array");
  std::vector<OutputRecord> records;
  for (const auto& j : doc) {
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.value_re = number_from_json(j.at("value_re"));
    r.value_im = number_from_json(j.at("value_im"));
    r.abs_err = number_from_json(j.at("abs_err"));
    r.method = j.at("method").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

std::string records_to_csv(const std::vector<OutputRecord>& records) {
  std::set<std::string> keys;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.params) keys.insert(k);
  }
  std::string out;
  auto end_row = [&] { out += "\r\n"; };
  for (std::size_t i = 0; i < kFixedColumns.size(); ++i) out += (i ? "," : "") + kFixedColumns[i];
  for (const auto& k : keys) out += "," + csv_field(std::string(kParamPrefix) + k);
  end_row();
  for (const auto& r : records) {
    out += csv_field(r.command) + "," + csv_field(r.method) + "," + format_number(r.value_re) + "," +
           format_number(r.value_im) + "," + format_number(r.abs_err);
    for (const auto& k : keys) {
      const auto it = r.params.find(k);
      out += "," + (it == r.params.end() ? std::string() : csv_field(it->second));
    }
    end_row();
  }
  return out;
}

std::vector<OutputRecord> records_from_csv(std::string_view text) {
  const auto rows = parse_csv_rows(text);
  if (rows.empty()) throw UsageError("CSV records need a header row");
  const auto& header = rows.front();
  if (header.size() < kFixedColumns.size() ||
      !std::equal(kFixedColumns.begin(), kFixedColumns.end(), header.begin())) {
    throw UsageError("unexpected CSV header");
  }
  std::vector<std::string> keys;
  for (std::size_t i = kFixedColumns.size(); i < header.size(); ++i) {
    if (header[i].rfind(kParamPrefix, 0) != 0) throw UsageError("unexpected CSV column '" + header[i] + "'");
    keys.push_back(header[i].substr(kParamPrefix.size()));
  }
  std::vector<OutputRecord> records;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != header.size()) throw UsageError("CSV row " + std::to_string(i) + " has the wrong width");
    OutputRecord r;
    r.command = row[0];
    r.method = row[1];
    r.value_re = parse_number(row[2]);
    r.value_im = parse_number(row[3]);
    r.abs_err = parse_number(row[4]);
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const auto& cell = row[kFixedColumns.size() + k];
      if (!cell.empty()) r.params[keys[k]] = cell;
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace szego
