#include "cli/report.hpp"

#include <algorithm>

#include "cansub/error.hpp"

namespace cansub::cli {

namespace {

std::string cell(const Record& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) joined += ';';
      joined += cell(value[i]);
    }
    return joined;
  }
  return value.dump();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json-lines") return Format::kJsonLines;
  if (name == "csv") return Format::kCsv;
  throw Error(ErrorKind::kInvalidInput, "unknown format '" + std::string(name) + "' (json-lines or csv)");
}

std::string_view to_string(Format format) { return format == Format::kCsv ? "csv" : "json-lines"; }

void write_records(std::ostream& out, const std::vector<Record>& records, Format format) {
  if (format == Format::kJsonLines) {
    for (const auto& r : records) out << r.dump() << '\n';
    return;
  }
  if (records.empty()) return;
  std::vector<std::string> header;
  for (const auto& r : records) {
    for (const auto& [key, _] : r.items()) {
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "");
      if (r.contains(header[i])) out << cell(r[header[i]]);
    }
    out << '\n';
  }
}

}  // namespace cansub::cli
