#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cansub::cli {

/// Keys keep insertion order so rendered output is byte-stable.
using Record = nlohmann::ordered_json;

enum class Format { kJsonLines, kCsv };

Format parse_format(std::string_view name);
std::string_view to_string(Format format);

/// json-lines: one compact object per line.
/// csv: a header with every key in first-seen order, then one row per record.
/// Arrays are joined with ';'. Records missing a header key leave the cell empty.
void write_records(std::ostream& out, const std::vector<Record>& records, Format format);

}  // namespace cansub::cli
