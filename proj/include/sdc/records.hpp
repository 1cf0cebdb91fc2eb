#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/searchlift.hpp"

namespace sdc {

inline constexpr std::string_view kRecordFormat = "sdc-records";
inline constexpr int kRecordFormatVersion = 1;

/**
 * A record file: JSON Lines, one object per line. The first line is a
 * header {"format": "sdc-records", "format_version": 1, ...}; every other
 * line is one CodeRecord. Keys are written sorted, so writing the same
 * records twice gives identical bytes.
 */
struct RecordFile {
    bool has_header = false;
    int format_version = kRecordFormatVersion;
    std::string tool_version;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> command;
    std::vector<std::pair<std::string, std::string>> extra;  ///< unknown header keys, raw JSON
    std::vector<CodeRecord> records;
};

/// Malformed input; `line` is 1-based (0 when unknown).
class RecordError : public std::runtime_error {
public:
    RecordError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

std::string serialize_record(const CodeRecord& rec);
CodeRecord parse_record(std::string_view line);

std::string serialize_header(const RecordFile& file);

RecordFile read_records(std::istream& in);
/// Throws RecordError if the file cannot be opened.
RecordFile read_record_file(const std::filesystem::path& path);
void write_records(std::ostream& out, const RecordFile& file);

}  // namespace sdc
