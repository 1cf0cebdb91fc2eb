#include "sdc/records.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace sdc {

using nlohmann::json;

namespace {

constexpr const char* kRowNames[] = {"rB", "rC", "rD"};
constexpr std::string_view kRecordKeys[] = {"aut",    "construction", "id",   "params",
                                            "parent", "ring",         "rows", "seed",
                                            "tool_version"};
constexpr std::string_view kHeaderKeys[] = {"command", "format", "format_version", "seed", "tool_version"};

template <std::size_t N>
bool known(const std::string& key, const std::string_view (&keys)[N]) {
    return std::find(std::begin(keys), std::end(keys), key) != std::end(keys);
}

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

template <class T>
json or_null(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json to_json(const CodeRecord& rec) {
    json j;
    j["id"] = rec.id;
    j["construction"] = std::string(to_string(rec.construction));
    j["ring"] = std::string(to_string(rec.ring));
    json rows = json::object();
    for (std::size_t i = 0; i < rec.rows.size() && i < 3; ++i) rows[kRowNames[i]] = rec.rows[i];
    j["rows"] = rows;
    json params;
    params["n"] = rec.params.n;
    params["k"] = rec.params.k;
    params["d"] = rec.params.d;
    params["type"] = std::string(to_string(rec.params.type));
    params["family"] = std::string(to_string(rec.params.family));
    if (rec.params.gamma) params["gamma"] = *rec.params.gamma;
    if (rec.params.beta) params["beta"] = *rec.params.beta;
    j["params"] = params;
    j["parent"] = or_null(rec.parent);
    j["aut"] = or_null(rec.aut);
    j["seed"] = or_null(rec.seed);
    j["tool_version"] = rec.tool_version;
    for (const auto& [key, raw] : rec.extra) j[key] = json::parse(raw);
    return j;
}

CodeRecord from_json(const json& j) {
    CodeRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.construction = parse_construction(j.at("construction").get<std::string>());
    rec.ring = parse_ring(j.at("ring").get<std::string>());
    const auto& rows = j.at("rows");
    for (std::size_t i = 0; i < row_count(rec.construction); ++i)
        rec.rows.push_back(rows.at(kRowNames[i]).get<std::string>());
    const auto& p = j.at("params");
    rec.params.n = p.at("n").get<int>();
    rec.params.k = p.at("k").get<int>();
    rec.params.d = p.at("d").get<int>();
    rec.params.type = parse_code_type(p.at("type").get<std::string>());
    rec.params.family = parse_family(p.at("family").get<std::string>());
    rec.params.gamma = optional_field<std::int64_t>(p, "gamma");
    rec.params.beta = optional_field<std::int64_t>(p, "beta");
    rec.parent = optional_field<std::string>(j, "parent");
    rec.aut = optional_field<std::string>(j, "aut");
    rec.seed = optional_field<std::uint64_t>(j, "seed");
    rec.tool_version = j.value("tool_version", std::string{});
    for (const auto& [key, value] : j.items())
        if (!known(key, kRecordKeys)) rec.extra.emplace_back(key, value.dump());
    return rec;
}

}  // namespace

RecordError::RecordError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string serialize_record(const CodeRecord& rec) { return to_json(rec).dump(); }

CodeRecord parse_record(std::string_view line) {
    try {
        return from_json(json::parse(line));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string serialize_header(const RecordFile& file) {
    json j;
    j["format"] = std::string(kRecordFormat);
    j["format_version"] = file.format_version;
    j["tool_version"] = file.tool_version.empty() ? std::string(tool_version()) : file.tool_version;
    j["seed"] = or_null(file.seed);
    if (file.command) j["command"] = *file.command;
    for (const auto& [key, raw] : file.extra) j[key] = json::parse(raw);
    return j.dump();
}

RecordFile read_records(std::istream& in) {
    RecordFile file;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw RecordError(lineno, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object()) throw RecordError(lineno, "expected a JSON object");
        if (first && j.contains("format")) {
            first = false;
            if (j.at("format") != kRecordFormat) throw RecordError(lineno, "not an sdc record file");
            file.has_header = true;
            file.format_version = j.value("format_version", 0);
            if (file.format_version < 1 || file.format_version > kRecordFormatVersion)
                throw RecordError(lineno, "unsupported format_version " + std::to_string(file.format_version));
            file.tool_version = j.value("tool_version", std::string{});
            file.seed = optional_field<std::uint64_t>(j, "seed");
            file.command = optional_field<std::string>(j, "command");
            for (const auto& [key, value] : j.items())
                if (!known(key, kHeaderKeys)) file.extra.emplace_back(key, value.dump());
            continue;
        }
        first = false;
        try {
            file.records.push_back(from_json(j));
        } catch (const std::exception& e) {
            throw RecordError(lineno, e.what());
        }
    }
    return file;
}

RecordFile read_record_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RecordError(0, "cannot open '" + path.string() + "'");
    return read_records(in);
}

void write_records(std::ostream& out, const RecordFile& file) {
    out << serialize_header(file) << '\n';
    for (const auto& rec : file.records) out << serialize_record(rec) << '\n';
}

}  // namespace sdc
