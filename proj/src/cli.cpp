#include "sdc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdc/records.hpp"

namespace sdc {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kRowNames[] = {"rB", "rC", "rD"};

// Writes to `path`, or to `fallback` when path is empty or "-".
void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    fn(file);
}

RecordFile load(const std::string& path) {
    try {
        return read_record_file(path);
    } catch (const RecordError& e) {
        if (e.line() == 0) throw UsageError(e.what());
        throw;
    }
}

std::string hex5(std::uint32_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(5) << std::setfill('0') << v;
    return s.str();
}

// ---- construct ----

struct ConstructArgs {
    std::string matrix;
    std::string rows[3];
    std::string ring = "auto";
    std::string out;
    unsigned threads = 0;
};

template <class Matrix>
void print_generator(std::ostream& os, const Matrix& omega) {
    const auto n = omega.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if constexpr (std::is_same_v<Matrix, BitMatrix>)
                os << (c == r ? '1' : '0');
            else
                os << std::setw(4) << (c == r ? "1" : "0");
        }
        os << " |";
        if constexpr (!std::is_same_v<Matrix, BitMatrix>) os << ' ';
        for (std::size_t c = 0; c < n; ++c) {
            if constexpr (std::is_same_v<Matrix, BitMatrix>)
                os << static_cast<int>(omega.get(r, c));
            else
                os << std::setw(4) << to_token(omega.get(r, c));
        }
        os << '\n';
    }
}

void print_report(std::ostream& os, const ConditionReport& report) {
    for (const auto& c : report.conditions) os << "  " << (c.holds ? "holds " : "fails ") << c.equation << '\n';
    os << (report.self_dual() ? "self-dual: " : "not self-dual: ") << report.describe() << '\n';
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const auto c = parse_construction(a.matrix);
    const auto count = row_count(c);
    std::vector<R1Vector> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i >= count) {
            if (!a.rows[i].empty())
                throw UsageError(std::string("--") + kRowNames[i] + " is not used by " + a.matrix);
            continue;
        }
        if (a.rows[i].empty()) throw UsageError(std::string("--") + kRowNames[i] + " is required for " + a.matrix);
        R1Vector v;
        try {
            v = parse_vector(a.rows[i]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--") + kRowNames[i] + ": " + e.what());
        }
        if (v.size() != row_length(c))
            throw UsageError(std::string("--") + kRowNames[i] + " needs " + std::to_string(row_length(c)) +
                             " entries for " + a.matrix + ", got " + std::to_string(v.size()));
        rows.push_back(std::move(v));
    }
    const bool has_u = std::any_of(rows.begin(), rows.end(), [](const R1Vector& v) {
        return std::any_of(v.begin(), v.end(), [](R1Element x) { return x.b != 0; });
    });
    Ring ring = has_u ? Ring::r1 : Ring::f2;
    if (a.ring != "auto") ring = parse_ring(a.ring);

    CodeRecord rec;
    rec.construction = c;
    rec.ring = ring;
    for (const auto& v : rows) rec.rows.push_back(format_vector(v));
    rec.tool_version = std::string(tool_version());

    bool self_dual = false;
    if (ring == Ring::f2) {
        BinaryRows fr;
        try {
            fr = binary_rows(rec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto omega = omega_matrix(fr);
        out << "[I | Omega] for " << a.matrix << " over F2\n";
        print_generator(out, omega);
        const auto report = check_selfdual_blocks(fr);
        print_report(out, report);
        self_dual = report.self_dual();
        if (self_dual) rec.params = record_params(analyze(StandardFormCode(omega), a.threads));
        rec.id = a.matrix + "-" + hex5(pack_alphas(fr.alphas()));
    } else {
        const auto fr = lifted_rows(rec);
        const auto omega = omega_matrix(fr);
        out << "[I | Omega] for " << a.matrix << " over R1\n";
        print_generator(out, omega);
        const auto report = check_selfdual_blocks(fr);
        print_report(out, report);
        self_dual = report.self_dual();
        if (self_dual) rec.params = record_params(analyze(StandardFormCode(gray_standard_form(omega)), a.threads));
        std::uint32_t av = 0, bv = 0;
        const auto alphas = fr.alphas();
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            av |= std::uint32_t{alphas[i].a} << i;
            bv |= std::uint32_t{alphas[i].b} << i;
        }
        rec.id = a.matrix + "-" + hex5(av) + "-u" + hex5(bv);
    }
    if (!self_dual) return kExitMismatch;

    const auto& p = rec.params;
    out << "[" << p.n << "," << p.k << "," << p.d << "] Type " << to_string(p.type);
    if (p.family != Family::not_applicable)
        out << ", " << to_string(p.family) << " gamma=" << *p.gamma << " beta=" << *p.beta;
    out << '\n' << "record: " << serialize_record(rec) << '\n';
    if (!a.out.empty()) {
        RecordFile file;
        file.command = "construct";
        file.records.push_back(rec);
        with_output(a.out, out, [&](std::ostream& os) { write_records(os, file); });
    }
    return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& path, unsigned threads, std::ostream& out, std::ostream& err) {
    RecordFile file;
    try {
        file = load(path);
    } catch (const RecordError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    out << "sdc " << tool_version() << " verify " << path << '\n';
    if (file.records.empty()) {
        err << "warning: " << path << " contains no records\n";
        out << "verified 0 records\n";
        return kExitOk;
    }
    const auto checks = verify_records(file.records, threads);
    std::size_t failed = 0;
    for (const auto& chk : checks) {
        if (chk.ok()) {
            out << "PASS " << chk.id << '\n';
            continue;
        }
        ++failed;
        out << "FAIL " << chk.id << '\n';
        for (const auto& m : chk.mismatches) out << "  " << m << '\n';
    }
    out << "verified " << checks.size() << " records: " << checks.size() - failed << " passed, " << failed
        << " failed\n";
    return failed ? kExitMismatch : kExitOk;
}

// ---- search ----

struct SearchArgs {
    std::string matrix;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    int target_d = 6;
    std::string out;
    unsigned shards = 0;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.construction = parse_construction(a.matrix);
    cfg.target_d = a.target_d;
    cfg.budget = a.budget;
    cfg.seed = a.seed;
    cfg.shards = a.shards;
    RecordFile file;
    file.seed = a.seed;
    file.command = "search --matrix " + a.matrix + " --seed " + std::to_string(a.seed) + " --budget " +
                   std::to_string(a.budget) + " --target-d " + std::to_string(a.target_d);
    file.records = search_binary(cfg);
    with_output(a.out, out, [&](std::ostream& os) { write_records(os, file); });
    err << "search: " << file.records.size() << " records from " << a.budget << " trials (seed " << a.seed << ")\n";
    return kExitOk;
}

// ---- lift ----

struct LiftArgs {
    std::string in;
    std::string id;
    std::string mode = "exhaustive";
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    std::string out;
    unsigned shards = 0;
};

int cmd_lift(const LiftArgs& a, bool count_given, std::ostream& out, std::ostream& err) {
    const auto mode = parse_lift_mode(a.mode);
    if (mode == LiftMode::sampled && !count_given) throw UsageError("--mode sampled requires --count");
    if (mode == LiftMode::exhaustive && count_given) throw UsageError("--count is only valid with --mode sampled");
    const auto input = load(a.in);
    std::vector<const CodeRecord*> bases;
    for (const auto& r : input.records)
        if (a.id.empty() ? r.ring == Ring::f2 : r.id == a.id) bases.push_back(&r);
    if (bases.empty())
        throw UsageError(a.id.empty() ? "no binary records in '" + a.in + "'"
                                      : "no record '" + a.id + "' in '" + a.in + "'");

    RecordFile file;
    file.seed = a.seed;
    file.command = "lift --mode " + a.mode + (count_given ? " --count " + std::to_string(a.count) : "") + " --seed " +
                   std::to_string(a.seed);
    for (const auto* base : bases) {
        LiftConfig cfg;
        cfg.base = *base;
        cfg.mode = mode;
        cfg.count = a.count;
        cfg.seed = a.seed;
        cfg.shards = a.shards;
        auto lifts = lift_code(cfg);
        err << "lift: " << base->id << " -> " << lifts.size() << " lifts with d = 12\n";
        for (auto& l : lifts) file.records.push_back(std::move(l));
    }
    with_output(a.out, out, [&](std::ostream& os) { write_records(os, file); });
    return kExitOk;
}

// ---- report ----

struct ReportArgs {
    std::vector<std::string> in;
    bool dedup = false;
    std::string format = "text";
    std::string out;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
    if (a.format != "text" && a.format != "csv") throw UsageError("--format must be text or csv");
    std::vector<CodeRecord> records;
    std::vector<std::string> seeds;
    for (const auto& path : a.in) {
        auto file = load(path);
        if (file.seed) seeds.push_back(std::to_string(*file.seed));
        for (auto& r : file.records) records.push_back(std::move(r));
    }
    if (a.dedup) records = dedup_by_fingerprint(records);

    const std::vector<std::string> header = {"id", "type", "rB", "rC", "rD", "gamma", "beta", "aut"};
    std::vector<std::vector<std::string>> table;
    for (const auto& r : records) {
        const auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string{}; };
        table.push_back({r.id, std::string(to_string(r.params.type)), r.rows.size() > 0 ? r.rows[0] : "",
                         r.rows.size() > 1 ? r.rows[1] : "", r.rows.size() > 2 ? r.rows[2] : "", opt(r.params.gamma),
                         opt(r.params.beta), r.aut.value_or("")});
    }

    with_output(a.out, out, [&](std::ostream& os) {
        if (a.format == "csv") {
            for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
            os << '\n';
            for (const auto& row : table) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
                os << '\n';
            }
            return;
        }
        os << "# sdc " << tool_version() << ", " << records.size() << " records";
        if (!seeds.empty()) {
            os << ", seed";
            for (const auto& s : seeds) os << ' ' << s;
        }
        os << '\n';
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& row : table)
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& row) {
            std::string s;
            for (std::size_t i = 0; i < row.size(); ++i) {
                s += row[i];
                if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            os << s << '\n';
        };
        line(header);
        for (const auto& row : table) line(row);
    });
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-dual codes from composite group-ring matrices", "sdc"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    const std::vector<std::string> matrices = {"omega1", "omega2", "omega3"};
    std::function<int()> action;

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build [I | Omega] from first rows and check self-duality");
    construct->add_option("--matrix", ca.matrix, "Construction")->required()->check(CLI::IsMember(matrices));
    construct->add_option("--rB", ca.rows[0], "First row of B");
    construct->add_option("--rC", ca.rows[1], "First row of C");
    construct->add_option("--rD", ca.rows[2], "First row of D (omega2, omega3)");
    construct->add_option("--ring", ca.ring, "F2, R1 or auto")->check(CLI::IsMember({"auto", "F2", "R1"}));
    construct->add_option("--out", ca.out, "Also write the record to this file");
    construct->add_option("--threads", ca.threads, "Worker threads (0: default)");
    construct->callback([&] { action = [&] { return cmd_construct(ca, out); }; });

    std::string verify_in;
    unsigned verify_threads = 0;
    auto* verify = app.add_subcommand("verify", "Re-derive and compare every record in a file");
    verify->add_option("file,--in", verify_in, "Record file")->required();
    verify->add_option("--threads", verify_threads, "Worker threads (0: default)");
    verify->callback([&] { action = [&] { return cmd_verify(verify_in, verify_threads, out, err); }; });

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Random search for binary self-dual [36,18] codes");
    search->add_option("--matrix", sa.matrix, "Construction")->required()->check(CLI::IsMember(matrices));
    search->add_option("--seed", sa.seed, "64-bit seed")->capture_default_str();
    search->add_option("--budget", sa.budget, "Number of trials")->required();
    search->add_option("--target-d", sa.target_d, "Minimum distance to keep")
        ->check(CLI::IsMember({6, 8}))
        ->capture_default_str();
    search->add_option("--out", sa.out, "Output record file (default stdout)");
    search->add_option("--shards", sa.shards, "Parallel shards (0: SDC_SHARDS or hardware)");
    search->callback([&] { action = [&] { return cmd_search(sa, out, err); }; });

    LiftArgs la;
    auto* lift = app.add_subcommand("lift", "Lift binary records to F2+uF2 and keep Gray images with d = 12");
    lift->add_option("--in", la.in, "Input record file")->required();
    lift->add_option("--id", la.id, "Lift only this record");
    lift->add_option("--mode", la.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}))
        ->capture_default_str();
    auto* count_opt = lift->add_option("--count", la.count, "Draws for sampled mode");
    lift->add_option("--seed", la.seed, "64-bit seed")->capture_default_str();
    lift->add_option("--out", la.out, "Output record file (default stdout)");
    lift->add_option("--shards", la.shards, "Parallel shards (0: SDC_SHARDS or hardware)");
    lift->callback([&] { action = [&, count_opt] { return cmd_lift(la, count_opt->count() > 0, out, err); }; });

    ReportArgs ra;
    auto* report = app.add_subcommand("report", "Render records as a table");
    report->add_option("files,--in", ra.in, "Record files")->required();
    report->add_flag("--dedup", ra.dedup, "Keep one record per (n,k,d,family,gamma,beta)");
    report->add_option("--format", ra.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    report->add_option("--out", ra.out, "Output file (default stdout)");
    report->callback([&] { action = [&] { return cmd_report(ra, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RecordError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace sdc
