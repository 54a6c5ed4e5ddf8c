#include "swarmsim/io.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace swarmsim {

namespace {

using nlohmann::json;

// Shortest representation that round-trips the exact double.
std::string fmt_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_fail(std::string_view origin, int line, const std::string& what) {
    throw ConfigError(std::string(origin) + ":" + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view s, std::string_view origin, int line,
                    const std::string& field) {
    double out = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end)
        parse_fail(origin, line, "field '" + field + "': expected a number, got '" +
                                     std::string(s) + "'");
    return out;
}

long long parse_int(std::string_view s, std::string_view origin, int line,
                    const std::string& field) {
    long long out = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        parse_fail(origin, line, "field '" + field + "': expected an integer, got '" +
                                     std::string(s) + "'");
    return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view origin, int line,
                        const std::string& field) {
    std::uint64_t out = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        parse_fail(origin, line, "field '" + field + "': expected an unsigned integer, got '" +
                                     std::string(s) + "'");
    return out;
}

Vec3 parse_vec3(std::string_view s, std::string_view origin, int line,
                const std::string& field) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        parts.push_back(trim(s.substr(
            start, comma == std::string_view::npos ? s.size() - start : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        parse_fail(origin, line, "field '" + field + "': expected x,y,z");
    Vec3 v;
    for (int k = 0; k < 3; ++k) v[k] = parse_double(parts[k], origin, line, field);
    return v;
}

std::string vec3_to_text(const Vec3& v) {
    return fmt_double(v.x()) + "," + fmt_double(v.y()) + "," + fmt_double(v.z());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("error while writing '" + path.string() + "'");
}

}  // namespace

SwarmConfig parse_config_text(std::string_view text, std::string_view origin) {
    SwarmConfig cfg;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            parse_fail(origin, line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) parse_fail(origin, line_no, "field '" + key + "': empty value");

        if (key == "uavs")
            cfg.uav_count = static_cast<int>(parse_int(value, origin, line_no, key));
        else if (key == "side_length")
            cfg.side_length = parse_double(value, origin, line_no, key);
        else if (key == "comm_range")
            cfg.comm_range = parse_double(value, origin, line_no, key);
        else if (key == "travel_range")
            cfg.travel_range = parse_double(value, origin, line_no, key);
        else if (key == "refresh_ticks")
            cfg.refresh_ticks = static_cast<long>(parse_int(value, origin, line_no, key));
        else if (key == "deploy")
            cfg.deploy_point = parse_vec3(value, origin, line_no, key);
        else if (key == "dest")
            cfg.dest_point = parse_vec3(value, origin, line_no, key);
        else if (key == "leader_speed")
            cfg.leader_speed = parse_double(value, origin, line_no, key);
        else if (key == "arrive_radius")
            cfg.arrive_radius = parse_double(value, origin, line_no, key);
        else if (key == "weight_limit")
            cfg.weight_limit = static_cast<int>(parse_int(value, origin, line_no, key));
        else if (key == "leader_id")
            cfg.leader_id = static_cast<int>(parse_int(value, origin, line_no, key));
        else if (key == "cohesion_gain")
            cfg.cohesion_gain = parse_double(value, origin, line_no, key);
        else if (key == "separation_radius")
            cfg.separation_radius = parse_double(value, origin, line_no, key);
        else if (key == "alignment_gain")
            cfg.alignment_gain = parse_double(value, origin, line_no, key);
        else if (key == "deploy_jitter")
            cfg.deploy_jitter = parse_double(value, origin, line_no, key);
        else if (key == "seed")
            cfg.seed = parse_u64(value, origin, line_no, key);
        else if (key == "max_ticks")
            cfg.max_ticks = static_cast<long>(parse_int(value, origin, line_no, key));
        else
            parse_fail(origin, line_no, "unknown field '" + key + "'");
    }
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(origin) + ": " + e.what());
    }
    return cfg;
}

SwarmConfig parse_config(const std::filesystem::path& path) {
    return parse_config_text(read_file(path), path.string());
}

std::string config_to_text(const SwarmConfig& cfg) {
    std::ostringstream out;
    out << "uavs = " << cfg.uav_count << "\n";
    out << "side_length = " << fmt_double(cfg.side_length) << "\n";
    out << "comm_range = " << fmt_double(cfg.comm_range) << "\n";
    if (cfg.travel_range) out << "travel_range = " << fmt_double(*cfg.travel_range) << "\n";
    out << "refresh_ticks = " << cfg.refresh_ticks << "\n";
    out << "deploy = " << vec3_to_text(cfg.deploy_point) << "\n";
    out << "dest = " << vec3_to_text(cfg.dest_point) << "\n";
    out << "leader_speed = " << fmt_double(cfg.leader_speed) << "\n";
    out << "arrive_radius = " << fmt_double(cfg.arrive_radius) << "\n";
    if (cfg.weight_limit) out << "weight_limit = " << *cfg.weight_limit << "\n";
    if (cfg.leader_id) out << "leader_id = " << *cfg.leader_id << "\n";
    out << "cohesion_gain = " << fmt_double(cfg.cohesion_gain) << "\n";
    out << "separation_radius = " << fmt_double(cfg.separation_radius) << "\n";
    out << "alignment_gain = " << fmt_double(cfg.alignment_gain) << "\n";
    out << "deploy_jitter = " << fmt_double(cfg.deploy_jitter) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "max_ticks = " << cfg.max_ticks << "\n";
    return out.str();
}

void emit_config(const SwarmConfig& cfg, const std::filesystem::path& path) {
    write_file(path, config_to_text(cfg));
}

std::string trace_to_jsonl(const SimResult& result) {
    std::ostringstream out;
    for (const TickRecord& rec : result.trace) {
        json uavs = json::array();
        for (std::size_t i = 0; i < rec.positions.size(); ++i) {
            const auto& p = rec.positions[i];
            const auto& v = rec.velocities[i];
            uavs.push_back({{"id", static_cast<int>(i)},
                            {"pos", {p.x(), p.y(), p.z()}},
                            {"vel", {v.x(), v.y(), v.z()}},
                            {"weight", rec.weights[i]},
                            {"leader", rec.leader_flags[i] != 0}});
        }
        json edges = json::array();
        for (const auto& [a, b] : rec.edges) edges.push_back({a, b});

        json record = {{"tick", rec.tick},
                       {"uavs", std::move(uavs)},
                       {"edges", std::move(edges)},
                       {"connected", rec.connected},
                       {"min_pairwise_distance",
                        rec.min_pairwise ? json(*rec.min_pairwise) : json(nullptr)},
                       {"out_of_bounds", rec.out_of_bounds}};
        out << record.dump() << "\n";
    }
    return out.str();
}

void emit_trace(const SimResult& result, const std::filesystem::path& path) {
    write_file(path, trace_to_jsonl(result));
}

std::string summary_to_csv(const ExperimentSummary& summary) {
    std::ostringstream out;
    out << "n,replicate,seed,arrival_tick,connectivity_fraction,min_pairwise_distance\n";
    for (const auto& row : summary.rows) {
        out << row.n << ',' << row.replicate << ',' << row.seed << ',';
        if (row.arrival_tick) out << *row.arrival_tick;
        out << ',' << fmt_double(row.connectivity_fraction) << ',';
        if (row.min_pairwise) out << fmt_double(*row.min_pairwise);
        out << '\n';
    }
    out << "\nn,mean_arrival,overhead_pct\n";
    for (const auto& agg : summary.aggregates) {
        out << agg.n << ',';
        if (agg.mean_arrival) out << fmt_double(*agg.mean_arrival);
        out << ',';
        if (agg.overhead_pct) out << fmt_double(*agg.overhead_pct);
        out << '\n';
    }
    return out.str();
}

void emit_summary(const ExperimentSummary& summary, const std::filesystem::path& path) {
    write_file(path, summary_to_csv(summary));
}

ExperimentSummary parse_summary_csv(std::string_view text) {
    ExperimentSummary summary;
    std::istringstream in{std::string(text)};
    std::string line;
    int section = 0;  // 0: rows header, 1: rows, 2: aggregates header, 3: aggregates
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (section == 0) {
            if (sv != "n,replicate,seed,arrival_tick,connectivity_fraction,min_pairwise_distance")
                parse_fail("<summary>", line_no, "unexpected header");
            section = 1;
            continue;
        }
        if (sv == "n,mean_arrival,overhead_pct") {
            section = 3;
            continue;
        }
        std::vector<std::string_view> cells;
        std::size_t start = 0;
        const std::string_view row_sv = sv;
        while (true) {
            const std::size_t comma = row_sv.find(',', start);
            cells.push_back(row_sv.substr(
                start, comma == std::string_view::npos ? row_sv.size() - start : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (section == 1) {
            if (cells.size() != 6) parse_fail("<summary>", line_no, "expected 6 cells");
            ExperimentRow row;
            row.n = static_cast<int>(parse_int(cells[0], "<summary>", line_no, "n"));
            row.replicate =
                static_cast<int>(parse_int(cells[1], "<summary>", line_no, "replicate"));
            row.seed = parse_u64(cells[2], "<summary>", line_no, "seed");
            if (!cells[3].empty())
                row.arrival_tick =
                    static_cast<long>(parse_int(cells[3], "<summary>", line_no, "arrival_tick"));
            row.connectivity_fraction =
                parse_double(cells[4], "<summary>", line_no, "connectivity_fraction");
            if (!cells[5].empty())
                row.min_pairwise =
                    parse_double(cells[5], "<summary>", line_no, "min_pairwise_distance");
            summary.rows.push_back(row);
        } else if (section == 3) {
            if (cells.size() != 3) parse_fail("<summary>", line_no, "expected 3 cells");
            ExperimentAggregate agg;
            agg.n = static_cast<int>(parse_int(cells[0], "<summary>", line_no, "n"));
            if (!cells[1].empty())
                agg.mean_arrival = parse_double(cells[1], "<summary>", line_no, "mean_arrival");
            if (!cells[2].empty())
                agg.overhead_pct = parse_double(cells[2], "<summary>", line_no, "overhead_pct");
            summary.aggregates.push_back(agg);
        } else {
            parse_fail("<summary>", line_no, "row outside any section");
        }
    }
    return summary;
}

ExperimentSummary parse_summary(const std::filesystem::path& path) {
    return parse_summary_csv(read_file(path));
}

}  // namespace swarmsim
