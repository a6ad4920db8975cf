#include "specmom/artifact_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace specmom {

using nlohmann::json;

namespace {

json config_json(const RunConfig& config) {
    return json{{"subcommand", config.subcommand},
                {"max_k", config.max_k},
                {"intensity", rat_to_string(config.intensity)},
                {"n", config.n},
                {"samples", config.sample_count},
                {"seed", config.base_seed},
                {"bins", config.bin_count},
                {"out", config.out_path},
                {"format", config.format}};
}

}  // namespace

std::string config_to_json(const RunConfig& config) {
    return config_json(config).dump();
}

RunConfig config_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad config JSON: ") + e.what());
    }
    try {
        RunConfig config;
        config.subcommand = parsed.at("subcommand").get<std::string>();
        config.max_k = parsed.at("max_k").get<int>();
        config.intensity = parse_rational(parsed.at("intensity").get<std::string>());
        config.n = parsed.at("n").get<std::uint32_t>();
        config.sample_count = parsed.at("samples").get<int>();
        config.base_seed = parsed.at("seed").get<std::uint64_t>();
        config.bin_count = parsed.at("bins").get<int>();
        config.out_path = parsed.at("out").get<std::string>();
        config.format = parsed.at("format").get<std::string>();
        return config;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("incomplete config JSON: ") + e.what());
    }
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

void write_csv(const Artifact& artifact, std::ostream& out) {
    out << "# config " << config_to_json(artifact.config) << "\n";
    for (const auto& table : artifact.tables) {
        out << "# table " << table.name << "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
    }
}

void write_json(const Artifact& artifact, std::ostream& out) {
    json doc;
    doc["config"] = config_json(artifact.config);
    doc["tables"] = json::array();
    for (const auto& table : artifact.tables) {
        json jt;
        jt["name"] = table.name;
        jt["columns"] = table.columns;
        jt["rows"] = table.rows;
        doc["tables"].push_back(std::move(jt));
    }
    out << doc.dump(2) << "\n";
}

}  // namespace

void write_artifact(const Artifact& artifact, std::ostream& out) {
    if (artifact.config.format == "json")
        write_json(artifact, out);
    else
        write_csv(artifact, out);
}

}  // namespace specmom
