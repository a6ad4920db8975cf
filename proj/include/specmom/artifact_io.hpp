#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "specmom/rational.hpp"

namespace specmom {

/// Fully describes one CLI run; echoed into every artifact so the artifact
/// can be regenerated bit-identically from its own header.
struct RunConfig {
    std::string subcommand;  // moments | oracle-check | simulate | bounds | degrees
    int max_k = 0;
    BigRat intensity = BigRat(1);
    std::uint32_t n = 0;
    int sample_count = 0;
    std::uint64_t base_seed = 0;
    int bin_count = 0;
    std::string out_path;      // empty = stdout
    std::string format = "csv";  // csv | json
};

std::string config_to_json(const RunConfig& config);

/// Parses the JSON produced by config_to_json (also found on the "# config "
/// header line of CSV artifacts). Throws std::invalid_argument on malformed
/// input.
RunConfig config_from_json(const std::string& text);

/// One named table of pre-rendered cells. Exact values are rendered as
/// decimal or numerator/denominator strings, floating-point values with 17
/// significant digits, so no precision is lost in either output format.
struct ArtifactTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Artifact {
    RunConfig config;
    std::vector<ArtifactTable> tables;
};

/// Renders per config.format: CSV with "# config"/"# table" marker lines, or
/// a single JSON document.
void write_artifact(const Artifact& artifact, std::ostream& out);

/// %.17g
std::string format_double(double value);

}  // namespace specmom
