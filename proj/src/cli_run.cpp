#include "specmom/cli_run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "specmom/bounds.hpp"
#include "specmom/estimate.hpp"
#include "specmom/graph_sample.hpp"
#include "specmom/walk_oracle.hpp"
#include "specmom/walk_table.hpp"

namespace specmom {

namespace {

std::string itoa64(std::uint64_t v) { return std::to_string(v); }

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

void validate_common(const RunConfig& config) {
    require(config.format == "csv" || config.format == "json", "format must be csv or json");
}

// ---- moments ----------------------------------------------------------

Artifact moments_artifact(const RunConfig& config) {
    require(config.max_k >= 0, "--max-k must be nonnegative");
    require(config.max_k <= kMaxTableOrder, "--max-k exceeds the table ceiling of 64");
    require(config.intensity >= 0, "--intensity must be nonnegative");

    const MomentSequence seq = moment_sequence(config.max_k, config.intensity);
    ArtifactTable table{"moments", {"k", "m_k"}, {}};
    const int first = config.max_k == 0 ? 0 : 1;
    for (int k = first; k <= config.max_k; ++k)
        table.rows.push_back({std::to_string(k), rat_to_string(seq.moments[k])});
    return Artifact{config, {std::move(table)}};
}

// ---- oracle-check -----------------------------------------------------

Artifact oracle_artifact(const RunConfig& config, bool& mismatch) {
    require(config.max_k >= 1, "--max-k must be positive");
    require(config.max_k <= kMaxOracleOrder, "--max-k exceeds the oracle guard of 6");
    require(config.intensity == 1, "oracle-check is defined for intensity 1");

    const WalkCountTable table = build_walk_table(config.max_k, BigRat(1));
    ArtifactTable out{"oracle_check", {"k", "m_recurrence", "m_oracle", "walks_match", "match"},
                      {}};
    mismatch = false;
    for (int k = 1; k <= config.max_k; ++k) {
        const BigRat recurrence = moment_limit(k, table);
        const std::uint64_t oracle = oracle_moment(k);
        const auto tally = walks_by_returns(k);
        bool walks_match = true;
        for (int v = 0; v <= k; ++v) {
            const auto it = tally.find(v);
            const std::uint64_t counted = it == tally.end() ? 0 : it->second;
            if (table.at(k, v) != BigRat(itoa64(counted))) walks_match = false;
        }
        const bool match = walks_match && recurrence == BigRat(itoa64(oracle));
        if (!match) mismatch = true;
        out.rows.push_back({std::to_string(k), rat_to_string(recurrence), itoa64(oracle),
                            walks_match ? "1" : "0", match ? "1" : "0"});
    }
    return Artifact{config, {std::move(out)}};
}

// ---- simulate ---------------------------------------------------------

void append_ecdf_tables(Artifact& artifact, const std::string& prefix,
                        const std::vector<double>& pool, int bin_count) {
    const EcdfHistogram shapes = ecdf_and_histogram(pool, bin_count);
    ArtifactTable ecdf{prefix + "ecdf", {"lambda", "sigma"}, {}};
    for (const auto& point : shapes.ecdf)
        ecdf.rows.push_back({format_double(point.lambda), format_double(point.sigma)});
    ArtifactTable hist{prefix + "histogram", {"bin_center", "mass"}, {}};
    for (const auto& bin : shapes.histogram)
        hist.rows.push_back({format_double(bin.bin_center), format_double(bin.mass)});
    artifact.tables.push_back(std::move(ecdf));
    artifact.tables.push_back(std::move(hist));
}

Artifact simulate_artifact(const RunConfig& config, bool& breach) {
    require(config.max_k >= 1, "--max-k must be positive");
    require(2 * config.max_k <= kMaxTableOrder, "--max-k exceeds the table ceiling");
    require(config.n >= 1, "--n must be positive");
    require(config.n <= kMaxDenseOrder, "--n exceeds the dense eigensolver guard of 4096");
    require(config.sample_count >= 2, "--samples must be at least 2");
    require(config.bin_count >= 1, "--bins must be positive");
    require(config.intensity > 0 && config.intensity <= static_cast<long>(config.n),
            "--intensity must lie in (0, n]");

    const double intensity = rat_to_double(config.intensity);
    const int max_s = 2 * config.max_k;
    const SpectralEstimate est =
        estimate_moments(config.n, intensity, max_s, config.sample_count, config.base_seed);
    const MomentSequence limits = moment_sequence(config.max_k, config.intensity);

    Artifact artifact{config, {}};
    ArtifactTable moments{"moments", {"s", "mean", "stderr"}, {}};
    for (const auto& rec : est.records)
        moments.rows.push_back(
            {std::to_string(rec.order), format_double(rec.mean), format_double(rec.stderr_)});
    artifact.tables.push_back(std::move(moments));

    append_ecdf_tables(artifact, "", est.pooled_eigenvalues, config.bin_count);
    const auto laplacian_pool = pooled_spectrum(config.n, intensity, MatrixKind::laplacian,
                                                config.sample_count, config.base_seed);
    append_ecdf_tables(artifact, "laplacian_", laplacian_pool, config.bin_count);

    // Limit comparison: even orders against the recurrence moments.
    ArtifactTable verdicts{"verdicts",
                           {"k", "estimate", "limit", "abs_error", "allowance", "pass"},
                           {}};
    breach = false;
    for (int k = 1; k <= config.max_k; ++k) {
        const MomentRecord& rec = est.records[2 * k];
        const double limit = rat_to_double(limits.moments[k]);
        const double abs_error = std::abs(rec.mean - limit);
        const double allowance =
            3.0 * rec.stderr_ + kFiniteSizeCoefficient / static_cast<double>(config.n);
        const bool pass = abs_error <= allowance;
        if (!pass) breach = true;
        verdicts.rows.push_back({std::to_string(k), format_double(rec.mean),
                                 rat_to_string(limits.moments[k]), format_double(abs_error),
                                 format_double(allowance), pass ? "1" : "0"});
    }
    artifact.tables.push_back(std::move(verdicts));
    return artifact;
}

// ---- bounds -----------------------------------------------------------

Artifact bounds_artifact(const RunConfig& config) {
    require(config.max_k >= 2, "--max-k must be at least 2");
    require(config.max_k <= kMaxTableOrder, "--max-k exceeds the table ceiling of 64");
    require(config.intensity == 1, "bounds are stated for intensity 1");

    const WalkCountTable table = build_walk_table(config.max_k, BigRat(1));
    const BoundReport report = check_bounds(table, BigInt(kDefaultC1), BigInt(kDefaultC2));

    ArtifactTable records{"bound_report", {"bound", "k", "r", "lhs", "rhs", "holds"}, {}};
    for (const auto& rec : report.records)
        records.rows.push_back({bound_kind_name(rec.kind), std::to_string(rec.k),
                                std::to_string(rec.r), rat_to_string(rec.lhs),
                                rat_to_string(rec.rhs), rec.holds ? "1" : "0"});

    ArtifactTable summary{"bound_summary", {"bound", "constant", "all_hold"}, {}};
    summary.rows.push_back({"walk_upper", std::to_string(kDefaultC1),
                            report.all_hold(BoundKind::walk_upper) ? "1" : "0"});
    summary.rows.push_back({"star_lower", "", report.all_hold(BoundKind::star_lower) ? "1" : "0"});
    summary.rows.push_back({"moment_upper", std::to_string(kDefaultC2),
                            report.all_hold(BoundKind::moment_upper) ? "1" : "0"});
    return Artifact{config, {std::move(records), std::move(summary)}};
}

// ---- degrees ----------------------------------------------------------

Artifact degrees_artifact(const RunConfig& config) {
    require(config.n >= 1, "--n must be positive");
    require(config.sample_count >= 1, "--samples must be positive");
    require(config.intensity > 0 && config.intensity <= static_cast<long>(config.n),
            "--intensity must lie in (0, n]");

    const double intensity = rat_to_double(config.intensity);
    std::map<std::uint32_t, std::uint64_t> pooled;
    std::vector<double> tv_per_seed;
    std::vector<std::uint32_t> max_per_seed;
    for (int index = 0; index < config.sample_count; ++index) {
        const GraphSample sample = sample_graph(config.n, intensity, config.base_seed + index);
        const auto histogram = degree_statistics(sample);
        for (const auto& [degree, count] : histogram) pooled[degree] += count;
        tv_per_seed.push_back(tv_distance_to_poisson(histogram, config.n, intensity));
        max_per_seed.push_back(histogram.rbegin()->first);
    }

    ArtifactTable degrees{"degrees", {"degree", "count"}, {}};
    for (const auto& [degree, count] : pooled)
        degrees.rows.push_back({std::to_string(degree), itoa64(count)});

    double mean_tv = 0.0;
    for (double tv : tv_per_seed) mean_tv += tv;
    mean_tv /= static_cast<double>(tv_per_seed.size());
    const double pooled_tv = tv_distance_to_poisson(
        pooled, static_cast<std::uint64_t>(config.n) * config.sample_count, intensity);
    std::sort(max_per_seed.begin(), max_per_seed.end());
    const std::uint32_t median_max = max_per_seed[max_per_seed.size() / 2];

    ArtifactTable summary{
        "degree_summary", {"samples", "mean_tv", "pooled_tv", "median_max_degree"}, {}};
    summary.rows.push_back({std::to_string(config.sample_count), format_double(mean_tv),
                            format_double(pooled_tv), std::to_string(median_max)});
    return Artifact{config, {std::move(degrees), std::move(summary)}};
}

}  // namespace

Artifact build_artifact(const RunConfig& config) {
    validate_common(config);
    bool ignored = false;
    if (config.subcommand == "moments") return moments_artifact(config);
    if (config.subcommand == "oracle-check") return oracle_artifact(config, ignored);
    if (config.subcommand == "simulate") return simulate_artifact(config, ignored);
    if (config.subcommand == "bounds") return bounds_artifact(config);
    if (config.subcommand == "degrees") return degrees_artifact(config);
    throw std::invalid_argument("unknown subcommand: " + config.subcommand);
}

int run_subcommand(const RunConfig& config, std::ostream& fallback_out, std::string& error_out) {
    Artifact artifact{config, {}};
    int status = kExitOk;
    try {
        validate_common(config);
        if (config.subcommand == "moments") {
            artifact = moments_artifact(config);
        } else if (config.subcommand == "oracle-check") {
            bool mismatch = false;
            artifact = oracle_artifact(config, mismatch);
            if (mismatch) {
                status = kExitOracleMismatch;
                error_out = "recurrence and enumeration oracle disagree";
            }
        } else if (config.subcommand == "simulate") {
            bool breach = false;
            artifact = simulate_artifact(config, breach);
            if (breach) {
                status = kExitToleranceBreach;
                error_out = "a moment estimate missed its limit tolerance";
            }
        } else if (config.subcommand == "bounds") {
            artifact = bounds_artifact(config);
        } else if (config.subcommand == "degrees") {
            artifact = degrees_artifact(config);
        } else {
            throw std::invalid_argument("unknown subcommand: " + config.subcommand);
        }
    } catch (const EigensolverError& e) {
        error_out = e.what();
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        error_out = e.what();
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        error_out = e.what();
        return kExitValidation;
    }

    if (config.out_path.empty()) {
        write_artifact(artifact, fallback_out);
    } else {
        std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            error_out = "cannot open output file: " + config.out_path;
            return kExitValidation;
        }
        write_artifact(artifact, file);
        if (!file.good()) {
            error_out = "failed writing output file: " + config.out_path;
            return kExitValidation;
        }
    }
    return status;
}

}  // namespace specmom
