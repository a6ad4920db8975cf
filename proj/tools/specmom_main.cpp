#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "specmom/cli_run.hpp"
#include "specmom/rational.hpp"

namespace {

struct RawOptions {
    int max_k = 0;
    std::string intensity = "1";
    std::uint32_t n = 0;
    int simulate_samples = 100;
    int degree_samples = 24;
    std::uint64_t seed = 1;
    int bins = 64;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--out", raw.out, "Artifact file path (stdout when omitted)");
    cmd->add_option("--format", raw.format, "Artifact format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limiting spectral moments of sparse random graphs: exact walk-count "
                 "recurrence, exhaustive walk enumeration, and Monte Carlo spectra"};
    app.require_subcommand(1);
    RawOptions raw;

    CLI::App* moments = app.add_subcommand("moments", "Exact limiting moments m_k");
    moments->add_option("--max-k", raw.max_k, "Largest moment order")->required();
    moments->add_option("--intensity", raw.intensity, "Edge intensity p (rational)");
    add_common(moments, raw);

    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "Recurrence vs exhaustive walk enumeration (intensity 1)");
    oracle->add_option("--max-k", raw.max_k, "Largest order to cross-check (<= 6)")->required();
    oracle->add_option("--intensity", raw.intensity, "Must be 1");
    add_common(oracle, raw);

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo spectra with limit-comparison verdicts");
    simulate->add_option("--max-k", raw.max_k, "Compare M_{2k} against m_k up to this k")
        ->required();
    simulate->add_option("--intensity", raw.intensity, "Edge intensity p (rational)");
    simulate->add_option("--n", raw.n, "Vertex count (<= 4096)")->required();
    simulate->add_option("--samples", raw.simulate_samples, "Independent samples (>= 2)");
    simulate->add_option("--seed", raw.seed, "Base seed; sample i uses seed+i");
    simulate->add_option("--bins", raw.bins, "Histogram bin count");
    add_common(simulate, raw);

    CLI::App* bounds = app.add_subcommand("bounds", "Exact bound report (intensity 1)");
    bounds->add_option("--max-k", raw.max_k, "Table order to check (2..64)")->required();
    bounds->add_option("--intensity", raw.intensity, "Must be 1");
    add_common(bounds, raw);

    CLI::App* degrees =
        app.add_subcommand("degrees", "Degree distribution vs the Poisson limit");
    degrees->add_option("--n", raw.n, "Vertex count")->required();
    degrees->add_option("--intensity", raw.intensity, "Edge intensity p (rational)");
    degrees->add_option("--samples", raw.degree_samples, "Seeds to average over");
    degrees->add_option("--seed", raw.seed, "Base seed");
    add_common(degrees, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message; flag errors are validation failures
        return specmom::kExitValidation;
    }

    specmom::RunConfig config;
    config.subcommand = app.get_subcommands().front()->get_name();
    config.max_k = raw.max_k;
    config.n = raw.n;
    config.sample_count =
        config.subcommand == "degrees" ? raw.degree_samples : raw.simulate_samples;
    config.base_seed = raw.seed;
    config.bin_count = raw.bins;
    config.out_path = raw.out;
    config.format = raw.format;
    try {
        config.intensity = specmom::parse_rational(raw.intensity);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return specmom::kExitValidation;
    }

    std::string error;
    const int status = specmom::run_subcommand(config, std::cout, error);
    if (!error.empty()) std::cerr << "error: " << error << "\n";
    return status;
}
