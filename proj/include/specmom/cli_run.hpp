#pragma once

#include <iosfwd>
#include <string>

#include "specmom/artifact_io.hpp"

namespace specmom {

// Process exit statuses of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitOracleMismatch = 2;
inline constexpr int kExitToleranceBreach = 3;
inline constexpr int kExitInternal = 4;

/// Finite-size allowance coefficient for limit-comparison verdicts: a Monte
/// Carlo moment estimate at matrix size n is accepted when it lies within
/// 3*stderr + kFiniteSizeCoefficient/n of the limiting moment. Calibrated
/// from the intensity-1 n-sweep over n in {500, 1000, 2000} and pinned as a
/// regression value.
inline constexpr double kFiniteSizeCoefficient = 100.0;

/// Default bound constants checked by the `bounds` subcommand.
inline constexpr int kDefaultC1 = 2;
inline constexpr int kDefaultC2 = 2;

/// Builds the artifact for one validated config. Throws std::invalid_argument
/// on guard violations and propagates EigensolverError.
Artifact build_artifact(const RunConfig& config);

/// Runs one subcommand end to end and writes the artifact to
/// config.out_path (or `fallback_out` when the path is empty). Returns the
/// process exit status; on failure `error_out` carries the reason.
int run_subcommand(const RunConfig& config, std::ostream& fallback_out, std::string& error_out);

}  // namespace specmom
