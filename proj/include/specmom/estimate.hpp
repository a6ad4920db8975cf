#pragma once

#include <cstdint>
#include <vector>

#include "specmom/rational.hpp"
#include "specmom/spectrum.hpp"

namespace specmom {

/// Brute-force guard for exact_finite_moment (n^s index sequences).
inline constexpr std::uint32_t kMaxExactOrder = 6;

struct MomentRecord {
    int order = 0;       // power s
    double mean = 0.0;   // across samples of (1/n) sum lambda^s
    double stderr_ = 0.0;  // sample standard deviation / sqrt(sample count)
};

/// Monte Carlo spectral estimate over sample_count independent graphs with
/// seeds base_seed, base_seed+1, ...: per-order trace-moment statistics from
/// the adjacency spectrum plus the pooled (sorted) eigenvalues that back the
/// eigenvalue counting function.
struct SpectralEstimate {
    std::uint32_t n = 0;
    double intensity = 0.0;
    int sample_count = 0;
    std::uint64_t base_seed = 0;
    std::vector<MomentRecord> records;      // orders 0..max_s (order 0 exactly 1)
    std::vector<double> pooled_eigenvalues;  // ascending
};

/// Requires sample_count >= 2 and the spectrum() guards. Parallel over
/// samples; results are reduced in sample order, so the output is
/// bit-identical to the serial reference.
SpectralEstimate estimate_moments(std::uint32_t n, double intensity, int max_s,
                                  int sample_count, std::uint64_t base_seed);

/// Serial reference for estimate_moments.
SpectralEstimate estimate_moments_serial(std::uint32_t n, double intensity, int max_s,
                                         int sample_count, std::uint64_t base_seed);

/// Eigenvalues of the chosen matrix pooled over sample_count seeded samples,
/// sorted ascending.
std::vector<double> pooled_spectrum(std::uint32_t n, double intensity, MatrixKind kind,
                                    int sample_count, std::uint64_t base_seed);

/// Exact expectation of the averaged s-th trace moment at finite n, by
/// summation over all n^s closed index sequences: a sequence with any two
/// consecutive indices equal contributes nothing (zero diagonal), any other
/// weighs (intensity/n)^(distinct edges used). Exact rational arithmetic.
/// Guards: 1 <= n <= 6, 1 <= s <= 6, 0 <= intensity <= n.
BigRat exact_finite_moment(std::uint32_t n, const BigRat& intensity, int s);

struct EcdfPoint {
    double lambda = 0.0;
    double sigma = 0.0;  // fraction of eigenvalues <= lambda
};

struct HistogramBin {
    double bin_center = 0.0;
    double mass = 0.0;
};

struct EcdfHistogram {
    std::vector<EcdfPoint> ecdf;         // one point per distinct value
    std::vector<HistogramBin> histogram;  // masses sum to 1
};

/// Empirical counting function and equal-width histogram of a nonempty
/// eigenvalue pool (need not be pre-sorted).
EcdfHistogram ecdf_and_histogram(const std::vector<double>& pool, int bin_count);

}  // namespace specmom
