#include "specmom/estimate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace specmom {

namespace {

void validate_spectral_args(std::uint32_t n, double intensity) {
    // Same domain the sampler and eigensolver enforce, checked up front so
    // nothing throws inside an OpenMP region.
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (n > kMaxDenseOrder) throw std::invalid_argument("vertex count exceeds the dense-solver guard");
    if (!(intensity > 0.0) || intensity > static_cast<double>(n))
        throw std::invalid_argument("intensity must lie in (0, n]");
}

void validate_estimate_args(int max_s, int sample_count) {
    if (max_s < 0) throw std::invalid_argument("max_s must be nonnegative");
    if (sample_count < 2) throw std::invalid_argument("need at least two samples");
}

// Per-sample averaged trace moments (1/n) sum_i lambda_i^s for s = 1..max_s.
std::vector<double> sample_moments(const GraphSample& sample, int max_s,
                                   std::vector<double>* eigenvalue_sink) {
    const SpectrumResult spec = spectrum(sample, MatrixKind::adjacency);
    std::vector<double> moments(max_s + 1, 0.0);
    for (double ev : spec.eigenvalues) {
        double power = 1.0;
        for (int s = 1; s <= max_s; ++s) {
            power *= ev;
            moments[s] += power;
        }
    }
    for (int s = 1; s <= max_s; ++s) moments[s] /= static_cast<double>(sample.n);
    moments[0] = 1.0;
    if (eigenvalue_sink)
        eigenvalue_sink->insert(eigenvalue_sink->end(), spec.eigenvalues.begin(),
                                spec.eigenvalues.end());
    return moments;
}

// Deterministic ordered reduction of the per-sample moment rows.
SpectralEstimate reduce(std::uint32_t n, double intensity, int max_s, std::uint64_t base_seed,
                        const std::vector<std::vector<double>>& per_sample,
                        std::vector<std::vector<double>>&& per_sample_eigenvalues) {
    const int count = static_cast<int>(per_sample.size());
    SpectralEstimate est;
    est.n = n;
    est.intensity = intensity;
    est.sample_count = count;
    est.base_seed = base_seed;

    for (int s = 0; s <= max_s; ++s) {
        double mean = 0.0;
        for (const auto& row : per_sample) mean += row[s];
        mean /= count;
        double varsum = 0.0;
        for (const auto& row : per_sample) varsum += (row[s] - mean) * (row[s] - mean);
        MomentRecord rec;
        rec.order = s;
        rec.mean = s == 0 ? 1.0 : mean;
        rec.stderr_ = s == 0 ? 0.0 : std::sqrt(varsum / (count - 1)) / std::sqrt(double(count));
        est.records.push_back(rec);
    }

    std::size_t total = 0;
    for (const auto& part : per_sample_eigenvalues) total += part.size();
    est.pooled_eigenvalues.reserve(total);
    for (const auto& part : per_sample_eigenvalues)
        est.pooled_eigenvalues.insert(est.pooled_eigenvalues.end(), part.begin(), part.end());
    std::sort(est.pooled_eigenvalues.begin(), est.pooled_eigenvalues.end());
    return est;
}

}  // namespace

SpectralEstimate estimate_moments(std::uint32_t n, double intensity, int max_s,
                                  int sample_count, std::uint64_t base_seed) {
    validate_estimate_args(max_s, sample_count);
    validate_spectral_args(n, intensity);
    std::vector<std::vector<double>> per_sample(sample_count);
    std::vector<std::vector<double>> eigenvalues(sample_count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int index = 0; index < sample_count; ++index) {
        try {
            const GraphSample sample = sample_graph(n, intensity, base_seed + index);
            per_sample[index] = sample_moments(sample, max_s, &eigenvalues[index]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reduce(n, intensity, max_s, base_seed, per_sample, std::move(eigenvalues));
}

SpectralEstimate estimate_moments_serial(std::uint32_t n, double intensity, int max_s,
                                         int sample_count, std::uint64_t base_seed) {
    validate_estimate_args(max_s, sample_count);
    validate_spectral_args(n, intensity);
    std::vector<std::vector<double>> per_sample(sample_count);
    std::vector<std::vector<double>> eigenvalues(sample_count);
    for (int index = 0; index < sample_count; ++index) {
        const GraphSample sample = sample_graph_serial(n, intensity, base_seed + index);
        per_sample[index] = sample_moments(sample, max_s, &eigenvalues[index]);
    }
    return reduce(n, intensity, max_s, base_seed, per_sample, std::move(eigenvalues));
}

std::vector<double> pooled_spectrum(std::uint32_t n, double intensity, MatrixKind kind,
                                    int sample_count, std::uint64_t base_seed) {
    if (sample_count < 1) throw std::invalid_argument("need at least one sample");
    validate_spectral_args(n, intensity);
    std::vector<std::vector<double>> parts(sample_count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int index = 0; index < sample_count; ++index) {
        try {
            const GraphSample sample = sample_graph(n, intensity, base_seed + index);
            parts[index] = spectrum(sample, kind).eigenvalues;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<double> pool;
    pool.reserve(static_cast<std::size_t>(n) * sample_count);
    for (const auto& part : parts) pool.insert(pool.end(), part.begin(), part.end());
    std::sort(pool.begin(), pool.end());
    return pool;
}

BigRat exact_finite_moment(std::uint32_t n, const BigRat& intensity, int s) {
    if (n < 1 || n > kMaxExactOrder)
        throw std::invalid_argument("vertex count exceeds the exact-moment guard");
    if (s < 1 || s > static_cast<int>(kMaxExactOrder))
        throw std::invalid_argument("moment order exceeds the exact-moment guard");
    if (intensity < 0 || intensity > static_cast<long>(n))
        throw std::invalid_argument("intensity must lie in [0, n]");

    const BigRat edge_probability = intensity / n;
    std::vector<BigRat> probability_power(s + 1);
    probability_power[0] = 1;
    for (int e = 1; e <= s; ++e) probability_power[e] = probability_power[e - 1] * edge_probability;

    std::vector<std::uint32_t> index(s, 0);  // odometer over all n^s sequences
    BigRat total(0);
    while (true) {
        // Distinct edges of the closed sequence; zero diagonal kills any
        // sequence with two consecutive equal indices.
        std::array<std::uint32_t, kMaxExactOrder> edge_keys{};
        int edge_count = 0;
        bool alive = true;
        for (int t = 0; t < s && alive; ++t) {
            const std::uint32_t a = index[t], b = index[(t + 1) % s];
            if (a == b) {
                alive = false;
                break;
            }
            const std::uint32_t key = std::min(a, b) * n + std::max(a, b);
            bool seen = false;
            for (int e = 0; e < edge_count; ++e)
                if (edge_keys[e] == key) {
                    seen = true;
                    break;
                }
            if (!seen) edge_keys[edge_count++] = key;
        }
        if (alive) total += probability_power[edge_count];

        int pos = s - 1;
        while (pos >= 0 && index[pos] == n - 1) index[pos--] = 0;
        if (pos < 0) break;
        ++index[pos];
    }
    return total / n;
}

EcdfHistogram ecdf_and_histogram(const std::vector<double>& pool, int bin_count) {
    if (pool.empty()) throw std::invalid_argument("empty eigenvalue pool");
    if (bin_count < 1) throw std::invalid_argument("bin_count must be positive");

    std::vector<double> sorted = pool;
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());

    EcdfHistogram out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        out.ecdf.push_back({sorted[i], static_cast<double>(i + 1) / total});
    }

    const double lo = sorted.front(), hi = sorted.back();
    const double width = (hi - lo) / bin_count;
    out.histogram.resize(bin_count);
    std::vector<std::uint64_t> counts(bin_count, 0);
    for (double value : sorted) {
        int bin = width > 0.0 ? static_cast<int>((value - lo) / width) : 0;
        bin = std::clamp(bin, 0, bin_count - 1);  // hi lands in the last bin
        ++counts[bin];
    }
    for (int b = 0; b < bin_count; ++b) {
        out.histogram[b].bin_center = lo + (b + 0.5) * width;
        out.histogram[b].mass = static_cast<double>(counts[b]) / total;
    }
    return out;
}

}  // namespace specmom
