#include "specmom/spectrum.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>

namespace specmom {

const char* matrix_kind_name(MatrixKind kind) {
    return kind == MatrixKind::adjacency ? "adjacency" : "laplacian";
}

SpectrumResult spectrum(const GraphSample& sample, MatrixKind kind) {
    const std::uint32_t n = sample.n;
    if (n < 1) throw std::invalid_argument("empty sample");
    if (n > kMaxDenseOrder) throw std::invalid_argument("vertex count exceeds the dense-solver guard");

    Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [i, j] : sample.edges) {
        matrix(i, j) -= 1.0;
        matrix(j, i) -= 1.0;
        if (kind == MatrixKind::laplacian) {
            matrix(i, i) += 1.0;
            matrix(j, j) += 1.0;
        }
    }
    if (kind == MatrixKind::adjacency) matrix = -matrix;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("symmetric eigensolver did not converge");

    SpectrumResult result;
    result.kind = kind;
    result.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

    // Exact trace identities: sum lambda = Tr M and sum lambda^2 = Tr M^2,
    // both known in closed form from the edge set.
    const double edge_count = static_cast<double>(sample.edges.size());
    double sum = 0.0, sum_sq = 0.0;
    for (double ev : result.eigenvalues) {
        sum += ev;
        sum_sq += ev * ev;
    }
    double trace = 0.0, trace_sq = 2.0 * edge_count;
    if (kind == MatrixKind::laplacian) {
        trace = 2.0 * edge_count;
        std::vector<double> degree(n, 0.0);
        for (const auto& [i, j] : sample.edges) {
            degree[i] += 1.0;
            degree[j] += 1.0;
        }
        for (double d : degree) trace_sq += d * d;
    }
    const double scale = std::max(1.0, trace_sq);
    if (std::abs(sum - trace) > 1e-8 * static_cast<double>(n) ||
        std::abs(sum_sq - trace_sq) > 1e-8 * scale)
        throw EigensolverError("eigenvalues violate the trace identities");

    return result;
}

}  // namespace specmom
