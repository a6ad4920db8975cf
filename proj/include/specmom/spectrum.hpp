#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specmom/graph_sample.hpp"

namespace specmom {

/// Dense-eigensolve guard: the full symmetric decomposition is O(n^3).
inline constexpr std::uint32_t kMaxDenseOrder = 4096;

enum class MatrixKind { adjacency, laplacian };

const char* matrix_kind_name(MatrixKind kind);

struct SpectrumResult {
    MatrixKind kind = MatrixKind::adjacency;
    std::vector<double> eigenvalues;  // ascending
};

/// Raised when the symmetric eigensolver fails to converge or its result
/// violates the exact trace identities of the input matrix.
class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All eigenvalues of the sample's adjacency matrix, or of its Laplacian
/// (degree matrix minus adjacency), in ascending order. The result is checked
/// against the exact first and second trace moments before being returned.
SpectrumResult spectrum(const GraphSample& sample, MatrixKind kind);

}  // namespace specmom
