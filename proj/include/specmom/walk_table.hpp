#pragma once

#include <stdexcept>
#include <vector>

#include "specmom/rational.hpp"

namespace specmom {

/// Practical ceiling enforced by the CLI; table size and entry bit-length
/// stay desk-scale below it.
inline constexpr int kMaxTableOrder = 64;

// Triangular table of weighted walk counts w(u, v): closed 2u-step root walks
// on plane rooted trees that return to the root exactly v times, each walk
// weighted by intensity^(edges of its tree). For intensity 1 every entry is a
// plain walk count (a nonnegative integer).
//
// Immutable after construction; safe to share across threads read-only.
class WalkCountTable {
public:
    WalkCountTable(int max_order, BigRat intensity, std::vector<BigRat> entries);

    int max_order() const { return max_order_; }
    const BigRat& intensity() const { return intensity_; }

    /// w(u, v) for 0 <= v <= u <= max_order. Throws std::out_of_range otherwise.
    const BigRat& at(int u, int v) const;

    /// w(u, v) extended by zero for v > u (a 2u-step walk cannot return more
    /// than u times). Still throws for u > max_order or negative arguments.
    const BigRat& get(int u, int v) const;

private:
    int max_order_;
    BigRat intensity_;
    std::vector<BigRat> entries_;  // row-major triangle, index u*(u+1)/2 + v
};

/// Moments of the limiting eigenvalue distribution for one intensity:
/// moments[k] is the limit of the averaged 2k-th trace moment (moments[0] = 1
/// by the empty-walk convention). All odd-order limits vanish identically,
/// which odd_moments_zero records.
struct MomentSequence {
    BigRat intensity;
    std::vector<BigRat> moments;
    bool odd_moments_zero = true;
};

/// Builds the full triangular table bottom-up. Uses the OpenMP kernel when
/// compiled with OpenMP; entries are identical to the serial build either way.
/// Rejects negative max_order or intensity with std::invalid_argument.
WalkCountTable build_walk_table(int max_order, const BigRat& intensity);

/// Serial reference build, kept for tests and the kernel benchmark.
WalkCountTable build_walk_table_serial(int max_order, const BigRat& intensity);

/// Re-evaluates the defining triple sum for one entry directly from the
/// lower-order rows of `table`. Exact; used to cross-check stored entries.
BigRat recurrence_sum(const WalkCountTable& table, int u, int v);

/// m_k = sum over v of w(k, v). Throws std::out_of_range for k outside
/// [0, table.max_order()].
BigRat moment_limit(int k, const WalkCountTable& table);

/// Builds the table once and collects m_0 .. m_max_k.
MomentSequence moment_sequence(int max_k, const BigRat& intensity);

}  // namespace specmom
