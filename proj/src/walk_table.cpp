#include "specmom/walk_table.hpp"

#include <cstddef>
#include <utility>

namespace specmom {

namespace {

inline std::size_t tri_index(int u, int v) {
    return static_cast<std::size_t>(u) * (u + 1) / 2 + v;
}

// Pascal triangle up to row n_max, so the build does not call into GMP's
// binomial for every term.
std::vector<std::vector<BigInt>> pascal_rows(int n_max) {
    std::vector<std::vector<BigInt>> rows(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        rows[n][0] = 1;
        rows[n][n] = 1;
        for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

// One entry of the recurrence:
//
//   w(u, v) = p * sum_{i=1..v} sum_{j=v-i..u-i} sum_{l=0..u-i-j}
//             w(u-i-j, l) * C(l+i-1, i-1) * C(v-1, i-1) * w(j, v-i)
//
// The first edge of the walk is traversed 2i times; the subwalk hanging off
// its far end contributes w(u-i-j, l), the remainder at the root w(j, v-i),
// and the binomials interleave the i-1 intermediate passes with the l
// (resp. v-i) returns. The leading factor p accounts for the one edge this
// expansion creates, which is what generalizes the count to arbitrary fixed
// intensity. Rows u-i-j and j are both strictly below u, so entries within
// one row never depend on each other.
BigRat entry_sum(const std::vector<BigRat>& entries, int u, int v, const BigRat& intensity,
                 const std::vector<std::vector<BigInt>>& pascal) {
    BigRat total(0);
    for (int i = 1; i <= v; ++i) {
        const int second_returns = v - i;
        BigRat outer(0);
        for (int j = second_returns; j <= u - i; ++j) {
            const BigRat& w_second = entries[tri_index(j, second_returns)];
            if (w_second == 0) continue;
            const int rest = u - i - j;
            BigRat inner(0);
            for (int l = 0; l <= rest; ++l) {
                const BigRat& w_first = entries[tri_index(rest, l)];
                if (w_first == 0) continue;
                inner += w_first * pascal[l + i - 1][i - 1];
            }
            if (inner != 0) outer += inner * w_second;
        }
        if (outer != 0) total += outer * pascal[v - 1][i - 1];
    }
    return intensity * total;
}

std::vector<BigRat> make_base_rows(int max_order) {
    std::vector<BigRat> entries(tri_index(max_order, max_order) + 1, BigRat(0));
    entries[tri_index(0, 0)] = 1;  // w(j, 0) = [j == 0]
    return entries;
}

void validate_build_args(int max_order, const BigRat& intensity) {
    if (max_order < 0) throw std::invalid_argument("max_order must be nonnegative");
    if (intensity < 0) throw std::invalid_argument("intensity must be nonnegative");
}

}  // namespace

WalkCountTable::WalkCountTable(int max_order, BigRat intensity, std::vector<BigRat> entries)
    : max_order_(max_order), intensity_(std::move(intensity)), entries_(std::move(entries)) {
    if (entries_.size() != tri_index(max_order_, max_order_) + 1)
        throw std::invalid_argument("entry count does not match max_order");
}

const BigRat& WalkCountTable::at(int u, int v) const {
    if (u < 0 || v < 0 || v > u || u > max_order_)
        throw std::out_of_range("walk table index out of range");
    return entries_[tri_index(u, v)];
}

const BigRat& WalkCountTable::get(int u, int v) const {
    static const BigRat zero(0);
    if (u < 0 || v < 0 || u > max_order_) throw std::out_of_range("walk table index out of range");
    return v > u ? zero : entries_[tri_index(u, v)];
}

WalkCountTable build_walk_table(int max_order, const BigRat& intensity) {
    validate_build_args(max_order, intensity);
    auto entries = make_base_rows(max_order);
    const auto pascal = pascal_rows(max_order > 0 ? max_order : 1);
    for (int u = 1; u <= max_order; ++u) {
        // Entries of row u only read rows < u: the v loop is data-parallel.
#pragma omp parallel for schedule(dynamic)
        for (int v = 1; v <= u; ++v)
            entries[tri_index(u, v)] = entry_sum(entries, u, v, intensity, pascal);
    }
    return WalkCountTable(max_order, intensity, std::move(entries));
}

WalkCountTable build_walk_table_serial(int max_order, const BigRat& intensity) {
    validate_build_args(max_order, intensity);
    auto entries = make_base_rows(max_order);
    const auto pascal = pascal_rows(max_order > 0 ? max_order : 1);
    for (int u = 1; u <= max_order; ++u)
        for (int v = 1; v <= u; ++v)
            entries[tri_index(u, v)] = entry_sum(entries, u, v, intensity, pascal);
    return WalkCountTable(max_order, intensity, std::move(entries));
}

BigRat recurrence_sum(const WalkCountTable& table, int u, int v) {
    if (u < 1 || v < 1 || v > u || u > table.max_order())
        throw std::out_of_range("recurrence_sum expects 1 <= v <= u <= max_order");
    // Literal triple sum, independent of the hoisted form used by the build.
    BigRat total(0);
    for (int i = 1; i <= v; ++i)
        for (int j = v - i; j <= u - i; ++j) {
            if (j < 0) continue;
            for (int l = 0; l <= u - i - j; ++l)
                total += table.get(u - i - j, l) * binomial(l + i - 1, i - 1) *
                         binomial(v - 1, i - 1) * table.get(j, v - i);
        }
    return table.intensity() * total;
}

BigRat moment_limit(int k, const WalkCountTable& table) {
    if (k < 0 || k > table.max_order())
        throw std::out_of_range("moment order exceeds table max_order");
    BigRat sum(0);
    for (int v = 0; v <= k; ++v) sum += table.at(k, v);
    return sum;
}

MomentSequence moment_sequence(int max_k, const BigRat& intensity) {
    const WalkCountTable table = build_walk_table(max_k, intensity);
    MomentSequence seq;
    seq.intensity = intensity;
    seq.moments.reserve(max_k + 1);
    for (int k = 0; k <= max_k; ++k) seq.moments.push_back(moment_limit(k, table));
    return seq;
}

}  // namespace specmom
