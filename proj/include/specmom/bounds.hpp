#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specmom/walk_table.hpp"

namespace specmom {

enum class BoundKind {
    walk_upper,    // w(k, r) <= (c1*k)^(2r)
    star_lower,    // w(k, k) >= (k/2)! for even k
    moment_upper,  // m_{2k} <= (c2*k)^(2k)
};

const char* bound_kind_name(BoundKind kind);

/// One checked bound instance: the pair (k, r), both compared values, and
/// whether the inequality holds. r is meaningful for walk_upper only.
struct BoundRecord {
    BoundKind kind;
    int k = 0;
    int r = 0;
    BigRat lhs;
    BigRat rhs;
    bool holds = false;
};

struct BoundReport {
    int max_order = 0;
    BigInt c1;
    BigInt c2;
    std::vector<BoundRecord> records;

    bool all_hold(BoundKind kind) const;
    bool all_hold() const;
};

/// Checks the three bound families on a fresh intensity-1 table of the given
/// order, with exact integer arithmetic throughout. Requires max_order >= 2
/// (the bounds are stated for intensity 1; the smallest even order is 2).
BoundReport check_bounds(int max_order, const BigInt& c1, const BigInt& c2);

/// Same checks against an existing intensity-1 table.
BoundReport check_bounds(const WalkCountTable& table, const BigInt& c1, const BigInt& c2);

/// Smallest integer c in [1, c_max] for which the walk upper bound
/// w(k, r) <= (c*k)^(2r) holds over the whole table; nullopt if none does.
std::optional<int> smallest_walk_constant(const WalkCountTable& table, int c_max);

/// Smallest integer c in [1, c_max] for which m_{2k} <= (c*k)^(2k) holds for
/// all 2k <= max_order; nullopt if none does.
std::optional<int> smallest_moment_constant(const WalkCountTable& table, int c_max);

}  // namespace specmom
