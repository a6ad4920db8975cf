#include "specmom/bounds.hpp"

#include <stdexcept>

namespace specmom {

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::walk_upper: return "walk_upper";
        case BoundKind::star_lower: return "star_lower";
        case BoundKind::moment_upper: return "moment_upper";
    }
    return "?";
}

bool BoundReport::all_hold(BoundKind kind) const {
    for (const auto& rec : records)
        if (rec.kind == kind && !rec.holds) return false;
    return true;
}

bool BoundReport::all_hold() const {
    for (const auto& rec : records)
        if (!rec.holds) return false;
    return true;
}

namespace {

void require_unit_intensity(const WalkCountTable& table) {
    if (table.intensity() != 1)
        throw std::invalid_argument("bound checks are stated for intensity 1");
}

BigInt walk_bound_rhs(const BigInt& c, int k, int r) {
    return int_pow(c * k, 2ul * static_cast<unsigned long>(r));
}

}  // namespace

BoundReport check_bounds(int max_order, const BigInt& c1, const BigInt& c2) {
    if (max_order < 2) throw std::invalid_argument("check_bounds needs max_order >= 2");
    return check_bounds(build_walk_table(max_order, BigRat(1)), c1, c2);
}

BoundReport check_bounds(const WalkCountTable& table, const BigInt& c1, const BigInt& c2) {
    require_unit_intensity(table);
    if (c1 <= 0 || c2 <= 0) throw std::invalid_argument("bound constants must be positive");
    const int max_order = table.max_order();
    if (max_order < 2) throw std::invalid_argument("check_bounds needs max_order >= 2");

    BoundReport report;
    report.max_order = max_order;
    report.c1 = c1;
    report.c2 = c2;

    for (int k = 1; k <= max_order; ++k)
        for (int r = 0; r <= k; ++r) {
            BoundRecord rec;
            rec.kind = BoundKind::walk_upper;
            rec.k = k;
            rec.r = r;
            rec.lhs = table.at(k, r);
            rec.rhs = BigRat(walk_bound_rhs(c1, k, r));
            rec.holds = rec.lhs <= rec.rhs;
            report.records.push_back(std::move(rec));
        }

    for (int k = 2; k <= max_order; k += 2) {
        BoundRecord rec;
        rec.kind = BoundKind::star_lower;
        rec.k = k;
        rec.r = k;
        rec.lhs = table.at(k, k);
        rec.rhs = BigRat(factorial(static_cast<unsigned long>(k / 2)));
        rec.holds = rec.lhs >= rec.rhs;
        report.records.push_back(std::move(rec));
    }

    for (int k = 1; 2 * k <= max_order; ++k) {
        BoundRecord rec;
        rec.kind = BoundKind::moment_upper;
        rec.k = k;
        rec.lhs = moment_limit(2 * k, table);
        rec.rhs = BigRat(int_pow(c2 * k, 2ul * static_cast<unsigned long>(k)));
        rec.holds = rec.lhs <= rec.rhs;
        report.records.push_back(std::move(rec));
    }

    return report;
}

std::optional<int> smallest_walk_constant(const WalkCountTable& table, int c_max) {
    require_unit_intensity(table);
    for (int c = 1; c <= c_max; ++c) {
        bool ok = true;
        for (int k = 1; ok && k <= table.max_order(); ++k)
            for (int r = 0; r <= k; ++r)
                if (table.at(k, r) > walk_bound_rhs(BigInt(c), k, r)) {
                    ok = false;
                    break;
                }
        if (ok) return c;
    }
    return std::nullopt;
}

std::optional<int> smallest_moment_constant(const WalkCountTable& table, int c_max) {
    require_unit_intensity(table);
    for (int c = 1; c <= c_max; ++c) {
        bool ok = true;
        for (int k = 1; 2 * k <= table.max_order(); ++k)
            if (moment_limit(2 * k, table) > int_pow(BigInt(c) * k, 2ul * static_cast<unsigned long>(k))) {
                ok = false;
                break;
            }
        if (ok) return c;
    }
    return std::nullopt;
}

}  // namespace specmom
