#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specmom/bounds.hpp"

using namespace specmom;

namespace {

const BoundRecord* find_record(const BoundReport& report, BoundKind kind, int k, int r) {
    for (const auto& rec : report.records)
        if (rec.kind == kind && rec.k == k && rec.r == r) return &rec;
    return nullptr;
}

}  // namespace

TEST_CASE("spec'd bound instances") {
    const BoundReport report = check_bounds(4, BigInt(2), BigInt(2));

    // w(2, 2) = 2 against 1! = 1.
    const auto* star = find_record(report, BoundKind::star_lower, 2, 2);
    REQUIRE(star != nullptr);
    CHECK(star->lhs == 2);
    CHECK(star->rhs == 1);
    CHECK(star->holds);

    // w(1, 1) = 1 against (2*1)^2 = 4.
    const auto* walk = find_record(report, BoundKind::walk_upper, 1, 1);
    REQUIRE(walk != nullptr);
    CHECK(walk->lhs == 1);
    CHECK(walk->rhs == 4);
    CHECK(walk->holds);

    // r = 0 instances compare w(k, 0) <= 1 and hold trivially.
    for (int k = 1; k <= 4; ++k) {
        const auto* zero = find_record(report, BoundKind::walk_upper, k, 0);
        REQUIRE(zero != nullptr);
        CHECK(zero->rhs == 1);
        CHECK(zero->holds);
    }
}

TEST_CASE("star lower bound holds through order 24") {
    const WalkCountTable table = build_walk_table(24, BigRat(1));
    const BoundReport report = check_bounds(table, BigInt(2), BigInt(2));
    CHECK(report.all_hold(BoundKind::star_lower));
    for (const auto& rec : report.records)
        if (rec.kind == BoundKind::star_lower) {
            CAPTURE(rec.k);
            CHECK(rec.lhs >= rec.rhs);
        }
}

TEST_CASE("moment upper bound: smallest workable constant is 2") {
    const WalkCountTable table = build_walk_table(24, BigRat(1));
    const auto c2 = smallest_moment_constant(table, 8);
    REQUIRE(c2.has_value());
    CHECK(*c2 == 2);
    CHECK(check_bounds(table, BigInt(2), BigInt(2)).all_hold(BoundKind::moment_upper));
    CHECK_FALSE(check_bounds(table, BigInt(2), BigInt(1)).all_hold(BoundKind::moment_upper));
}

TEST_CASE("walk upper bound fails at high order for every small constant") {
    // w(k, 1) equals m_{k-1}, which grows superexponentially, so the
    // polynomial right-hand side (c*k)^2 loses eventually: no c <= 8
    // survives the full range even though small orders pass.
    const WalkCountTable table = build_walk_table(24, BigRat(1));
    CHECK_FALSE(smallest_walk_constant(table, 8).has_value());

    const WalkCountTable low = build_walk_table(7, BigRat(1));
    const auto c1 = smallest_walk_constant(low, 8);
    REQUIRE(c1.has_value());
    CHECK(*c1 == 6);  // w(7, 1) = 1747 <= (6*7)^2 = 1764, and 5 fails
}

TEST_CASE("report shape and validation") {
    const BoundReport report = check_bounds(6, BigInt(2), BigInt(2));
    CHECK(report.max_order == 6);
    int walk_records = 0, star_records = 0, moment_records = 0;
    for (const auto& rec : report.records) {
        if (rec.kind == BoundKind::walk_upper) ++walk_records;
        if (rec.kind == BoundKind::star_lower) ++star_records;
        if (rec.kind == BoundKind::moment_upper) ++moment_records;
    }
    CHECK(walk_records == 2 + 3 + 4 + 5 + 6 + 7);  // (k+1) instances per k
    CHECK(star_records == 3);                       // k = 2, 4, 6
    CHECK(moment_records == 3);                     // 2k = 2, 4, 6

    CHECK_THROWS_AS(check_bounds(1, BigInt(2), BigInt(2)), std::invalid_argument);
    CHECK_THROWS_AS(check_bounds(4, BigInt(0), BigInt(2)), std::invalid_argument);
    const WalkCountTable off = build_walk_table(4, BigRat(2));
    CHECK_THROWS_AS(check_bounds(off, BigInt(2), BigInt(2)), std::invalid_argument);
}
