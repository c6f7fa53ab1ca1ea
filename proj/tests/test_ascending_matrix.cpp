#include <doctest.h>

#include <functional>

#include "sfasd/ascending_matrix.hpp"
#include "sfasd/errors.hpp"
#include "sfasd/reduction.hpp"
#include "support.hpp"

using namespace sfasd;

namespace {

const IntMatrix kA12336 = {
    {0, 0, 0, 0, 1},
    {0, 0, 1, 1, 0},
    {0, 1, 0, 1, 1},
    {1, 0, 1, 0, 1},
    {0, 1, 1, 2, 2},
};

bool columns_ascending(const IntMatrix& a)
{
    for (int j = 0; j + 1 < a.cols(); ++j) {
        auto c = a.column(j);
        auto c2 = a.column(j + 1);
        std::sort(c.begin(), c.end());
        std::sort(c2.begin(), c2.end());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > c2[i]) return false;
    }
    return true;
}

/// Does N(d, m^-) contain an ascending member?  Full enumeration, column by column.
bool ascending_member_exists(const DegreeVector& d, int m)
{
    const int k = static_cast<int>(d.size());
    IntMatrix a(k, m);
    std::vector<int> left = d;
    std::function<bool(int, int, int)> fill = [&](int col, int row, int rest) -> bool {
        if (col == m) {
            return std::all_of(left.begin(), left.end(), [](int v) { return v == 0; }) && columns_ascending(a);
        }
        if (row == k) return rest == 0 && fill(col + 1, 0, col + 2);
        const std::size_t r = static_cast<std::size_t>(row);
        for (int v = 0; v <= std::min(rest, left[r]); ++v) {
            a(row, col) = v;
            left[r] -= v;
            if (fill(col, row + 1, rest - v)) return true;
            left[r] += v;
        }
        a(row, col) = 0;
        return false;
    };
    return fill(0, 0, 1);
}

}  // namespace

TEST_CASE("is_valid examples")
{
    CHECK(is_valid(kA12336, {1, 2, 3, 3, 6}, {1, 2, 3, 4, 5}));
    CHECK(is_valid(IntMatrix(3, 4), {0, 0, 0}, {0, 0, 0, 0}));
    IntMatrix swapped = kA12336;
    for (int r = 0; r < 5; ++r) std::swap(swapped(r, 3), swapped(r, 4));
    CHECK_FALSE(is_valid(swapped, {1, 2, 3, 3, 6}, {1, 2, 3, 5, 4}));
    CHECK_FALSE(is_valid(swapped, {1, 2, 3, 3, 6}, {1, 2, 3, 4, 5}));
    IntMatrix negative = {{-1, 2}};
    CHECK_FALSE(is_valid(negative, {1}, {-1, 2}));
    CHECK_FALSE(is_valid(kA12336, {1, 2, 3, 3}, {1, 2, 3, 4, 5}));
}

TEST_CASE("AscendingMatrix::make validates")
{
    CHECK_NOTHROW(AscendingMatrix::make(kA12336, {1, 2, 3, 3, 6}, {1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(AscendingMatrix::make(kA12336, {1, 2, 3, 3, 5}, {1, 2, 3, 4, 5}), Error);
}

TEST_CASE("build_T")
{
    const IntMatrix t47 = {
        {0, 0, 0, 1, 1, 1, 1},
        {0, 0, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 1},
    };
    CHECK(build_T(4, 7) == t47);
    CHECK(build_T(1, 5) == IntMatrix{{1, 1, 1, 1, 1}});
    CHECK(build_T(2, 2) == IntMatrix{{0, 1}, {1, 1}});
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const IntMatrix t = build_T(k, n);
            for (int i = 0; i < k; ++i) CHECK(t.row_sums()[static_cast<std::size_t>(i)] == n - k + i + 1);
            for (int j = 0; j < n; ++j) CHECK(t.col_sums()[static_cast<std::size_t>(j)] == std::min(j + 1, k));
        }
    }
}

TEST_CASE("construct_ascending examples")
{
    CHECK(construct_ascending({6}, 3).entries() == IntMatrix{{1, 2, 3}});
    const AscendingMatrix a = construct_ascending({1, 2, 3}, 3);
    CHECK(is_valid(a.entries(), {1, 2, 3}, {1, 2, 3}));
    const AscendingMatrix b = construct_ascending({2, 4}, 3);
    CHECK(is_valid(b.entries(), {2, 4}, {1, 2, 3}));
    CHECK(is_valid(IntMatrix{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}, {1, 2, 3}, {1, 2, 3}));
    CHECK(is_valid(IntMatrix{{0, 1, 1}, {1, 1, 2}}, {2, 4}, {1, 2, 3}));
    CHECK_THROWS_AS(construct_ascending({1, 2}, 3), SumMismatch);
    CHECK(construct_ascending({}, 0).rows() == 0);
}

TEST_CASE("construct_ascending is deterministic")
{
    CHECK(construct_ascending({3, 4, 8}, 5).entries() == construct_ascending({3, 4, 8}, 5).entries());
}

TEST_CASE("construct_ascending agrees with exhaustive enumeration up to 5x5")
{
    int found = 0;
    for (int m = 1; m <= 5; ++m) {
        for (const auto& d : testsupport::partitions(m * (m + 1) / 2)) {
            if (d.size() > 5) continue;
            const bool exists = ascending_member_exists(d, m);
            if (exists) {
                const AscendingMatrix a = construct_ascending(d, m);
                REQUIRE(is_valid(a.entries(), d, ascending_sequence(m)));
                REQUIRE(a.row_sums() == d);
                ++found;
            } else {
                CHECK_THROWS_AS(construct_ascending(d, m), SearchExhausted);
            }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("construct_with_support examples")
{
    const AscendingMatrix a = construct_with_support({4, 6, 9, 9}, 7);
    CHECK(is_valid(a.entries(), {4, 6, 9, 9}, ascending_sequence(7)));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 7; ++j)
            if (i + j >= 5) CHECK(a(i - 1, j - 1) >= 1);
    // d' = (0,1,3,2) sits in the last three columns on top of T
    IntMatrix tail(4, 7);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 7; ++j) tail(i, j) = a(i, j) - build_T(4, 7)(i, j);
    CHECK(tail.row_sums() == std::vector<int>{0, 1, 3, 2});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(tail(i, j) == 0);

    CHECK(construct_with_support({10}, 4).entries() == IntMatrix{{1, 2, 3, 4}});
    CHECK(construct_with_support({2, 4}, 3).entries() == IntMatrix{{0, 1, 1}, {1, 1, 2}});
    CHECK_THROWS_AS(construct_with_support({1, 2, 3, 3, 6}, 5), ConditionFailed);
}

TEST_CASE("construct_with_support on every sufficient sequence with n <= 7")
{
    int count = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const auto& d : testsupport::partitions(n * (n + 1) / 2)) {
            if (!check_sufficient(d, n)) continue;
            const AscendingMatrix a = construct_with_support(d, n);
            REQUIRE(is_valid(a.entries(), d, ascending_sequence(n)));
            const int k = static_cast<int>(d.size());
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i + j >= k + 1) REQUIRE(a(i - 1, j - 1) >= 1);
            ++count;
        }
    }
    CHECK(count == 1 + 2 + 4 + 8 + 16 + 35 + 81);
}

TEST_CASE("composition with disjoint support stays in N(a + a', b + b')")
{
    const IntMatrix t = build_T(3, 5);
    const IntMatrix tail = {{0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}};
    const IntMatrix sum = t + tail;
    std::vector<int> rows = t.row_sums();
    std::vector<int> cols = t.col_sums();
    for (int i = 0; i < 3; ++i) rows[static_cast<std::size_t>(i)] += tail.row_sums()[static_cast<std::size_t>(i)];
    for (int j = 0; j < 5; ++j) cols[static_cast<std::size_t>(j)] += tail.col_sums()[static_cast<std::size_t>(j)];
    CHECK(sum.row_sums() == rows);
    CHECK(sum.col_sums() == cols);
}

TEST_CASE("sequence helpers")
{
    CHECK(ascending_sequence(4) == std::vector<int>{1, 2, 3, 4});
    CHECK(constant_sequence(3, 2) == std::vector<int>{2, 2, 2});
    CHECK(ascending_sequence(0).empty());
}
