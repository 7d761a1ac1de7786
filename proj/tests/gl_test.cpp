#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charvar/gl.hpp"

using namespace charvar;

namespace {

GlConfiguration worked_example() {
    return GlConfiguration::make(
        10, {5, 3, 2},
        {Partition({5, 5}), Partition({3, 3, 3, 1}),
         Partition({2, 2, 2, 2, 1, 1})});
}

} // namespace

TEST_CASE("column dimension counts empty boxes", "[gl]") {
    CHECK(gl_column_dimension(10, 3, Partition({3, 3, 3, 1})) == 2);
    CHECK(gl_column_dimension(10, 5, Partition({5, 5})) == 0);
    CHECK(gl_column_dimension(10, 2, Partition({2, 2, 2, 2, 1, 1})) == 2);
    CHECK_THROWS_AS(gl_column_dimension(10, 2, Partition({3, 3, 2, 2})),
                    PartExceedsWidth);
    CHECK_THROWS_AS(gl_column_dimension(9, 5, Partition({5, 5})),
                    WeightMismatch);
}

TEST_CASE("box dimension of the worked configurations", "[gl]") {
    CHECK(gl_dimension(worked_example()) == 4);
    CHECK(charvar_dimension(worked_example()) == 6);

    const auto r12 = GlConfiguration::make(
        12, {6, 4, 2},
        {Partition({6, 6}), Partition({4, 4, 4}),
         Partition({2, 2, 2, 2, 2, 1, 1})});
    CHECK(gl_dimension(r12) == 2);
    CHECK(charvar_dimension(r12) == 4);

    const auto unit = GlConfiguration::make(
        3, {1, 1, 1},
        {Partition({1, 1, 1}), Partition({1, 1, 1}), Partition({1, 1, 1})});
    CHECK(gl_dimension(unit) == 0);
    CHECK(charvar_dimension(unit) == 2);
}

TEST_CASE("width normalization records the permutation", "[gl]") {
    const auto cfg = GlConfiguration::make(
        10, {2, 5, 3},
        {Partition({2, 2, 2, 2, 1, 1}), Partition({5, 5}),
         Partition({3, 3, 3, 1})});
    CHECK(cfg.widths == std::array<int, 3>{5, 3, 2});
    CHECK(cfg.point_order == std::array<int, 3>{1, 2, 0});
    CHECK(gl_dimension(cfg) == 4);
    CHECK_THROWS_AS(GlConfiguration::make(10, {5, 3, 3},
                                          {Partition({5, 5}),
                                           Partition({3, 3, 3, 1}),
                                           Partition({3, 3, 2, 2})}),
                    Error);
}

TEST_CASE("defect evaluation", "[gl]") {
    CHECK(defect(10, 3, {5, 3, 2}) == 0);
    CHECK(defect(2, 3, {1, 1, 1}) == -1);
    CHECK_THROWS_AS(defect(10, 3, {5, 3}), ArityMismatch);
}

TEST_CASE("defect nonnegative iff the tops fit into the square", "[gl]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 30);
        std::vector<int> tops;
        for (int i = 0; i < 3; ++i)
            tops.push_back(1 + static_cast<int>(rng() % r));
        CHECK((defect(r, 3, tops) >= 0) ==
              (tops[0] + tops[1] + tops[2] <= r));
    }
}

TEST_CASE("minimal column and its uniqueness", "[gl]") {
    CHECK(min_gl_column(10, 4) ==
          std::make_pair(Partition({4, 4, 2}), 4));
    CHECK(min_gl_column(12, 4) == std::make_pair(Partition({4, 4, 4}), 0));
    CHECK(min_gl_column(7, 7) == std::make_pair(Partition({7}), 0));

    for (int r = 1; r <= 25; ++r) {
        for (int q = 1; q <= r; ++q) {
            int best = r * r + 1;
            int count = 0;
            Partition argmin;
            for_each_bounded(r, q, [&](const Partition& p) {
                const int d = gl_column_dimension(r, q, p);
                if (d < best) {
                    best = d;
                    count = 1;
                    argmin = p;
                } else if (d == best) {
                    ++count;
                }
            });
            const auto [closed_partition, closed_value] = min_gl_column(r, q);
            CHECK(best == closed_value);
            CHECK(count == 1);
            CHECK(argmin == closed_partition);
        }
    }
}

TEST_CASE("column dimension is zero exactly on full stacks", "[gl]") {
    for (int r = 1; r <= 12; ++r)
        for (int q = 1; q <= r; ++q)
            for_each_bounded(r, q, [&](const Partition& p) {
                const int d = gl_column_dimension(r, q, p);
                CHECK(d >= 0);
                const bool full_stack =
                    r % q == 0 && p == bounded_max_partition(r, q);
                CHECK((d == 0) == full_stack);
            });
}

TEST_CASE("strict dominance monotonicity of the column dimension", "[gl]") {
    for (int r = 1; r <= 12; ++r) {
        for (int q = 1; q <= r; ++q) {
            const auto all = enumerate_bounded(r, q);
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (a == b || !dominates(a, b)) continue;
                    CHECK(gl_column_dimension(r, q, a) <
                          gl_column_dimension(r, q, b));
                }
        }
    }
}

TEST_CASE("minimal configuration dimensions", "[gl]") {
    CHECK(min_gl_config_dimension(12, 6, 4, 2) == 0);
    CHECK(min_nonzero_gl_config_dimension(12, 6, 4, 2) == 2);
    CHECK(min_gl_config_dimension(10, 5, 3, 2) == 2);
    CHECK(min_nonzero_gl_config_dimension(10, 5, 3, 2) == 2);
    CHECK(min_gl_config_dimension(6, 2, 2, 2) == 0);
    CHECK(min_nonzero_gl_config_dimension(6, 2, 2, 2) == 2);
    CHECK_THROWS_AS(min_nonzero_gl_config_dimension(3, 1, 1, 1), AllWidthsOne);
}

TEST_CASE("column residues", "[gl]") {
    auto check = [](int r, int q, int n, int c, int k) {
        const auto res = column_residue(r, q);
        CHECK(res.n == n);
        CHECK(res.c == c);
        CHECK(res.k == k);
        CHECK(r == res.n * q + res.c);
        CHECK(-q < 2 * res.c);
        CHECK(2 * res.c <= q);
        CHECK(res.k == ((res.c >= 0) ? res.c : res.c + q));
    };
    check(48, 16, 3, 0, 0);
    check(20, 7, 3, -1, 6);
    check(10, 4, 2, 2, 2);
}

TEST_CASE("zero dimension width triples", "[gl]") {
    CHECK(zero_dimension_triples(12) ==
          std::set<std::array<int, 3>>{{4, 4, 4}, {6, 3, 3}, {6, 4, 2}});
    CHECK(zero_dimension_triples(9) ==
          std::set<std::array<int, 3>>{{3, 3, 3}});
    CHECK(zero_dimension_triples(7).empty());
}
