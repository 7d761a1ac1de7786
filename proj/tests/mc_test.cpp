#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charvar/mc.hpp"

using namespace charvar;

namespace {

Exponent exp_of(std::int64_t n, std::int64_t d) {
    return Exponent(Rational(n, d));
}

EigenBlock block(std::int64_t n, std::int64_t d,
                 std::initializer_list<int> parts) {
    return EigenBlock{exp_of(n, d), Partition(parts)};
}

MonodromyTuple hypergeometric() {
    return MonodromyTuple::make(
        2, {{block(0, 1, {1}), block(1, 2, {1})},
            {block(1, 3, {1}), block(1, 2, {1})},
            {block(1, 4, {1}), block(1, 2, {1})}});
}

// per-point top multiplicities 5, 3, 2: the defect-zero worked shape
MonodromyTuple tops532() {
    return MonodromyTuple::make(
        10, {{block(0, 1, {5}), block(1, 2, {5})},
             {block(0, 1, {3}), block(1, 3, {3}), block(2, 3, {3}),
              block(1, 2, {1})},
             {block(1, 5, {2}), block(2, 5, {2}), block(3, 5, {2}),
              block(4, 5, {2}), block(1, 2, {1}), block(1, 6, {1})}});
}

// Semisimple tuple with the given eigenvalue denominators kept small.
MonodromyTuple random_tuple(std::mt19937& rng, int max_rank) {
    const int rank = 2 + static_cast<int>(rng() % (max_rank - 1));
    std::vector<std::vector<EigenBlock>> points;
    for (int i = 0; i < 3; ++i) {
        std::vector<EigenBlock> point;
        std::set<Exponent> used;
        int left = rank;
        while (left > 0) {
            const int mult = 1 + static_cast<int>(rng() % left);
            Exponent eig;
            do {
                const std::int64_t den = 1 + rng() % 12;
                eig = exp_of(static_cast<std::int64_t>(rng() % 12), den);
            } while (!used.insert(eig).second);
            point.push_back(EigenBlock{eig, Partition({mult})});
            left -= mult;
        }
        points.push_back(std::move(point));
    }
    return MonodromyTuple::make(rank, std::move(points));
}

ConvolutionKernel random_kernel(std::mt19937& rng,
                                const MonodromyTuple& tuple) {
    for (;;) {
        std::vector<Exponent> betaH;
        Exponent h_sum;
        for (std::size_t i = 0; i < tuple.arity(); ++i) {
            // aim at an existing eigenvalue most of the time
            const auto& point = tuple.points[i];
            Exponent alpha;
            if (rng() % 4 != 0) {
                alpha = point[rng() % point.size()].eigenvalue;
            } else {
                alpha = exp_of(static_cast<std::int64_t>(rng() % 12),
                               1 + rng() % 12);
            }
            betaH.push_back(-alpha);
            h_sum = h_sum + betaH.back();
        }
        const Exponent betaT = -h_sum;
        if (betaT.is_zero()) continue;
        std::vector<Exponent> betaV;
        Exponent v_sum;
        for (std::size_t i = 0; i + 1 < tuple.arity(); ++i) {
            betaV.push_back(exp_of(static_cast<std::int64_t>(rng() % 12),
                                   1 + rng() % 12));
            v_sum = v_sum + betaV.back();
        }
        betaV.push_back(-(v_sum + betaT));
        return ConvolutionKernel::make(std::move(betaH), std::move(betaV),
                                       betaT);
    }
}

} // namespace

TEST_CASE("exponents reduce modulo one", "[mc]") {
    CHECK(exp_of(3, 2) == exp_of(1, 2));
    CHECK(exp_of(-1, 3) == exp_of(2, 3));
    CHECK((exp_of(1, 2) + exp_of(1, 2)).is_zero());
    CHECK(Exponent::parse("7/6") == exp_of(1, 6));
    CHECK_THROWS_AS(Exponent::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Exponent::parse("x"), ParseError);
}

TEST_CASE("betaU derivation", "[mc]") {
    const auto kernel = ConvolutionKernel::make(
        {exp_of(1, 2), exp_of(1, 2), exp_of(1, 2)},
        {exp_of(1, 2), exp_of(1, 2), exp_of(1, 2)}, exp_of(1, 2));
    const auto betaU = derive_betaU(kernel);
    CHECK(betaU == std::vector<Exponent>{exp_of(1, 2), exp_of(1, 2),
                                         exp_of(1, 2)});
}

TEST_CASE("kernel relations are validated", "[mc]") {
    CHECK_THROWS_AS(
        ConvolutionKernel::make({exp_of(1, 2), exp_of(1, 2), exp_of(0, 1)},
                                {exp_of(0, 1), exp_of(0, 1), exp_of(0, 1)},
                                exp_of(0, 1)),
        DegenerateKernel);
    CHECK_THROWS_AS(
        ConvolutionKernel::make({exp_of(1, 2), exp_of(0, 1), exp_of(0, 1)},
                                {exp_of(0, 1), exp_of(0, 1), exp_of(0, 1)},
                                exp_of(1, 3)),
        Error);
}

TEST_CASE("kernel relation closure", "[mc]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto tuple = random_tuple(rng, 8);
        const auto kernel = random_kernel(rng, tuple);
        const auto betaU = derive_betaU(kernel);
        Exponent u_sum, h_sum, v_sum;
        for (const auto& e : betaU) u_sum = u_sum + e;
        for (const auto& e : kernel.betaH) h_sum = h_sum + e;
        for (const auto& e : kernel.betaV) v_sum = v_sum + e;
        Exponent rhs = h_sum + v_sum;
        for (std::size_t i = 0; i < kernel.arity(); ++i) rhs = rhs + kernel.betaT;
        CHECK(u_sum == rhs);
    }
}

TEST_CASE("distinguished part lookup", "[mc]") {
    const std::vector<EigenBlock> point{block(0, 1, {1}), block(1, 2, {1})};
    const auto hit = distinguished_part(point, exp_of(0, 1));
    REQUIRE(hit.has_value());
    CHECK(hit->first == 0);
    CHECK(hit->second == 0);
    CHECK(point_delta(point, exp_of(0, 1)) == 1);
    CHECK_FALSE(distinguished_part(point, exp_of(1, 3)).has_value());
    CHECK(point_delta(point, exp_of(1, 3)) == 0);

    const std::vector<EigenBlock> semisimple{block(1, 4, {3})};
    CHECK(point_delta(semisimple, exp_of(1, 4)) == 3);
}

namespace {

// Kernel aimed at the given distinguished eigenvalues, with the vertical
// correction parked at the last point.
ConvolutionKernel kernel_for(const std::vector<Exponent>& alphas) {
    std::vector<Exponent> betaH;
    Exponent sum;
    for (const auto& a : alphas) {
        betaH.push_back(-a);
        sum = sum + a;
    }
    std::vector<Exponent> betaV(alphas.size());
    betaV.back() = -sum;
    return ConvolutionKernel::make(std::move(betaH), std::move(betaV), sum);
}

} // namespace

TEST_CASE("mc delta", "[mc]") {
    const auto tuple = hypergeometric();
    const auto kernel = default_kernel(tuple);
    CHECK(mc_delta(tuple, kernel) == -1);
    CHECK(mc_delta(tops532(), default_kernel(tops532())) == 0);

    // a kernel that misses every eigenvalue scores (k-2)*r
    const auto missing =
        kernel_for({exp_of(6, 7), exp_of(6, 7), exp_of(6, 7)});
    CHECK(mc_delta(tops532(), missing) == 10);
}

TEST_CASE("four-point tuples use the (k-2)r rank change", "[mc]") {
    // four points, two eigenvalues of multiplicity 1 each
    const auto four = MonodromyTuple::make(
        2, {{block(0, 1, {1}), block(1, 2, {1})},
            {block(1, 3, {1}), block(1, 2, {1})},
            {block(1, 4, {1}), block(1, 2, {1})},
            {block(1, 5, {1}), block(1, 2, {1})}});
    const auto kernel =
        kernel_for({exp_of(0, 1), exp_of(1, 3), exp_of(1, 4), exp_of(1, 5)});
    CHECK(mc_delta(four, kernel) == 2 * 2 - 4); // (k-2)*r - sum of tops
    const auto stepped = mc_step(four, kernel);
    CHECK(stepped.rank == 2);
    for (const auto& point : stepped.points) {
        int total = 0;
        for (const auto& b : point) total += b.dual_parts.weight();
        CHECK(total == stepped.rank);
    }
    // the reduction loop itself is a three-point operation
    CHECK_THROWS_AS(katz_reduce(four), ArityMismatch);
}

TEST_CASE("tuple defect matches the top-multiplicity defect", "[mc]") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto tuple = random_tuple(rng, 9);
        int tops = 0;
        for (std::size_t i = 0; i < 3; ++i) tops += tuple.top_of_point(i).first;
        CHECK(tuple_defect(tuple) == tuple.rank - tops);
    }
}

TEST_CASE("hypergeometric tuple reduces to rank one in one step", "[mc]") {
    const auto result = katz_reduce(hypergeometric());
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0].rank_before == 2);
    CHECK(result.trace[0].rank_after == 1);
    CHECK(result.terminal.rank == 1);
    for (const auto& point : result.terminal.points) {
        REQUIRE(point.size() == 1);
        CHECK(point[0].dual_parts == Partition({1}));
    }
}

TEST_CASE("defect zero tuples are fixed points", "[mc]") {
    const auto result = katz_reduce(tops532());
    CHECK(result.initial_defect == 0);
    CHECK(result.trace.empty());
    CHECK(result.terminal.rank == 10);

    // stepping with the default kernel relabels but keeps all sizes
    const auto tuple = tops532();
    const auto stepped = mc_step(tuple, default_kernel(tuple));
    CHECK(stepped.rank == 10);
    for (std::size_t i = 0; i < 3; ++i) {
        std::multiset<int> before, after;
        for (const auto& b : tuple.points[i])
            for (int part : b.dual_parts.parts()) before.insert(part);
        for (const auto& b : stepped.points[i])
            for (int part : b.dual_parts.parts()) after.insert(part);
        CHECK(before == after);
    }
}

TEST_CASE("step errors", "[mc]") {
    // the small distinguished part at the third point shrinks below zero
    const auto skewed = MonodromyTuple::make(
        6, {{block(0, 1, {4}), block(1, 2, {2})},
            {block(1, 3, {4}), block(1, 2, {2})},
            {block(1, 4, {1}), block(1, 2, {5})}});
    const auto aimed = kernel_for({exp_of(0, 1), exp_of(1, 3), exp_of(1, 4)});
    CHECK(mc_delta(skewed, aimed) == -3);
    CHECK_THROWS_AS(mc_step(skewed, aimed), NegativePart);

    // full-multiplicity points would drive the rank negative
    const auto full = MonodromyTuple::make(
        3, {{block(1, 5, {3})}, {block(1, 3, {3})}, {block(1, 7, {3})}});
    CHECK_THROWS_AS(mc_step(full, default_kernel(full)), InvalidConvolution);

    // missing distinguished eigenvalue while the rank shrinks
    const auto lopsided = MonodromyTuple::make(
        4, {{block(0, 1, {2}), block(1, 2, {2})},
            {block(1, 3, {3}), block(1, 2, {1})},
            {block(1, 5, {3}), block(1, 2, {1})}});
    const auto miss = kernel_for({exp_of(6, 7), exp_of(1, 3), exp_of(1, 5)});
    CHECK(mc_delta(lopsided, miss) == 4 - 6);
    CHECK_THROWS_AS(mc_step(lopsided, miss), InvalidConvolution);

    // a relabeled block landing on betaV is refused, not merged
    const auto collide = MonodromyTuple::make(
        10, {{block(0, 1, {4}), block(2, 3, {4}), block(1, 3, {2})},
             {block(2, 3, {4}), block(0, 1, {6})},
             {block(2, 3, {2}), block(1, 2, {8})}});
    const auto kernel = ConvolutionKernel::make(
        {exp_of(0, 1), exp_of(1, 3), exp_of(1, 3)},
        {exp_of(0, 1), exp_of(0, 1), exp_of(2, 3)}, exp_of(1, 3));
    CHECK(mc_delta(collide, kernel) == 0);
    CHECK_THROWS_AS(mc_step(collide, kernel), EigenvalueCollision);
}

TEST_CASE("degenerate default kernel is reported", "[mc]") {
    const auto degen = MonodromyTuple::make(
        2, {{block(0, 1, {1}), block(3, 4, {1})},
            {block(1, 2, {1}), block(3, 4, {1})},
            {block(1, 2, {1}), block(3, 4, {1})}});
    CHECK(tuple_defect(degen) < 0);
    CHECK_THROWS_AS(katz_reduce(degen), DegenerateKernel);
}

TEST_CASE("multiplicity totals are conserved on random valid steps", "[mc]") {
    std::mt19937 rng(20240818);
    int performed = 0;
    while (performed < 3000) {
        const auto tuple = random_tuple(rng, 10);
        const auto kernel = random_kernel(rng, tuple);
        MonodromyTuple stepped;
        try {
            stepped = mc_step(tuple, kernel);
        } catch (const ConvolutionError&) {
            continue;
        }
        const int delta = mc_delta(tuple, kernel);
        CHECK(stepped.rank == tuple.rank + delta);
        for (const auto& point : stepped.points) {
            int total = 0;
            for (const auto& b : point) total += b.dual_parts.weight();
            CHECK(total == stepped.rank);
        }
        ++performed;
    }
}

TEST_CASE("reduction terminates with the tops fitting into the square",
          "[mc]") {
    std::mt19937 rng(5150);
    int reduced = 0;
    while (reduced < 150) {
        const auto tuple = random_tuple(rng, 12);
        ReductionResult result;
        try {
            result = katz_reduce(tuple);
        } catch (const ConvolutionError&) {
            continue;
        }
        int prev = tuple.rank;
        for (const auto& step : result.trace) {
            CHECK(step.rank_after < step.rank_before);
            CHECK(step.rank_before == prev);
            prev = step.rank_after;
        }
        if (result.terminal.rank > 1) {
            // the loop ended because the defect turned nonnegative, which is
            // exactly the tops fitting into the square
            int tops = 0;
            for (std::size_t i = 0; i < 3; ++i)
                tops += result.terminal.top_of_point(i).first;
            CHECK(tops <= result.terminal.rank);
        }
        if (!result.trace.empty()) ++reduced;
    }
}
