#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charvar/partition.hpp"

namespace charvar {

/// The unique writing r = n*q + c with -q/2 < c <= q/2, plus the plain
/// residue k = r mod q. c measures how close q is to dividing r.
struct ColumnResidue {
    int n = 0;
    int c = 0;
    int k = 0;
};

inline ColumnResidue column_residue(int r, int q) {
    if (q < 1 || r < q) throw Error("column_residue requires 1 <= q <= r");
    ColumnResidue res;
    res.k = r % q;
    if (2 * res.k <= q) {
        res.c = res.k;
        res.n = r / q;
    } else {
        res.c = res.k - q;
        res.n = r / q + 1;
    }
    return res;
}

/// Empty boxes in one column: r*q minus the sum of squared parts.
inline int gl_column_dimension(int r, int q, const Partition& col) {
    if (col.weight() != r)
        throw WeightMismatch("column weight " + std::to_string(col.weight()) +
                             " differs from rank " + std::to_string(r));
    long sq = 0;
    for (int part : col.parts()) {
        if (part > q)
            throw PartExceedsWidth("part " + std::to_string(part) +
                                   " exceeds column width " + std::to_string(q));
        sq += static_cast<long>(part) * part;
    }
    return static_cast<int>(static_cast<long>(r) * q - sq);
}

/// An r x r square split into three columns, with one bounded partition of r
/// per column. Widths are normalized to weakly decreasing order at
/// construction; point_order records where each sorted column came from.
struct GlConfiguration {
    int rank = 0;
    std::array<int, 3> widths{};
    std::array<Partition, 3> columns{};
    std::array<int, 3> point_order{0, 1, 2};

    static GlConfiguration make(int rank, std::array<int, 3> widths,
                                std::array<Partition, 3> columns) {
        GlConfiguration cfg;
        cfg.rank = rank;
        std::array<int, 3> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return widths[a] > widths[b]; });
        for (int i = 0; i < 3; ++i) {
            cfg.widths[i] = widths[order[i]];
            cfg.columns[i] = std::move(columns[order[i]]);
            cfg.point_order[i] = order[i];
        }
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (rank < 1) throw Error("rank must be >= 1");
        if (widths[0] + widths[1] + widths[2] != rank)
            throw Error("column widths must sum to the rank");
        if (widths[2] < 1) throw Error("column widths must be positive");
        for (int i = 0; i < 3; ++i)
            gl_column_dimension(rank, widths[i], columns[i]); // validates
    }
};

/// Box dimension: the empty area left after packing all squares.
inline int gl_dimension(const GlConfiguration& cfg) {
    int total = 0;
    for (int i = 0; i < 3; ++i)
        total += gl_column_dimension(cfg.rank, cfg.widths[i], cfg.columns[i]);
    return total;
}

inline int charvar_dimension(const GlConfiguration& cfg) {
    return gl_dimension(cfg) + 2;
}

/// (k-2)*r - sum of the top multiplicities; >= 0 characterizes
/// MC-minimality.
inline int defect(int r, int k, const std::vector<int>& tops) {
    if (static_cast<int>(tops.size()) != k)
        throw ArityMismatch("expected " + std::to_string(k) + " tops, got " +
                            std::to_string(tops.size()));
    long sum = 0;
    for (int t : tops) {
        if (t > r) throw Error("top multiplicity exceeds rank");
        sum += t;
    }
    return static_cast<int>(static_cast<long>(k - 2) * r - sum);
}

/// Minimal column dimension for width q and its unique minimizer (q,...,q,k).
inline std::pair<Partition, int> min_gl_column(int r, int q) {
    if (q < 1 || q > r) throw Error("min_gl_column requires 1 <= q <= r");
    const int k = r % q;
    return {bounded_max_partition(r, q), k * (q - k)};
}

inline void check_widths(int r, int q1, int q2, int q3) {
    if (q1 + q2 + q3 != r || q1 < q2 || q2 < q3 || q3 < 1)
        throw Error("widths must be weakly decreasing, positive, and sum to r");
}

inline int min_gl_config_dimension(int r, int q1, int q2, int q3) {
    check_widths(r, q1, q2, q3);
    int total = 0;
    for (int q : {q1, q2, q3}) total += min_gl_column(r, q).second;
    return total;
}

/// Smallest dimension that is not zero. When every width divides r the floor
/// comes from the partition (q,...,q,q-1,1) in the smallest column of width
/// q != 1, which costs 2q-2.
inline int min_nonzero_gl_config_dimension(int r, int q1, int q2, int q3) {
    check_widths(r, q1, q2, q3);
    const int minimum = min_gl_config_dimension(r, q1, q2, q3);
    if (minimum != 0) return minimum;
    for (int q : {q3, q2, q1})
        if (q != 1) return 2 * q - 2;
    throw AllWidthsOne("no nonzero dimension exists when all widths are 1");
}

/// Width triples admitting a zero-dimension configuration: the divisor
/// solutions of 1/m1 + 1/m2 + 1/m3 = 1.
inline std::set<std::array<int, 3>> zero_dimension_triples(int r) {
    if (r < 3) throw Error("zero_dimension_triples requires r >= 3");
    std::set<std::array<int, 3>> out;
    if (r % 3 == 0) out.insert({r / 3, r / 3, r / 3});
    if (r % 4 == 0) out.insert({r / 2, r / 4, r / 4});
    if (r % 6 == 0) out.insert({r / 2, r / 3, r / 6});
    return out;
}

} // namespace charvar
