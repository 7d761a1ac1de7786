#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charvar/partition.hpp"

namespace charvar {

/// e and f are the two half-unital eigenvalue types (e carries the larger
/// top block by the usual convention, which is not enforced here); m squares
/// come from paired non-self-dual eigenvalues and always appear in pairs.
enum class PartKind { e, f, m };

inline char kind_letter(PartKind k) {
    switch (k) {
        case PartKind::e: return 'e';
        case PartKind::f: return 'f';
        default: return 'm';
    }
}

struct TypedPart {
    int size = 0;
    PartKind kind = PartKind::e;

    friend bool operator==(const TypedPart&, const TypedPart&) = default;
    friend bool operator<(const TypedPart& a, const TypedPart& b) {
        if (a.size != b.size) return a.size > b.size; // big squares first
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    }
};

/// One column of a quadratic configuration. Every square is listed
/// individually, including both members of each m-pair.
struct QuadColumn {
    int width = 0;
    std::vector<TypedPart> parts;

    static QuadColumn make(int width, std::vector<TypedPart> parts,
                           bool bounded = true) {
        QuadColumn col{width, std::move(parts)};
        std::sort(col.parts.begin(), col.parts.end());
        col.validate(bounded);
        return col;
    }

    void validate(bool bounded = true) const {
        if (width < 1) throw Error("column width must be positive");
        std::map<int, int> m_counts;
        for (const auto& p : parts) {
            if (p.size < 1) throw Error("square sizes must be positive");
            if (bounded && p.size > width)
                throw PartExceedsWidth("square of size " + std::to_string(p.size) +
                                       " exceeds column width " +
                                       std::to_string(width));
            if (p.kind == PartKind::m) ++m_counts[p.size];
        }
        for (const auto& [size, count] : m_counts)
            if (count % 2 != 0)
                throw UnpairedM("m squares of size " + std::to_string(size) +
                                " do not pair up");
    }

    int size_sum() const {
        int s = 0;
        for (const auto& p : parts) s += p.size;
        return s;
    }

    std::vector<int> sizes_of(PartKind kind) const {
        std::vector<int> out;
        for (const auto& p : parts)
            if (p.kind == kind) out.push_back(p.size);
        std::sort(out.begin(), out.end(), std::greater<int>());
        return out;
    }

    /// One multiplicity per m-pair, descending.
    std::vector<int> m_pair_sizes() const {
        std::vector<int> m = sizes_of(PartKind::m);
        std::vector<int> out;
        for (std::size_t i = 0; i + 1 < m.size(); i += 2) out.push_back(m[i]);
        return out;
    }

    Partition shape() const {
        std::vector<int> sizes;
        for (const auto& p : parts) sizes.push_back(p.size);
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        return Partition(std::move(sizes));
    }
};

/// epsilon is +1 in the orthogonal case and -1 in the symplectic one.
struct QuadConfiguration {
    int rank = 0;
    int epsilon = 1;
    std::array<QuadColumn, 3> columns{};
    std::array<int, 3> point_order{0, 1, 2};

    static QuadConfiguration make(int rank, int epsilon,
                                  std::array<QuadColumn, 3> columns) {
        QuadConfiguration cfg;
        cfg.rank = rank;
        cfg.epsilon = epsilon;
        std::array<int, 3> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return columns[a].width > columns[b].width;
        });
        for (int i = 0; i < 3; ++i) {
            cfg.columns[i] = std::move(columns[order[i]]);
            cfg.point_order[i] = order[i];
        }
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (rank < 1) throw Error("rank must be >= 1");
        if (epsilon != 1 && epsilon != -1) throw Error("epsilon must be +1 or -1");
        int width_sum = 0;
        for (const auto& col : columns) {
            col.validate();
            width_sum += col.width;
            if (col.size_sum() != rank)
                throw WeightMismatch("column sizes sum to " +
                                     std::to_string(col.size_sum()) +
                                     ", expected rank " + std::to_string(rank));
        }
        if (width_sum != rank) throw Error("column widths must sum to the rank");
        if (columns[0].width < columns[1].width ||
            columns[1].width < columns[2].width)
            throw Error("column widths must be weakly decreasing");
    }
};

inline int column_box_dimension(const QuadColumn& col) {
    long sq = 0;
    for (const auto& p : col.parts) sq += static_cast<long>(p.size) * p.size;
    return static_cast<int>(static_cast<long>(col.size_sum()) * col.width - sq);
}

/// r^2 minus the squares of every listed part (each member of an m-pair
/// counted once).
inline int box_dimension(const QuadConfiguration& cfg) {
    long sq = 0;
    for (const auto& col : cfg.columns)
        for (const auto& p : col.parts) sq += static_cast<long>(p.size) * p.size;
    return static_cast<int>(static_cast<long>(cfg.rank) * cfg.rank - sq);
}

inline int alternating_sum(const std::vector<int>& sorted_desc) {
    int sum = 0;
    int sign = 1;
    for (int v : sorted_desc) {
        sum += sign * v;
        sign = -sign;
    }
    return sum;
}

/// q minus the alternating sums of the e sizes and of the f sizes (leading
/// term positive). m squares contribute nothing: a pair occupies adjacent
/// slots and cancels.
inline int linear_correction(const QuadColumn& col) {
    return col.width - alternating_sum(col.sizes_of(PartKind::e)) -
           alternating_sum(col.sizes_of(PartKind::f));
}

inline int linear_correction(const QuadConfiguration& cfg) {
    int l = 0;
    for (const auto& col : cfg.columns) l += linear_correction(col);
    return l;
}

inline int column_dimension(const QuadColumn& col, int epsilon) {
    return column_box_dimension(col) - epsilon * linear_correction(col);
}

/// Delta = beta - epsilon * l. Twice the dimension of the associated
/// character variety.
inline int quad_dimension(const QuadConfiguration& cfg) {
    return box_dimension(cfg) - cfg.epsilon * linear_correction(cfg);
}

/// Replaces every m-pair with two e squares of the same size. beta, l and
/// Delta are unchanged for both epsilon.
inline QuadConfiguration eliminate_m_pairs(const QuadConfiguration& cfg) {
    std::array<QuadColumn, 3> cols = cfg.columns;
    for (auto& col : cols) {
        col.validate(); // rejects unpaired m squares
        for (auto& p : col.parts)
            if (p.kind == PartKind::m) p.kind = PartKind::e;
        std::sort(col.parts.begin(), col.parts.end());
    }
    QuadConfiguration out = cfg;
    out.columns = cols;
    return out;
}

/// Achievable linear corrections of a column shape over all e/f type
/// assignments, as a sorted list. With the sizes sorted descending and
/// padded to an odd count by one zero, the set is
///   q - sizes[0] -+ (sizes[1]-sizes[2]) -+ (sizes[3]-sizes[4]) ...
/// computed here by a reachability sweep over [-q, q]; every value lands in
/// that interval.
inline std::vector<int> linear_correction_values(int q, const Partition& sizes) {
    std::vector<int> parts = sizes.parts();
    for (int p : parts)
        if (p > q)
            throw PartExceedsWidth("part " + std::to_string(p) +
                                   " exceeds column width " + std::to_string(q));
    if (parts.size() % 2 == 0) parts.push_back(0);
    const int base = q - parts[0];
    std::vector<char> reach(2 * q + 1, 0);
    reach[static_cast<std::size_t>(base + q)] = 1;
    for (std::size_t j = 1; j + 1 < parts.size(); j += 2) {
        const int d = parts[j] - parts[j + 1];
        if (d == 0) continue;
        std::vector<char> next(2 * q + 1, 0);
        for (int v = -q; v <= q; ++v) {
            if (!reach[static_cast<std::size_t>(v + q)]) continue;
            next[static_cast<std::size_t>(v - d + q)] = 1;
            next[static_cast<std::size_t>(v + d + q)] = 1;
        }
        reach.swap(next);
    }
    std::vector<int> out;
    for (int v = -q; v <= q; ++v)
        if (reach[static_cast<std::size_t>(v + q)]) out.push_back(v);
    return out;
}

inline std::set<int> possible_linear_corrections(int q, const Partition& sizes) {
    const auto values = linear_correction_values(q, sizes);
    return {values.begin(), values.end()};
}

inline int shape_box_dimension(int q, const Partition& sizes) {
    long sq = 0;
    for (int p : sizes.parts()) sq += static_cast<long>(p) * p;
    return static_cast<int>(static_cast<long>(sizes.weight()) * q - sq);
}

/// { beta_col - epsilon * l } over the achievable linear corrections.
inline std::set<int> possible_column_dimensions(int q, const Partition& sizes,
                                                int epsilon) {
    const int beta = shape_box_dimension(q, sizes);
    std::set<int> out;
    for (int l : linear_correction_values(q, sizes)) out.insert(beta - epsilon * l);
    return out;
}

/// Smallest dimension a column shape can reach for a fixed epsilon.
inline int min_column_dimension(int q, const Partition& sizes, int epsilon) {
    const int beta = shape_box_dimension(q, sizes);
    const auto values = linear_correction_values(q, sizes);
    return epsilon == 1 ? beta - values.back() : beta + values.front();
}

/// Smallest dimension over type assignments and both epsilon.
inline int min_column_dimension_any_epsilon(int q, const Partition& sizes) {
    const int beta = shape_box_dimension(q, sizes);
    return beta - linear_correction_values(q, sizes).back();
}

struct MinQuadColumn {
    int value = 0;
    std::vector<Partition> minimizers;
};

/// Minimal quadratic column dimension for width q, over partitions, type
/// assignments, and both epsilon. With r = m*q + k the value is
/// k(q-k)-q+k when m is even and k(q-k)-k when m is odd, attained at
/// (q,...,q,k); two residue classes admit one extra minimizer.
inline MinQuadColumn min_quad_column(int r, int q) {
    if (q < 1 || q > r) throw Error("min_quad_column requires 1 <= q <= r");
    const int k = r % q;
    const int m = r / q;
    MinQuadColumn out;
    out.value = m % 2 == 0 ? k * (q - k) - q + k : k * (q - k) - k;
    out.minimizers.push_back(bounded_max_partition(r, q));
    if (k == 2 && m % 2 == 0) {
        std::vector<int> tie(static_cast<std::size_t>(m), q);
        tie.push_back(1);
        tie.push_back(1);
        out.minimizers.push_back(Partition(std::move(tie)));
    } else if (k == q - 2 && m % 2 == 1) {
        std::vector<int> tie(static_cast<std::size_t>(m - 1), q);
        tie.push_back(q - 1);
        tie.push_back(q - 1);
        out.minimizers.push_back(Partition(std::move(tie)));
    }
    std::sort(out.minimizers.begin(), out.minimizers.end());
    return out;
}

/// Per-point largest multiplicities by type; m carries one entry per pair.
struct PointTops {
    std::vector<int> e;
    std::vector<int> f;
    std::vector<int> m;

    int e0() const { return e.empty() ? 0 : e[0]; }
    int e1() const { return e.size() < 2 ? 0 : e[1]; }
    int f0() const { return f.empty() ? 0 : f[0]; }
    int m0() const { return m.empty() ? 0 : m[0]; }
    int m_at(std::size_t j) const { return j < m.size() ? m[j] : 0; }
};

/// The five inequality families of numerical MC-minimality, checked over all
/// six point orderings; missing multiplicities count as zero and the halved
/// sums are compared exactly (doubled, in integers).
inline bool is_numerically_mc_minimal(int rank,
                                      std::array<PointTops, 3> points) {
    for (auto& p : points) {
        std::sort(p.e.begin(), p.e.end(), std::greater<int>());
        std::sort(p.f.begin(), p.f.end(), std::greater<int>());
        std::sort(p.m.begin(), p.m.end(), std::greater<int>());
    }
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        const PointTops& a = points[static_cast<std::size_t>(perm[0])];
        const PointTops& b = points[static_cast<std::size_t>(perm[1])];
        const PointTops& c = points[static_cast<std::size_t>(perm[2])];
        const std::size_t pairs =
            std::max({a.m.size(), b.m.size(), c.m.size()});
        bool ok = a.e0() + b.e0() + c.e0() <= rank;
        for (std::size_t j = 0; ok && j < pairs; ++j) {
            ok = a.m_at(j) + b.m_at(j) + c.m_at(j) <= rank &&
                 a.m_at(j) + b.m_at(j) + c.e0() <= rank;
        }
        ok = ok && 2 * (a.m0() + b.e0()) + c.e0() + c.f0() <= 2 * rank &&
             2 * (a.m0() + b.e0()) + c.e0() + c.e1() <= 2 * rank;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline PointTops point_tops(const QuadColumn& col) {
    return PointTops{col.sizes_of(PartKind::e), col.sizes_of(PartKind::f),
                     col.m_pair_sizes()};
}

inline bool is_numerically_mc_minimal(const QuadConfiguration& cfg) {
    return is_numerically_mc_minimal(
        cfg.rank, {point_tops(cfg.columns[0]), point_tops(cfg.columns[1]),
                   point_tops(cfg.columns[2])});
}

/// Quadratic configuration whose two designated columns share a horizontal
/// overlap of mu between their largest e squares; those squares stick out of
/// their column widths by mu. Column order is kept as given, with the
/// overlap pair stored explicitly.
struct OverlappingConfiguration {
    int rank = 0;
    int epsilon = 1;
    std::array<QuadColumn, 3> columns{};
    std::array<int, 2> overlap{1, 2};
    int mu = 1;

    int free_column() const { return 3 - overlap[0] - overlap[1]; }

    static OverlappingConfiguration make(int rank, int epsilon,
                                         std::array<QuadColumn, 3> columns,
                                         std::array<int, 2> overlap, int mu) {
        OverlappingConfiguration cfg{rank, epsilon, std::move(columns), overlap,
                                     mu};
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (rank < 1) throw Error("rank must be >= 1");
        if (epsilon != 1 && epsilon != -1) throw Error("epsilon must be +1 or -1");
        if (mu < 1) throw InvalidOverlap("overlap mu must be >= 1");
        if (overlap[0] == overlap[1] || overlap[0] < 0 || overlap[0] > 2 ||
            overlap[1] < 0 || overlap[1] > 2)
            throw InvalidOverlap("overlap pair must name two distinct columns");

        for (const auto& col : columns) {
            col.validate(/*bounded=*/false);
            if (col.size_sum() != rank)
                throw WeightMismatch("column sizes sum to " +
                                     std::to_string(col.size_sum()) +
                                     ", expected rank " + std::to_string(rank));
        }

        const QuadColumn& free = columns[static_cast<std::size_t>(free_column())];
        const std::vector<int> free_m = free.m_pair_sizes();
        if (free_m.empty())
            throw InvalidOverlap("non-overlapping column must carry an m-pair");
        const int m10 = free_m[0];
        const auto free_e = free.sizes_of(PartKind::e);
        if (!free_e.empty() && free_e[0] >= m10)
            throw InvalidOverlap(
                "largest m square of the non-overlapping column must exceed its "
                "largest e square");
        if (m10 != free.width)
            throw InvalidOverlap(
                "non-overlapping column width must equal its largest m square");
        for (const auto& p : free.parts)
            if (p.size > free.width)
                throw InvalidOverlap("non-overlapping column square exceeds width");

        std::array<int, 2> e_top{};
        for (int t = 0; t < 2; ++t) {
            const QuadColumn& col = columns[static_cast<std::size_t>(overlap[t])];
            const auto e_sizes = col.sizes_of(PartKind::e);
            if (e_sizes.empty())
                throw InvalidOverlap("overlapping column has no e square");
            e_top[t] = e_sizes[0];
            const auto m_sizes = col.m_pair_sizes();
            if (!m_sizes.empty() && m_sizes[0] >= e_top[t])
                throw InvalidOverlap(
                    "largest e square of an overlapping column must exceed its "
                    "largest m square");
            if (e_top[t] != col.width + mu)
                throw InvalidOverlap(
                    "largest e square of an overlapping column must equal its "
                    "width plus mu");
            bool skipped_top = false;
            for (const auto& p : col.parts) {
                if (!skipped_top && p.kind == PartKind::e && p.size == e_top[t]) {
                    skipped_top = true;
                    continue;
                }
                if (p.size > col.width)
                    throw InvalidOverlap(
                        "only the largest e square may exceed an overlapping "
                        "column's width");
            }
        }

        const int nu = rank - e_top[0] - e_top[1];
        if (nu < 1) throw InvalidOverlap("nu = r - e2^0 - e3^0 must be >= 1");
        if (nu != m10 - mu)
            throw InvalidOverlap("nu must equal the largest m square minus mu");
        // e_1^0 + e_2^0 + e_3^0 <= r, i.e. the free column's largest e square
        // fits beside the overlap; the transform preserves the linear
        // correction only under this bound
        if (!free_e.empty() && free_e[0] > nu)
            throw InvalidOverlap(
                "largest e square of the non-overlapping column must be at "
                "most nu");
        if (rank != free.width + e_top[0] + e_top[1] - mu)
            throw InvalidOverlap("rank must equal q1 + e2^0 + e3^0 - mu");
        for (const auto& col : columns)
            if (mu > col.width)
                throw InvalidOverlap("mu cannot exceed any column width");
    }
};

inline int box_dimension(const OverlappingConfiguration& cfg) {
    long sq = 0;
    for (const auto& col : cfg.columns)
        for (const auto& p : col.parts) sq += static_cast<long>(p.size) * p.size;
    return static_cast<int>(static_cast<long>(cfg.rank) * cfg.rank - sq);
}

inline int linear_correction(const OverlappingConfiguration& cfg) {
    int l = cfg.rank;
    for (const auto& col : cfg.columns) {
        l -= alternating_sum(col.sizes_of(PartKind::e));
        l -= alternating_sum(col.sizes_of(PartKind::f));
    }
    return l;
}

inline bool is_numerically_mc_minimal(const OverlappingConfiguration& cfg) {
    return is_numerically_mc_minimal(
        cfg.rank, {point_tops(cfg.columns[0]), point_tops(cfg.columns[1]),
                   point_tops(cfg.columns[2])});
}

/// Rewrites an overlapping configuration as a rank r - mu non-overlapping
/// one: the top m-pair of the free column becomes e squares of sizes
/// (m_1^0, m_1^0 - mu) and each overlapping column's largest e square
/// shrinks by mu. Box dimension and linear correction are both preserved.
inline QuadConfiguration to_non_overlapping(const OverlappingConfiguration& cfg) {
    cfg.validate();
    std::array<QuadColumn, 3> cols = cfg.columns;

    QuadColumn& free = cols[static_cast<std::size_t>(cfg.free_column())];
    const int m10 = free.m_pair_sizes()[0];
    if (m10 - cfg.mu <= 0)
        throw ZeroPart("shrunk m square would not be positive");
    int replaced = 0;
    for (auto& p : free.parts) {
        if (replaced == 2) break;
        if (p.kind == PartKind::m && p.size == m10) {
            p.kind = PartKind::e;
            if (replaced == 1) p.size = m10 - cfg.mu;
            ++replaced;
        }
    }

    for (int idx : cfg.overlap) {
        QuadColumn& col = cols[static_cast<std::size_t>(idx)];
        const int e_top = col.sizes_of(PartKind::e)[0];
        if (e_top - cfg.mu <= 0)
            throw ZeroPart("shrunk e square would not be positive");
        for (auto& p : col.parts) {
            if (p.kind == PartKind::e && p.size == e_top) {
                p.size = e_top - cfg.mu;
                break;
            }
        }
    }

    return QuadConfiguration::make(cfg.rank - cfg.mu, cfg.epsilon,
                                   std::move(cols));
}

/// All partitions of r with parts <= q whose minimal column dimension at the
/// given epsilon is <= threshold, found by walking the dominance order down
/// from (q,...,q,k). A partition whose minimum already exceeds the threshold
/// cuts off its whole down-set: minima never decrease down the order.
inline std::vector<std::pair<Partition, int>> low_dimension_columns(
    int r, int q, int epsilon, int threshold) {
    std::vector<std::pair<Partition, int>> out;
    std::set<Partition> seen;
    std::vector<Partition> stack{bounded_max_partition(r, q)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Partition p = std::move(stack.back());
        stack.pop_back();
        const int md = min_column_dimension(q, p, epsilon);
        if (md > threshold) continue;
        out.emplace_back(p, md);
        for (const Partition& next : lower_neighbors(p))
            if (seen.insert(next).second) stack.push_back(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace charvar
