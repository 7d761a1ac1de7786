#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "charvar/gl.hpp"
#include "charvar/quad.hpp"

namespace charvar {

/// One configuration recorded by a sweep, as a witness or a violation.
/// epsilon is 0 in the general-linear sweeps.
struct SweepEntry {
    int rank = 0;
    int epsilon = 0;
    std::array<int, 3> widths{};
    std::array<Partition, 3> columns{};
    std::array<int, 3> column_dims{};
    int delta = 0;
    std::string note;

    friend bool operator<(const SweepEntry& a, const SweepEntry& b) {
        return std::tie(a.rank, a.epsilon, a.widths, a.columns, a.column_dims,
                        a.delta, a.note) < std::tie(b.rank, b.epsilon, b.widths,
                                                    b.columns, b.column_dims,
                                                    b.delta, b.note);
    }
    friend bool operator==(const SweepEntry& a, const SweepEntry& b) {
        return std::tie(a.rank, a.epsilon, a.widths, a.columns, a.column_dims,
                        a.delta, a.note) == std::tie(b.rank, b.epsilon, b.widths,
                                                     b.columns, b.column_dims,
                                                     b.delta, b.note);
    }
};

struct VerificationReport {
    std::string theorem;
    int lo = 0;
    int hi = 0;
    std::vector<int> epsilons;
    bool pass = true;
    std::vector<SweepEntry> witnesses;
    std::vector<SweepEntry> violations;
    long elapsed_ms = 0;
};

namespace detail {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Fn>
void run_cells(std::size_t cells, int jobs, Fn&& fn) {
    const int workers = std::min<int>(resolve_jobs(jobs),
                                      static_cast<int>(cells ? cells : 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

/// General-linear analog of low_dimension_columns. Column dimensions grow
/// strictly down the dominance order, so the same cutoff applies.
inline std::vector<std::pair<Partition, int>> low_dimension_gl_columns(
    int r, int q, int threshold) {
    std::vector<std::pair<Partition, int>> out;
    if (threshold < 0) return out;
    std::set<Partition> seen;
    std::vector<Partition> stack{bounded_max_partition(r, q)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Partition p = std::move(stack.back());
        stack.pop_back();
        const int dim = gl_column_dimension(r, q, p);
        if (dim > threshold) continue;
        out.emplace_back(p, dim);
        for (const Partition& next : lower_neighbors(p))
            if (seen.insert(next).second) stack.push_back(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Fn>
void for_each_width_triple(int r, Fn&& fn) {
    for (int q1 = (r + 2) / 3; q1 <= r - 2; ++q1)
        for (int q2 = std::min(q1, r - q1 - 1); q2 >= 1 && 2 * q2 >= r - q1;
             --q2)
            fn(q1, q2, r - q1 - q2);
}

/// Reachable sums of three integer sets over [-limit_below, limit_above].
class SumTable {
public:
    SumTable(int lo, int hi) : lo_(lo), table_(static_cast<std::size_t>(hi - lo + 1), 0) {}

    void seed(int v) { at(v) = 1; }

    void shift_into(SumTable& dst, const std::vector<int>& values) const {
        for (int i = 0; i < size(); ++i) {
            if (!table_[static_cast<std::size_t>(i)]) continue;
            for (int v : values) {
                const int s = lo_ + i + v;
                if (s >= dst.lo_ && s <= dst.hi()) dst.at(s) = 1;
            }
        }
    }

    bool contains(int v) const {
        return v >= lo_ && v <= hi() && table_[static_cast<std::size_t>(v - lo_)];
    }

private:
    int size() const { return static_cast<int>(table_.size()); }
    int hi() const { return lo_ + size() - 1; }
    char& at(int v) { return table_[static_cast<std::size_t>(v - lo_)]; }

    int lo_;
    std::vector<char> table_;
};

/// Per-column data for one width: every partition whose dimension set
/// reaches the threshold, with the achievable dimensions <= threshold.
struct ColumnChoices {
    std::vector<std::pair<Partition, std::vector<int>>> partitions;
    std::vector<int> dims; // distinct, sorted
};

inline ColumnChoices quad_column_choices(int r, int q, int epsilon,
                                         int threshold, bool prune) {
    ColumnChoices out;
    std::set<int> dims;
    auto consider = [&](const Partition& p) {
        std::vector<int> mine;
        const int beta = shape_box_dimension(q, p);
        for (int l : linear_correction_values(q, p)) {
            const int d = beta - epsilon * l;
            if (d <= threshold) mine.push_back(d);
        }
        if (mine.empty()) return;
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        dims.insert(mine.begin(), mine.end());
        out.partitions.emplace_back(p, std::move(mine));
    };
    if (prune) {
        for (const auto& [p, md] : low_dimension_columns(r, q, epsilon, threshold))
            consider(p);
    } else {
        for_each_bounded(r, q, consider);
    }
    std::sort(out.partitions.begin(), out.partitions.end());
    out.dims.assign(dims.begin(), dims.end());
    return out;
}

inline ColumnChoices gl_column_choices(int r, int q, int threshold) {
    ColumnChoices out;
    std::set<int> dims;
    for (const auto& [p, d] : low_dimension_gl_columns(r, q, threshold)) {
        out.partitions.emplace_back(p, std::vector<int>{d});
        dims.insert(d);
    }
    out.dims.assign(dims.begin(), dims.end());
    return out;
}

/// Expands every (partition triple) whose column dimensions sum to target.
inline void emit_sum_configs(
    int rank, int epsilon, const std::array<int, 3>& widths,
    const std::array<const ColumnChoices*, 3>& cols, int target,
    const std::array<int, 3>& caps, std::vector<SweepEntry>& sink,
    const std::string& note) {
    for (const auto& [p1, dims1] : cols[0]->partitions)
        for (int d1 : dims1) {
            if (d1 > caps[0]) continue;
            for (const auto& [p2, dims2] : cols[1]->partitions)
                for (int d2 : dims2) {
                    if (d2 > caps[1]) continue;
                    const int d3 = target - d1 - d2;
                    if (d3 > caps[2]) continue;
                    for (const auto& [p3, dims3] : cols[2]->partitions) {
                        if (std::find(dims3.begin(), dims3.end(), d3) ==
                            dims3.end())
                            continue;
                        SweepEntry entry;
                        entry.rank = rank;
                        entry.epsilon = epsilon;
                        entry.widths = widths;
                        entry.columns = {p1, p2, p3};
                        entry.column_dims = {d1, d2, d3};
                        entry.delta = target;
                        entry.note = note;
                        sink.push_back(std::move(entry));
                    }
                }
        }
}

} // namespace detail

/// Sweeps every width triple and column choice for r <= r_max and checks the
/// general-linear rank bound: every positive even box dimension satisfies
/// 3*delta + 6 >= r, with equality exactly at widths (r/2, r/3, r/6) and
/// columns (q1,q1), (q2,q2,q2), (q3,...,q3,q3-1,1). Also cross-checks the
/// closed-form column floor against brute-force enumeration for r <= 40 and
/// the zero-dimension width triples against the divisor solutions.
inline VerificationReport verify_gl_bound(int r_max, int jobs = 0) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = "gl-rank-bound";
    report.lo = 3;
    report.hi = r_max;
    if (r_max < 6) throw Error("verify_gl_bound requires r_max >= 6");

    struct Cell {
        std::vector<SweepEntry> witnesses;
        std::vector<SweepEntry> violations;
    };
    std::vector<Cell> cells(static_cast<std::size_t>(r_max - 3 + 1));

    detail::run_cells(cells.size(), jobs, [&](std::size_t idx) {
        const int r = 3 + static_cast<int>(idx);
        Cell& cell = cells[idx];
        const int bound3 = r - 6; // compare 3*delta against this
        const int t_cap = bound3 >= 0 ? bound3 / 3 : -1;

        std::map<int, detail::ColumnChoices> cache;
        auto choices = [&](int q) -> const detail::ColumnChoices& {
            auto it = cache.find(q);
            if (it == cache.end())
                it = cache.emplace(q, detail::gl_column_choices(r, q, t_cap)).first;
            return it->second;
        };

        std::set<std::array<int, 3>> zero_triples;
        detail::for_each_width_triple(r, [&](int q1, int q2, int q3) {
            const std::array<int, 3> widths{q1, q2, q3};
            std::array<int, 3> mins{};
            int min_total = 0;
            for (int i = 0; i < 3; ++i) {
                mins[i] = min_gl_column(r, widths[i]).second;
                min_total += mins[i];
            }
            if (min_total == 0) zero_triples.insert(widths);
            if (t_cap < 0 || min_total > t_cap) return;

            std::array<const detail::ColumnChoices*, 3> cols{
                &choices(q1), &choices(q2), &choices(q3)};
            std::array<int, 3> caps{};
            for (int i = 0; i < 3; ++i)
                caps[i] = t_cap - (min_total - mins[i]);

            detail::SumTable acc(0, t_cap);
            acc.seed(0);
            for (int i = 0; i < 3; ++i) {
                detail::SumTable next(0, 3 * t_cap);
                // dims are nonnegative, so partial sums never need to dip
                acc.shift_into(next, cols[i]->dims);
                acc = std::move(next);
            }
            for (int s = 2; 3 * s <= bound3; s += 2) {
                if (!acc.contains(s)) continue;
                const bool equality = 3 * s == bound3;
                detail::emit_sum_configs(
                    r, 0, widths, cols, s, caps,
                    equality ? cell.witnesses : cell.violations,
                    equality ? "" : "even dimension below the rank bound");
            }
        });

        // Zero-dimension triples must be exactly the divisor solutions.
        if (zero_triples != zero_dimension_triples(r)) {
            SweepEntry entry;
            entry.rank = r;
            entry.note = "zero-dimension width triples differ from the divisor "
                         "solutions";
            cell.violations.push_back(std::move(entry));
        }

        // Equality witnesses must match the extremal configuration.
        std::vector<SweepEntry> predicted;
        if (r >= 12 && r % 6 == 0) {
            SweepEntry entry;
            entry.rank = r;
            entry.widths = {r / 2, r / 3, r / 6};
            std::vector<int> third(5, r / 6);
            third.push_back(r / 6 - 1);
            third.push_back(1);
            entry.columns = {Partition({r / 2, r / 2}),
                             Partition({r / 3, r / 3, r / 3}),
                             Partition(std::move(third))};
            entry.column_dims = {0, 0, r / 3 - 2};
            entry.delta = r / 3 - 2;
            predicted.push_back(std::move(entry));
        }
        std::sort(cell.witnesses.begin(), cell.witnesses.end());
        if (cell.witnesses != predicted) {
            SweepEntry entry;
            entry.rank = r;
            entry.note = "equality witnesses differ from the extremal "
                         "configuration";
            cell.violations.push_back(std::move(entry));
        }

        // Closed-form column floor against brute force.
        if (r <= 40) {
            for (int q = 1; q <= r; ++q) {
                int best = r * r;
                int best_count = 0;
                Partition best_partition;
                for_each_bounded(r, q, [&](const Partition& p) {
                    const int d = gl_column_dimension(r, q, p);
                    if (d < best) {
                        best = d;
                        best_count = 1;
                        best_partition = p;
                    } else if (d == best) {
                        ++best_count;
                    }
                });
                const auto [closed_partition, closed_value] = min_gl_column(r, q);
                if (best != closed_value || best_count != 1 ||
                    best_partition != closed_partition) {
                    SweepEntry entry;
                    entry.rank = r;
                    entry.widths = {q, 0, 0};
                    entry.note = "closed-form column floor disagrees with brute "
                                 "force";
                    cell.violations.push_back(std::move(entry));
                }
            }
        }
    });

    for (auto& cell : cells) {
        report.witnesses.insert(report.witnesses.end(), cell.witnesses.begin(),
                                cell.witnesses.end());
        report.violations.insert(report.violations.end(), cell.violations.begin(),
                                 cell.violations.end());
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

namespace detail {

struct QuadCellResult {
    std::vector<SweepEntry> witnesses;
    std::vector<SweepEntry> violations;
};

/// Shared core of the quadratic sweeps: walks every width triple for one
/// (rank, epsilon) cell and hands the achievable-dimension machinery to the
/// callback.
template <class Fn>
void quad_sweep_cell(int r, int epsilon, bool prune, Fn&& per_triple) {
    std::map<int, ColumnChoices> cache;
    const int t_num = r - 36; // compare 3*delta against this
    auto choices = [&](int q) -> const ColumnChoices& {
        auto it = cache.find(q);
        if (it == cache.end()) {
            const int threshold = t_num / 3 + (r - q); // cap over all triples
            it = cache
                     .emplace(q, quad_column_choices(r, q, epsilon, threshold,
                                                     prune))
                     .first;
        }
        return it->second;
    };
    for_each_width_triple(r, [&](int q1, int q2, int q3) {
        const std::array<int, 3> widths{q1, q2, q3};
        std::array<int, 3> mins{};
        int min_total = 0;
        for (int i = 0; i < 3; ++i) {
            mins[i] = min_quad_column(r, widths[i]).value;
            min_total += mins[i];
        }
        if (3 * min_total > t_num) return; // nothing can reach the bound
        std::array<const ColumnChoices*, 3> cols{&choices(q1), &choices(q2),
                                                 &choices(q3)};
        std::array<int, 3> caps{};
        for (int i = 0; i < 3; ++i)
            caps[i] = t_num / 3 - (min_total - mins[i]);
        per_triple(widths, cols, caps, mins);
    });
}

inline SumTable quad_sum_table(const std::array<const ColumnChoices*, 3>& cols,
                               const std::array<int, 3>& caps, int r,
                               int t_cap) {
    SumTable acc(-r, t_cap + 2 * r);
    acc.seed(0);
    for (int i = 0; i < 3; ++i) {
        SumTable next(-r, t_cap + 2 * r);
        std::vector<int> capped;
        for (int d : cols[i]->dims)
            if (d <= caps[i]) capped.push_back(d);
        acc.shift_into(next, capped);
        acc = std::move(next);
    }
    return acc;
}

} // namespace detail

/// Quadratic rank bound sweep: for every rank in [r_lo, r_hi], both epsilon,
/// every width triple and achievable column dimensions, checks that a
/// positive dimension divisible by 4 satisfies 3*delta + 36 >= r, with
/// equality exactly at the four extremal configurations (two third-column
/// shapes per epsilon).
inline VerificationReport verify_quad_bound(int r_lo, int r_hi, int jobs = 0,
                                            bool prune = true) {
    const auto start = std::chrono::steady_clock::now();
    if (r_lo < 3 || r_lo > r_hi) throw Error("verify_quad_bound needs 3 <= lo <= hi");
    VerificationReport report;
    report.theorem = "quad-rank-bound";
    report.lo = r_lo;
    report.hi = r_hi;
    report.epsilons = {-1, 1};

    const std::size_t n_ranks = static_cast<std::size_t>(r_hi - r_lo + 1);
    std::vector<detail::QuadCellResult> cells(2 * n_ranks);

    detail::run_cells(cells.size(), jobs, [&](std::size_t idx) {
        const int r = r_lo + static_cast<int>(idx / 2);
        const int epsilon = idx % 2 == 0 ? -1 : 1;
        detail::QuadCellResult& cell = cells[idx];
        const int t_num = r - 36;
        if (t_num < 12) return; // smallest qualifying dimension is 4

        detail::quad_sweep_cell(
            r, epsilon, prune,
            [&](const std::array<int, 3>& widths,
                const std::array<const detail::ColumnChoices*, 3>& cols,
                const std::array<int, 3>& caps, const std::array<int, 3>&) {
                const auto acc =
                    detail::quad_sum_table(cols, caps, r, t_num / 3);
                for (int s = 4; 3 * s <= t_num; s += 4) {
                    if (!acc.contains(s)) continue;
                    const bool equality = 3 * s == t_num;
                    detail::emit_sum_configs(
                        r, epsilon, widths, cols, s, caps,
                        equality ? cell.witnesses : cell.violations,
                        equality ? ""
                                 : "dimension divisible by 4 below the rank "
                                   "bound");
                }
            });

        // Equality witnesses must be the extremal configurations.
        std::vector<SweepEntry> predicted;
        if (t_num >= 12 && r % 12 == 0) {
            for (int third_drop : {2, 3}) {
                SweepEntry entry;
                entry.rank = r;
                entry.epsilon = epsilon;
                entry.widths = {r / 2, r / 3, r / 6};
                std::vector<int> third(5, r / 6);
                third.push_back(r / 6 - third_drop);
                third.push_back(third_drop);
                entry.columns = {Partition({r / 2, r / 2}),
                                 Partition({r / 3, r / 3, r / 3}),
                                 Partition(std::move(third))};
                entry.column_dims = {-r / 2, 0, 5 * r / 6 - 12};
                entry.delta = r / 3 - 12;
                predicted.push_back(std::move(entry));
            }
            std::sort(predicted.begin(), predicted.end());
        }
        std::sort(cell.witnesses.begin(), cell.witnesses.end());
        if (cell.witnesses != predicted) {
            SweepEntry entry;
            entry.rank = r;
            entry.epsilon = epsilon;
            entry.note = "equality witnesses differ from the extremal "
                         "configurations";
            cell.violations.push_back(std::move(entry));
        }
    });

    for (auto& cell : cells) {
        report.witnesses.insert(report.witnesses.end(), cell.witnesses.begin(),
                                cell.witnesses.end());
        report.violations.insert(report.violations.end(),
                                 cell.violations.begin(), cell.violations.end());
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

/// Residue reduction check: any width triple carrying a configuration with
/// 0 < delta and 3*delta <= r - 36 must have (n1, n2) among
/// {(2,2),(3,3),(2,4),(2,3)} with |c_i| <= n_i. Survivors are recorded as
/// witnesses with their residues in the note.
inline VerificationReport verify_nn_reduction(int r_lo, int r_hi, int jobs = 0) {
    const auto start = std::chrono::steady_clock::now();
    if (r_lo < 48) throw Error("verify_nn_reduction requires r_lo >= 48");
    if (r_lo > r_hi) throw Error("verify_nn_reduction needs lo <= hi");
    VerificationReport report;
    report.theorem = "nn-residue-reduction";
    report.lo = r_lo;
    report.hi = r_hi;
    report.epsilons = {-1, 1};

    const std::size_t n_ranks = static_cast<std::size_t>(r_hi - r_lo + 1);
    std::vector<detail::QuadCellResult> cells(2 * n_ranks);

    detail::run_cells(cells.size(), jobs, [&](std::size_t idx) {
        const int r = r_lo + static_cast<int>(idx / 2);
        const int epsilon = idx % 2 == 0 ? -1 : 1;
        detail::QuadCellResult& cell = cells[idx];
        const int t_num = r - 36;

        detail::quad_sweep_cell(
            r, epsilon, /*prune=*/true,
            [&](const std::array<int, 3>& widths,
                const std::array<const detail::ColumnChoices*, 3>& cols,
                const std::array<int, 3>& caps, const std::array<int, 3>&) {
                const auto acc =
                    detail::quad_sum_table(cols, caps, r, t_num / 3);
                bool survivor = false;
                for (int s = 1; !survivor && 3 * s <= t_num; ++s)
                    survivor = acc.contains(s);
                if (!survivor) return;

                const auto res1 = column_residue(r, widths[0]);
                const auto res2 = column_residue(r, widths[1]);
                SweepEntry entry;
                entry.rank = r;
                entry.epsilon = epsilon;
                entry.widths = widths;
                entry.note = "(n1,c1)=(" + std::to_string(res1.n) + "," +
                             std::to_string(res1.c) + ") (n2,c2)=(" +
                             std::to_string(res2.n) + "," +
                             std::to_string(res2.c) + ")";
                const bool pair_ok =
                    (res1.n == 2 && res2.n == 2) || (res1.n == 3 && res2.n == 3) ||
                    (res1.n == 2 && res2.n == 4) || (res1.n == 2 && res2.n == 3);
                const bool c_ok = std::abs(res1.c) <= res1.n &&
                                  std::abs(res2.c) <= res2.n;
                if (pair_ok && c_ok) {
                    cell.witnesses.push_back(std::move(entry));
                } else {
                    entry.note += " outside the reduced residue families";
                    cell.violations.push_back(std::move(entry));
                }
            });
    });

    for (auto& cell : cells) {
        report.witnesses.insert(report.witnesses.end(), cell.witnesses.begin(),
                                cell.witnesses.end());
        report.violations.insert(report.violations.end(),
                                 cell.violations.begin(), cell.violations.end());
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

/// Brute-force cross-check of the column calculus: the general-linear and
/// quadratic column floors with their minimizers, the negative-column
/// characterization, and the closed-form linear-correction sets against full
/// 2^n type enumeration.
inline VerificationReport verify_column_propositions(int r_max, int jobs = 0) {
    const auto start = std::chrono::steady_clock::now();
    if (r_max < 1) throw Error("verify_column_propositions requires r_max >= 1");
    VerificationReport report;
    report.theorem = "column-propositions";
    report.lo = 1;
    report.hi = r_max;

    std::vector<std::vector<SweepEntry>> cells(static_cast<std::size_t>(r_max));

    detail::run_cells(cells.size(), jobs, [&](std::size_t idx) {
        const int r = 1 + static_cast<int>(idx);
        auto& violations = cells[idx];
        auto fail = [&](int q, const std::string& note) {
            SweepEntry entry;
            entry.rank = r;
            entry.widths = {q, 0, 0};
            entry.note = note;
            violations.push_back(entry);
        };

        // Brute-force alternating-sum sets, one pass per partition of r.
        std::vector<Partition> all = enumerate_bounded(r, r);
        std::vector<std::vector<int>> alt_sets(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto& parts = all[i].parts();
            const std::size_t n = parts.size();
            std::set<int> sums;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                int alt_e = 0, alt_f = 0, sign_e = 1, sign_f = 1;
                for (std::size_t j = 0; j < n; ++j) {
                    if (mask & (std::uint64_t{1} << j)) {
                        alt_e += sign_e * parts[j];
                        sign_e = -sign_e;
                    } else {
                        alt_f += sign_f * parts[j];
                        sign_f = -sign_f;
                    }
                }
                sums.insert(alt_e + alt_f);
            }
            alt_sets[i].assign(sums.begin(), sums.end());
        }

        for (int q = 1; q <= r; ++q) {
            // Quadratic floor, its minimizers, and the negative-column rule,
            // by brute force over every bounded partition.
            int best = r * r;
            std::vector<Partition> best_set;
            std::vector<std::pair<Partition, int>> negatives;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (all[i].max_part() > q) continue;
                // brute dims over both epsilon: beta -+ each alternating sum
                const int beta = shape_box_dimension(q, all[i]);
                int local = r * r;
                for (int a : alt_sets[i]) {
                    const int l = q - a;
                    local = std::min({local, beta - l, beta + l});
                    for (int d : {beta - l, beta + l})
                        if (d < 0) negatives.emplace_back(all[i], d);
                }
                if (local < best) {
                    best = local;
                    best_set = {all[i]};
                } else if (local == best) {
                    best_set.push_back(all[i]);
                }
            }
            std::sort(best_set.begin(), best_set.end());
            const MinQuadColumn closed = min_quad_column(r, q);
            if (best != closed.value || best_set != closed.minimizers)
                fail(q, "quadratic column floor or minimizers disagree with "
                        "brute force");

            std::sort(negatives.begin(), negatives.end());
            negatives.erase(std::unique(negatives.begin(), negatives.end()),
                            negatives.end());
            const bool expect_negative = r % q == 0 && (r / q) % 2 == 0;
            std::vector<std::pair<Partition, int>> expected;
            if (expect_negative)
                expected.emplace_back(bounded_max_partition(r, q), -q);
            if (negatives != expected)
                fail(q, "negative column dimensions differ from the (q,...,q) "
                        "characterization");

            // Closed-form linear corrections against the 2^n enumeration.
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (all[i].max_part() > q) continue;
                std::vector<int> brute;
                brute.reserve(alt_sets[i].size());
                for (auto it = alt_sets[i].rbegin(); it != alt_sets[i].rend();
                     ++it)
                    brute.push_back(q - *it);
                for (int l : brute)
                    if (l < -q || l > q) {
                        fail(q, "linear correction outside [-q, q] for " +
                                    all[i].str());
                        break;
                    }
                if (brute != linear_correction_values(q, all[i]))
                    fail(q, "closed-form linear corrections disagree with type "
                            "enumeration for " +
                                all[i].str());
            }

            // General-linear floor against brute force.
            int gl_best = r * r;
            int gl_count = 0;
            Partition gl_partition;
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (all[i].max_part() > q) continue;
                const int d = gl_column_dimension(r, q, all[i]);
                if (d < gl_best) {
                    gl_best = d;
                    gl_count = 1;
                    gl_partition = all[i];
                } else if (d == gl_best) {
                    ++gl_count;
                }
            }
            const auto [gl_closed_partition, gl_closed_value] =
                min_gl_column(r, q);
            if (gl_best != gl_closed_value || gl_count != 1 ||
                gl_partition != gl_closed_partition)
                fail(q, "general-linear column floor disagrees with brute "
                        "force");
        }
    });

    for (auto& cell : cells)
        report.violations.insert(report.violations.end(), cell.begin(),
                                 cell.end());
    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

} // namespace charvar
