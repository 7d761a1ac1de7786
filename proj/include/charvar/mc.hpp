#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charvar/partition.hpp"
#include "charvar/rational.hpp"

namespace charvar {

/// Element of Q/Z: the exponent of a finite-order monodromy scalar, stored
/// in [0, 1) and in lowest terms. Addition is the group law.
struct Exponent {
    Rational value;

    Exponent() = default;
    explicit Exponent(Rational v) : value(v.mod1()) {}

    static Exponent parse(const std::string& text) {
        return Exponent(Rational::parse(text));
    }

    bool is_zero() const { return value.num == 0; }
    std::string str() const { return value.str(); }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        return Exponent(a.value + b.value);
    }
    friend Exponent operator-(const Exponent& a) {
        return Exponent(-a.value);
    }
    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend bool operator<(const Exponent& a, const Exponent& b) {
        return a.value < b.value;
    }
};

/// One eigenvalue and the dual of its Jordan-block partition. A semisimple
/// eigenvalue of multiplicity m carries the single part (m).
struct EigenBlock {
    Exponent eigenvalue;
    Partition dual_parts;
};

/// Local monodromy data at k >= 3 points; at every point the dual parts
/// across all blocks sum to the rank.
struct MonodromyTuple {
    int rank = 0;
    std::vector<std::vector<EigenBlock>> points;

    static MonodromyTuple make(int rank,
                               std::vector<std::vector<EigenBlock>> points) {
        MonodromyTuple t{rank, std::move(points)};
        t.normalize();
        t.validate();
        return t;
    }

    void normalize() {
        for (auto& point : points)
            std::sort(point.begin(), point.end(),
                      [](const EigenBlock& a, const EigenBlock& b) {
                          return a.eigenvalue < b.eigenvalue;
                      });
    }

    void validate() const {
        if (rank < 1) throw Error("rank must be >= 1");
        if (points.size() < 3) throw Error("a tuple needs at least 3 points");
        for (const auto& point : points) {
            int total = 0;
            for (std::size_t i = 0; i < point.size(); ++i) {
                if (point[i].dual_parts.empty())
                    throw Error("eigenvalue block with no parts");
                if (i > 0 && point[i - 1].eigenvalue == point[i].eigenvalue)
                    throw Error("duplicate eigenvalue at a point");
                total += point[i].dual_parts.weight();
            }
            if (total != rank)
                throw WeightMismatch("point multiplicities sum to " +
                                     std::to_string(total) + ", expected rank " +
                                     std::to_string(rank));
        }
    }

    std::size_t arity() const { return points.size(); }

    /// Largest dual part at each point and the eigenvalue carrying it
    /// (smallest eigenvalue wins a tie).
    std::pair<int, Exponent> top_of_point(std::size_t i) const {
        int best = 0;
        Exponent who;
        for (const auto& block : points[i]) {
            if (block.dual_parts.max_part() > best) {
                best = block.dual_parts.max_part();
                who = block.eigenvalue;
            }
        }
        return {best, who};
    }
};

/// Rank-1 convolution kernel: horizontal, vertical, and diagonal monodromy
/// exponents tied by the two product relations; betaU is derived.
struct ConvolutionKernel {
    std::vector<Exponent> betaH;
    std::vector<Exponent> betaV;
    Exponent betaT;

    static ConvolutionKernel make(std::vector<Exponent> betaH,
                                  std::vector<Exponent> betaV, Exponent betaT) {
        ConvolutionKernel k{std::move(betaH), std::move(betaV), betaT};
        k.validate();
        return k;
    }

    void validate() const {
        if (betaH.size() != betaV.size())
            throw ArityMismatch("betaH and betaV lengths differ");
        if (betaT.is_zero())
            throw DegenerateKernel("betaT must be nonzero");
        Exponent h = betaT, v = betaT;
        for (const auto& e : betaH) h = h + e;
        for (const auto& e : betaV) v = v + e;
        if (!h.is_zero() || !v.is_zero())
            throw Error("kernel exponents violate the product relations");
    }

    std::size_t arity() const { return betaH.size(); }
};

inline std::vector<Exponent> derive_betaU(const ConvolutionKernel& kernel) {
    std::vector<Exponent> out;
    out.reserve(kernel.arity());
    for (std::size_t i = 0; i < kernel.arity(); ++i)
        out.push_back(kernel.betaH[i] + kernel.betaV[i] + kernel.betaT);
    return out;
}

/// Locates the distinguished part for alpha at a point: the largest dual
/// part of the matching eigenvalue, lowest index among ties. Parts are
/// stored descending, so a hit is always (block, 0).
inline std::optional<std::pair<std::size_t, std::size_t>> distinguished_part(
    const std::vector<EigenBlock>& point, const Exponent& alpha) {
    for (std::size_t b = 0; b < point.size(); ++b)
        if (point[b].eigenvalue == alpha) return std::make_pair(b, std::size_t{0});
    return std::nullopt;
}

inline int point_delta(const std::vector<EigenBlock>& point,
                       const Exponent& alpha) {
    const auto hit = distinguished_part(point, alpha);
    if (!hit) return 0;
    return point[hit->first].dual_parts.parts()[hit->second];
}

/// (k-2)*r minus the distinguished part sizes (0 where alpha misses). The
/// (k-2)*r form is the one that keeps per-point totals balanced for any
/// arity; at three points it coincides with r - sum of the sizes.
inline int mc_delta(const MonodromyTuple& tuple,
                    const ConvolutionKernel& kernel) {
    if (tuple.arity() != kernel.arity())
        throw ArityMismatch("tuple has " + std::to_string(tuple.arity()) +
                            " points, kernel " + std::to_string(kernel.arity()));
    const int k = static_cast<int>(tuple.arity());
    int sum = 0;
    for (std::size_t i = 0; i < tuple.arity(); ++i)
        sum += point_delta(tuple.points[i], -kernel.betaH[i]);
    return (k - 2) * tuple.rank - sum;
}

/// One middle convolution step. The rank moves to r + delta; at each point
/// the distinguished part is resized by delta and reattached at betaV_i,
/// every other block is relabeled by betaU_i with parts unchanged, and a
/// missing distinguished eigenvalue spawns a fresh block of size delta when
/// delta > 0. Relabeled eigenvalues must stay distinct; merges are refused.
inline MonodromyTuple mc_step(const MonodromyTuple& tuple,
                              const ConvolutionKernel& kernel) {
    if (kernel.betaT.is_zero()) throw DegenerateKernel("betaT must be nonzero");
    const int delta = mc_delta(tuple, kernel);
    const int new_rank = tuple.rank + delta;
    if (new_rank < 1)
        throw InvalidConvolution("rank would drop to " + std::to_string(new_rank));
    const auto betaU = derive_betaU(kernel);

    std::vector<std::vector<EigenBlock>> new_points;
    new_points.reserve(tuple.arity());
    for (std::size_t i = 0; i < tuple.arity(); ++i) {
        const Exponent alpha = -kernel.betaH[i];
        const auto hit = distinguished_part(tuple.points[i], alpha);
        if (!hit && delta < 0)
            throw InvalidConvolution(
                "distinguished eigenvalue missing at point " + std::to_string(i) +
                " while the rank shrinks");

        std::map<Exponent, std::vector<int>> blocks;
        auto add_part = [&](const Exponent& eig, int part) {
            blocks[eig].push_back(part);
        };
        auto add_block = [&](const Exponent& eig, const std::vector<int>& parts) {
            if (blocks.count(eig))
                throw EigenvalueCollision("two blocks map to eigenvalue " +
                                          eig.str() + " at point " +
                                          std::to_string(i));
            blocks[eig] = parts;
        };

        for (std::size_t b = 0; b < tuple.points[i].size(); ++b) {
            const EigenBlock& block = tuple.points[i][b];
            std::vector<int> parts = block.dual_parts.parts();
            if (hit && b == hit->first) {
                const int resized = parts.front() + delta;
                if (resized < 0)
                    throw NegativePart("distinguished part at point " +
                                       std::to_string(i) +
                                       " would become negative");
                parts.erase(parts.begin());
                if (!parts.empty()) add_block(block.eigenvalue + betaU[i], parts);
                if (resized > 0) {
                    if (blocks.count(kernel.betaV[i]))
                        throw EigenvalueCollision(
                            "distinguished part collides at eigenvalue " +
                            kernel.betaV[i].str() + " at point " +
                            std::to_string(i));
                    add_part(kernel.betaV[i], resized);
                }
            } else {
                add_block(block.eigenvalue + betaU[i], parts);
            }
        }
        if (!hit && delta > 0) {
            if (blocks.count(kernel.betaV[i]))
                throw EigenvalueCollision("new block collides at eigenvalue " +
                                          kernel.betaV[i].str() + " at point " +
                                          std::to_string(i));
            add_part(kernel.betaV[i], delta);
        }

        std::vector<EigenBlock> point;
        int total = 0;
        for (auto& [eig, parts] : blocks) {
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            total += std::accumulate(parts.begin(), parts.end(), 0);
            point.push_back(EigenBlock{eig, Partition(std::move(parts))});
        }
        if (total != new_rank)
            throw InvalidConvolution("point " + std::to_string(i) +
                                     " multiplicities sum to " +
                                     std::to_string(total) + ", expected " +
                                     std::to_string(new_rank));
        new_points.push_back(std::move(point));
    }
    return MonodromyTuple::make(new_rank, std::move(new_points));
}

/// Canonical kernel for the reduction loop: betaH_i cancels the eigenvalue
/// carrying the largest multiplicity at point i, betaT closes the product
/// relation, and betaV puts the whole vertical correction at point 0 so
/// traces are reproducible.
inline ConvolutionKernel default_kernel(const MonodromyTuple& tuple) {
    std::vector<Exponent> betaH;
    Exponent sum;
    for (std::size_t i = 0; i < tuple.arity(); ++i) {
        const Exponent top = tuple.top_of_point(i).second;
        betaH.push_back(-top);
        sum = sum + top;
    }
    const Exponent betaT = sum; // -(sum of betaH)
    if (betaT.is_zero())
        throw DegenerateKernel(
            "product of distinguished eigenvalues is trivial; no canonical "
            "rank-1 kernel exists");
    std::vector<Exponent> betaV(tuple.arity());
    betaV[0] = -betaT;
    return ConvolutionKernel::make(std::move(betaH), std::move(betaV), betaT);
}

struct ReductionStep {
    ConvolutionKernel kernel;
    int delta = 0;
    std::vector<int> point_deltas;
    int rank_before = 0;
    int rank_after = 0;
};

struct ReductionResult {
    MonodromyTuple terminal;
    std::vector<ReductionStep> trace;

    int initial_defect = 0;
};

inline int tuple_defect(const MonodromyTuple& tuple) {
    std::vector<int> tops;
    for (std::size_t i = 0; i < tuple.arity(); ++i)
        tops.push_back(tuple.top_of_point(i).first);
    const int k = static_cast<int>(tuple.arity());
    int sum = 0;
    for (int t : tops) sum += t;
    return (k - 2) * tuple.rank - sum;
}

/// Katz reduction: convolve away the highest-multiplicity eigenvalues until
/// the defect is nonnegative or the rank reaches 1, the terminal rank of the
/// descent. The rank strictly decreases at every step, so the loop
/// terminates.
inline ReductionResult katz_reduce(MonodromyTuple tuple) {
    if (tuple.arity() != 3)
        throw ArityMismatch("katz_reduce handles exactly 3 points");
    ReductionResult result{std::move(tuple), {}, 0};
    result.initial_defect = tuple_defect(result.terminal);
    while (true) {
        if (result.terminal.rank <= 1) break;
        const int defect_now = tuple_defect(result.terminal);
        if (defect_now >= 0) break;
        ConvolutionKernel kernel;
        try {
            kernel = default_kernel(result.terminal);
        } catch (const DegenerateKernel& e) {
            throw DegenerateKernel(std::string(e.what()) + " (at step " +
                                   std::to_string(result.trace.size()) + ")");
        }
        ReductionStep step;
        step.kernel = kernel;
        step.rank_before = result.terminal.rank;
        step.delta = mc_delta(result.terminal, kernel);
        for (std::size_t i = 0; i < 3; ++i)
            step.point_deltas.push_back(
                point_delta(result.terminal.points[i], -kernel.betaH[i]));
        result.terminal = mc_step(result.terminal, kernel);
        step.rank_after = result.terminal.rank;
        result.trace.push_back(std::move(step));
    }
    return result;
}

} // namespace charvar
