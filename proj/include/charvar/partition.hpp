#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

/// Weakly decreasing positive integers. The empty partition has weight 0.
/// Trailing zeros are never stored, so equality is structural.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        validate();
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    std::size_t count() const { return parts_.size(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw Error("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw Error("partition parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
    int weight_ = 0;
};

/// The dominance-maximal partition of r with parts <= q: (q,...,q,k).
inline Partition bounded_max_partition(int r, int q) {
    if (r < 0 || q < 1) throw Error("bounded_max_partition requires r >= 0, q >= 1");
    std::vector<int> parts(static_cast<std::size_t>(r / q), q);
    if (r % q != 0) parts.push_back(r % q);
    return Partition(std::move(parts));
}

/// Streams every partition of r with parts <= q in descending lexicographic
/// order, so the first item is (q,...,q,k).
template <class F>
void for_each_bounded(int r, int q, F&& fn) {
    if (r < 0 || q < 1) throw Error("for_each_bounded requires r >= 0, q >= 1");
    std::vector<int> scratch;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            fn(Partition(scratch));
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            scratch.push_back(p);
            self(self, remaining - p, p);
            scratch.pop_back();
        }
    };
    rec(rec, r, q);
}

inline std::vector<Partition> enumerate_bounded(int r, int q) {
    std::vector<Partition> out;
    for_each_bounded(r, q, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Dominance order: every prefix sum of lhs is >= the matching prefix sum of
/// rhs, padding with zeros. Reflexive.
inline bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw WeightMismatch("dominance comparison requires equal weights (" +
                             std::to_string(lhs.weight()) + " vs " +
                             std::to_string(rhs.weight()) + ")");
    long lsum = 0, rsum = 0;
    const std::size_t n = std::max(lhs.count(), rhs.count());
    for (std::size_t i = 0; i < n; ++i) {
        lsum += i < lhs.count() ? lhs.parts()[i] : 0;
        rsum += i < rhs.count() ? rhs.parts()[i] : 0;
        if (lsum < rsum) return false;
    }
    return true;
}

inline bool strictly_dominates(const Partition& lhs, const Partition& rhs) {
    return lhs != rhs && dominates(lhs, rhs);
}

/// Distinct partitions reachable by one Young-diagram move: either move a
/// block from row j down to a strictly smaller row k (needs parts[j] -
/// parts[k] >= 2), or split a block off into a new row of size 1 (needs
/// parts[j] >= 2). Results that are not weakly decreasing are not moves.
inline std::set<Partition> lower_neighbors(const Partition& p) {
    if (p.empty()) throw Error("lower_neighbors of the empty partition");
    std::set<Partition> out;
    const auto& parts = p.parts();
    const std::size_t n = parts.size();
    auto push_if_sorted = [&](std::vector<int> cand) {
        if (std::is_sorted(cand.begin(), cand.end(), std::greater<int>()))
            out.insert(Partition(std::move(cand)));
    };
    for (std::size_t j = 0; j < n; ++j) {
        if (parts[j] < 2) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
            if (parts[j] - parts[k] < 2) continue;
            std::vector<int> cand = parts;
            --cand[j];
            ++cand[k];
            push_if_sorted(std::move(cand));
        }
        std::vector<int> cand = parts;
        --cand[j];
        cand.push_back(1);
        push_if_sorted(std::move(cand));
    }
    return out;
}

} // namespace charvar
