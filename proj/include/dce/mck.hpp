#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dce/common.hpp"

namespace dce {

struct MckItem {
    std::int64_t weight = 0;
    std::int64_t profit = 0;
};

struct MckInstance {
    std::vector<std::vector<MckItem>> groups;
    std::int64_t capacity = 0;  // W
    std::int64_t target = 0;    // P
};

struct MckSolution {
    /// One item index per group.
    std::vector<std::size_t> selection;
    std::int64_t weight = 0;
    std::int64_t profit = 0;
};

/// Pick exactly one item per group with total weight <= W maximising profit.
/// Returns the selection when that profit reaches P. O(W * total items).
inline std::optional<MckSolution> solve_mck(const MckInstance& m) {
    if (m.capacity < 0) return std::nullopt;
    const auto W = std::size_t(m.capacity);
    constexpr std::int64_t none = std::numeric_limits<std::int64_t>::min();
    // best[w] = max profit over the groups so far with weight exactly w.
    std::vector<std::int64_t> best(W + 1, none), next(W + 1);
    best[0] = 0;
    // choice[g][w] = item chosen in group g to reach weight w.
    std::vector<std::vector<std::int32_t>> choice(m.groups.size(), std::vector<std::int32_t>(W + 1, -1));
    for (std::size_t g = 0; g < m.groups.size(); ++g) {
        const auto& items = m.groups[g];
        if (items.empty()) throw Error(ErrorCode::InvalidInstance, "empty MCK group");
        std::fill(next.begin(), next.end(), none);
        for (std::size_t j = 0; j < items.size(); ++j) {
            const auto& it = items[j];
            if (it.weight < 0) throw Error(ErrorCode::InvalidInstance, "negative MCK weight");
            if (std::uint64_t(it.weight) > W) continue;
            const auto wi = std::size_t(it.weight);
            for (std::size_t w = wi; w <= W; ++w) {
                if (best[w - wi] == none) continue;
                const std::int64_t p = best[w - wi] + it.profit;
                if (p > next[w]) {
                    next[w] = p;
                    choice[g][w] = std::int32_t(j);
                }
            }
        }
        best.swap(next);
    }
    std::size_t at = 0;
    for (std::size_t w = 1; w <= W; ++w)
        if (best[w] > best[at]) at = w;
    if (best[at] == none || best[at] < m.target) return std::nullopt;
    MckSolution s;
    s.selection.resize(m.groups.size());
    s.profit = best[at];
    std::size_t w = at;
    for (std::size_t g = m.groups.size(); g-- > 0;) {
        const auto j = std::size_t(choice[g][w]);
        s.selection[g] = j;
        w -= std::size_t(m.groups[g][j].weight);
        s.weight += m.groups[g][j].weight;
    }
    return s;
}

}  // namespace dce
