#pragma once

#include <optional>
#include <vector>

namespace arcfix {

/// Orders columns 0..columns-1 so that every set is a contiguous run.
std::optional<std::vector<int>> consecutive_ones_order(int columns, const std::vector<std::vector<int>>& sets);

/// Same, but runs may wrap around the end of the order.
std::optional<std::vector<int>> circular_ones_order(int columns, const std::vector<std::vector<int>>& sets);

bool is_consecutive(const std::vector<int>& order, const std::vector<int>& set, bool circular);

}  // namespace arcfix
