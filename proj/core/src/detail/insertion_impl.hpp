#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace rsk::detail {

// In-place Schensted row insertion on raw rows. Returns the 1-based
// (row, column) squares where a value landed, top row first; the last one is
// the square the insertion created. Assumes x is distinct from all entries.
inline std::vector<std::pair<int, int>> raw_row_insert(
    std::vector<std::vector<int>>& rows, int x) {
  std::vector<std::pair<int, int>> path;
  size_t r = 0;
  for (;;) {
    if (r == rows.size()) {
      rows.push_back({x});
      path.emplace_back(static_cast<int>(r) + 1, 1);
      return path;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      path.emplace_back(static_cast<int>(r) + 1, static_cast<int>(row.size()));
      return path;
    }
    path.emplace_back(static_cast<int>(r) + 1,
                      static_cast<int>(it - row.begin()) + 1);
    std::swap(*it, x);  // x takes the square, the old entry bumps down
    ++r;
  }
}

}  // namespace rsk::detail
