#include "rsk/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>

#include "rsk/errors.hpp"

namespace rsk {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  size_t total = 0;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw ContractError("tableau rows must be non-empty");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw ContractError("tableau row lengths must weakly decrease");
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw ContractError("tableau entries must be positive");
      if (c > 0 && row[c] <= row[c - 1]) {
        throw ContractError("tableau rows must strictly increase");
      }
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw ContractError("tableau columns must strictly increase");
      }
    }
    total += row.size();
  }
  // Distinctness across rows. Row/column increase alone does not give it.
  std::vector<int> all;
  all.reserve(total);
  for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ContractError("tableau entries must be distinct");
  }
}

Tableau Tableau::superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<size_t>(shape.row_count()));
  int next = 1;
  for (int part : shape.parts()) {
    std::vector<int> row(static_cast<size_t>(part));
    for (int& v : row) v = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

int Tableau::size() const {
  size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return static_cast<int>(total);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v > n) return false;
      seen[static_cast<size_t>(v)] = true;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<size_t>(v)]) return false;
  }
  return true;
}

std::vector<int> Tableau::word() const {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(size()));
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

Permutation Tableau::row_word() const {
  if (!is_standard()) {
    throw ContractError("row_word requires a standard tableau");
  }
  return Permutation(word());
}

long long Tableau::inversions() const {
  // Pairs of entries (i, j), j < i, with j strictly below i. Row order in
  // the row word matches row order in the diagram, so this equals the
  // inversion count of word().
  std::unordered_map<int, int> row_index;
  row_index.reserve(static_cast<size_t>(size()));
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (int v : rows_[r]) row_index[v] = static_cast<int>(r);
  }
  long long count = 0;
  for (const auto& [i, ri] : row_index) {
    for (const auto& [j, rj] : row_index) {
      if (j < i && rj > ri) ++count;
    }
  }
  return count;
}

std::vector<int> Tableau::descents() const {
  if (!is_standard()) {
    throw ContractError("descents require a standard tableau");
  }
  const int n = size();
  std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (int v : rows_[r]) row_of[static_cast<size_t>(v)] = static_cast<int>(r);
  }
  std::vector<int> result;
  for (int i = 1; i < n; ++i) {
    if (row_of[static_cast<size_t>(i) + 1] > row_of[static_cast<size_t>(i)]) {
      result.push_back(i);
    }
  }
  return result;
}

std::optional<std::pair<int, int>> Tableau::find(int entry) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), entry);
    if (it != row.end() && *it == entry) {
      return std::make_pair(static_cast<int>(r) + 1,
                            static_cast<int>(it - row.begin()) + 1);
    }
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
  for (size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) os << '\n';
    const auto& row = t.rows()[r];
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      os << row[c];
    }
  }
  return os;
}

}  // namespace rsk
