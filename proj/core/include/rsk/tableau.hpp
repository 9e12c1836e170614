#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsk/partition.hpp"
#include "rsk/permutation.hpp"
#include "rsk/sign.hpp"

namespace rsk {

// A Young tableau with distinct positive entries, rows and columns strictly
// increasing, and row lengths forming a partition. A *standard* tableau
// additionally has entries exactly {1,...,n}; row-insertion intermediates are
// the reason the weaker form exists as a value type.
class Tableau {
 public:
  Tableau() = default;

  // Validates shape, strict row/column increase and entry distinctness.
  explicit Tableau(std::vector<std::vector<int>> rows);

  // The unique tableau of the given shape with zero inversions: rows filled
  // with consecutive integers left to right, top to bottom.
  static Tableau superstandard(const Partition& shape);

  int size() const;  // total number of squares
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;

  // Entries are exactly {1,...,n}.
  bool is_standard() const;

  // Entries read row by row, top row first.
  std::vector<int> word() const;

  // word() as a Permutation. Requires a standard tableau.
  Permutation row_word() const;

  // Number of entry pairs (i, j) with j < i and j in a strictly lower row
  // than i. Coincides with the inversion count of word().
  long long inversions() const;

  // (-1)^inversions()
  Sign sign() const { return sign_of_parity(inversions()); }

  // Descents of a standard tableau: entries i such that i+1 lies in a
  // strictly lower row than i. Ascending order.
  std::vector<int> descents() const;

  // 1-based (row, column) of an entry, if present.
  std::optional<std::pair<int, int>> find(int entry) const;

  bool contains(int entry) const { return find(entry).has_value(); }

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

}  // namespace rsk
