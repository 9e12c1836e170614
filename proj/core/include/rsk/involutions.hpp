#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rsk/partition.hpp"
#include "rsk/permutation.hpp"
#include "rsk/sign.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

// One cycle of an involution: a fixed point (a) or a transposition (a,b)
// with a < b.
struct Cycle {
  int low = 0;
  int high = 0;  // == low for a fixed point

  bool is_fixed_point() const { return low == high; }
  int greatest() const { return high; }

  bool operator==(const Cycle&) const = default;
};

// Disjoint-cycle form of an involution, cycles ordered by increasing
// greatest element. Every element 1..n appears in exactly one cycle.
class CycleDecomposition {
 public:
  CycleDecomposition() = default;

  // Throws ContractError if pi is not an involution.
  static CycleDecomposition of(const Permutation& pi);

  // Parses "(1,4)(6)(3,7)(2,8)(5,9)": parenthesized groups, a comma inside
  // pairs, nothing between groups. Every element 1..max must appear exactly
  // once. Throws ParseError.
  static CycleDecomposition parse(std::string_view text);

  const std::vector<Cycle>& cycles() const { return cycles_; }
  int element_count() const { return n_; }
  int pair_count() const;
  int fixed_point_count() const;

  Permutation to_permutation() const;

  // "(1,4)(6)(3,7)(2,8)(5,9)"; "" for n = 0.
  std::string str() const;

 private:
  std::vector<Cycle> cycles_;
  int n_ = 0;
};

// Builds the tableau paired with an involution directly from its cycles
// (Beissinger's construction). A fixed point a goes to the end of row 1; for
// a pair (a,b), a is row-inserted and b is placed at the end of the row
// below the one where the insertion stopped. Equals the insertion tableau of
// pi. Throws ContractError if pi is not an involution.
Tableau beissinger_build(const Permutation& pi);

// Snapshot of the construction after each cycle is processed; the last entry
// equals beissinger_build(pi).
std::vector<Tableau> beissinger_steps(const Permutation& pi);

// (-1)^even_row_total: the sign of any involution whose tableau has this
// shape. Every pair cycle contributes exactly one square to an even-indexed
// row, which is why the shape alone determines the sign.
Sign sign_from_shape(const Partition& shape);

}  // namespace rsk
