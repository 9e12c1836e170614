#pragma once

#include <compare>

#include "rsk/sign.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

// A pair (P, Q) of standard tableaux of the same shape: the image of a
// permutation under the row-insertion correspondence. P is the insertion
// tableau, Q the recording tableau.
class TableauPair {
 public:
  TableauPair() = default;

  // Validates that both tableaux are standard and of equal shape.
  TableauPair(Tableau p, Tableau q);

  const Tableau& p() const { return p_; }
  const Tableau& q() const { return q_; }
  Partition shape() const { return p_.shape(); }

  bool operator==(const TableauPair&) const = default;
  auto operator<=>(const TableauPair&) const = default;

 private:
  Tableau p_;
  Tableau q_;
};

// sign(P) * sign(Q) * (-1)^e, where e is the total length of the
// even-indexed rows of the common shape. Equal to the sign of the
// permutation the pair corresponds to.
Sign sign_from_tableaux(const TableauPair& pair);

// Sum of all second-row entries of P and Q. Only defined when both tableaux
// have at most two rows (the image of a 321-avoiding permutation); throws
// ContractError otherwise. The sum is congruent mod 2 to inv(P) + inv(Q).
long long second_row_sum(const TableauPair& pair);

// The mod-2 congruence itself: second_row_sum == inv(P) + inv(Q) (mod 2).
bool second_row_parity_matches(const TableauPair& pair);

}  // namespace rsk
