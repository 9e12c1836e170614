#pragma once

#include <utility>
#include <vector>

#include "rsk/pair.hpp"
#include "rsk/permutation.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

// Squares touched by one row insertion, top row first. The path visits
// consecutive rows; the last square is the one the insertion created.
struct InsertionTrace {
  std::vector<std::pair<int, int>> bump_path;  // 1-based (row, column)
  std::pair<int, int> final_square{0, 0};

  // 1-based index of the row in which the insertion stopped.
  int stop_row() const { return final_square.first; }
};

// Schensted row insertion: x enters row 1, replaces the smallest entry
// larger than itself and bumps it into the next row, or is appended when no
// larger entry exists. Throws ContractError if x already occurs in t.
std::pair<Tableau, InsertionTrace> row_insert(const Tableau& t, int x);

// Incremental row-insertion of a permutation, exposing the intermediate
// insertion/recording tableaux after each step.
class InsertionStepper {
 public:
  explicit InsertionStepper(Permutation pi);

  int step() const { return step_; }                  // insertions performed
  bool done() const { return step_ == pi_.size(); }

  // Inserts the next value of the word and records the created square.
  // Returns the trace of that insertion.
  InsertionTrace advance();

  Tableau insertion_tableau() const;  // P_i
  Tableau recording_tableau() const;  // Q_i

  // The finished pair; requires done().
  TableauPair result() const;

 private:
  Permutation pi_;
  int step_ = 0;
  std::vector<std::vector<int>> p_rows_;
  std::vector<std::vector<int>> q_rows_;
};

// The row-insertion correspondence: P accumulates the inserted values, Q
// records in which square step i ended. Bijective onto same-shape standard
// pairs.
TableauPair robinson_schensted(const Permutation& pi);

// Inverse correspondence: locates n, n-1, ..., 1 in Q and reverse-bumps the
// matching corner out of P, rebuilding the word from the right.
Permutation robinson_schensted_inverse(const TableauPair& pair);

}  // namespace rsk
