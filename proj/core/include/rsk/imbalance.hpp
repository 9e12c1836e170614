#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsk/partition.hpp"
#include "rsk/polynomial.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Lazy enumeration of the standard tableaux of a shape, by backtracking
// placement of 1..n into feasible row ends. Each tableau is produced exactly
// once, in a fixed order (smaller row index preferred at each entry).
// Single-consumer; distinct streams are independent.
class SytStream {
 public:
  explicit SytStream(Partition shape);

  // Next tableau, or nullopt when exhausted.
  std::optional<Tableau> next();

 private:
  bool place_from(int entry);

  Partition shape_;
  int n_ = 0;
  std::vector<int> row_of_;  // row_of_[k] = 0-based row of entry k+1
  std::vector<int> fill_;    // squares filled per row
  bool started_ = false;
  bool exhausted_ = false;
};

// I(q) = sum over standard tableaux T of the shape of q^inv(T), together
// with its two standard evaluations.
struct ImbalanceRecord {
  Partition shape;
  IntPolynomial polynomial;
  std::int64_t imbalance = 0;      // polynomial at q = -1
  std::int64_t tableau_count = 0;  // polynomial at q = +1
};

ImbalanceRecord imbalance_record(const Partition& shape);

// Closed form for the imbalance of the hook (k, 1^(n-k)): zero when n is odd
// and k even, and binomial(h(n), h(k)) with h(x) = floor((x-1)/2) otherwise.
// Requires 1 <= k <= n.
std::int64_t hook_imbalance(int n, int k);

// sum over partitions of n of (-1)^even_row_total * imbalance^2. Zero for
// every n >= 2; for n = 1 the single partition contributes 1, and the raw
// value is returned so callers own the assertion.
std::int64_t signed_imbalance_square_sum(int n);

}  // namespace rsk
