#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rsk/sign.hpp"

namespace rsk {

// A permutation of {1,...,n} in one-line notation. Immutable once built; the
// constructor rejects anything that is not a rearrangement of 1..n. n = 0
// (the empty permutation) is legal.
//
// Positions and values are 1-based everywhere in the public interface.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `word` is a rearrangement of 1..word.size().
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  // Parses one-line notation, e.g. "2 9 1 5 6 4 8 3 7". Tokens may be
  // separated by spaces and/or commas. Throws ParseError with the 1-based
  // index of the offending token.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  // Value at 1-based position i.
  int value_at(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  Permutation inverse() const;
  bool is_involution() const;

  // Number of pairs i < j with word[i] > word[j].
  long long inversions() const;

  // (-1)^inversions()
  Sign sign() const { return sign_of_parity(inversions()); }

  // Ascending list of positions i in 1..n-1 with word[i] > word[i+1].
  std::vector<int> descent_set() const;

  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& pi);

// Calls fn for each permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Calls fn for each involution of S_n (permutations equal to their own
// inverse). Deterministic order.
void for_each_involution(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace rsk
