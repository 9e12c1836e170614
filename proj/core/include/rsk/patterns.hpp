#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rsk/permutation.hpp"
#include "rsk/polynomial.hpp"

namespace rsk {

// A pattern is itself a (short) permutation; pi contains tau when some
// subsequence of pi is order-isomorphic to tau.
using Pattern = Permutation;

bool contains_pattern(const Permutation& pi, const Pattern& tau);
bool avoids_all(const Permutation& pi, std::span<const Pattern> patterns);

// Parses a comma list of patterns in compact digit form, e.g. "213,231".
std::vector<Pattern> parse_pattern_list(std::string_view text);

// Lazy lexicographic enumeration of the permutations of S_n avoiding every
// given pattern.
class AvoiderStream {
 public:
  AvoiderStream(int n, std::vector<Pattern> patterns);

  std::optional<Permutation> next();

 private:
  std::vector<Pattern> patterns_;
  std::vector<int> word_;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<Permutation> enumerate_avoiders(int n, std::vector<Pattern> patterns);

// If the insertion tableau of pi is a hook (k, 1^(n-k)) whose row word is
// the identity, returns k; otherwise nullopt. Exactly the permutations
// avoiding both 213 and 231 pass, with k the longest-increasing-subsequence
// length. The empty permutation yields k = 0.
std::optional<int> hook_identity_form(const Permutation& pi);

// Checks the equivalent descent characterization directly on the word: with
// d = n - k descents, the letters at descent positions read n, n-1, ..., k+1
// and the remaining letters read 1, 2, ..., k. Requires 1 <= k <= n.
bool descent_structure_check(const Permutation& pi, int k);

// Length of the longest increasing subsequence, computed as the first-row
// length of the insertion tableau.
int lis_length(const Permutation& pi);

// Closed form q (q+1)^floor((n-1)/2) (q-1)^floor(n/2): the generating
// function, over {213,231}-avoiders of S_n, of sign weighted by q^lis.
// Requires n >= 1.
IntPolynomial signed_lis_polynomial(int n);

}  // namespace rsk
