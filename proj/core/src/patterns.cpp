#include "rsk/patterns.hpp"

#include <algorithm>

#include "rsk/errors.hpp"
#include "rsk/rsk.hpp"
#include "detail/tokens.hpp"

namespace rsk {

namespace {

// Extends a partial choice of positions; chosen values must relate to each
// other exactly as the pattern letters do.
bool match_from(const std::vector<int>& word, const std::vector<int>& pattern,
                std::vector<int>& chosen, size_t next_pos) {
  const size_t k = chosen.size();
  if (k == pattern.size()) return true;
  for (size_t pos = next_pos; pos + (pattern.size() - k) <= word.size(); ++pos) {
    bool consistent = true;
    for (size_t j = 0; j < k; ++j) {
      if ((chosen[j] < word[pos]) != (pattern[j] < pattern[k])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen.push_back(word[pos]);
    if (match_from(word, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& pi, const Pattern& tau) {
  if (tau.size() == 0) return true;
  if (tau.size() > pi.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(tau.size()));
  return match_from(pi.word(), tau.word(), chosen, 0);
}

bool avoids_all(const Permutation& pi, std::span<const Pattern> patterns) {
  for (const Pattern& tau : patterns) {
    if (contains_pattern(pi, tau)) return false;
  }
  return true;
}

std::vector<Pattern> parse_pattern_list(std::string_view text) {
  std::vector<Pattern> patterns;
  for (size_t i = 0; const auto& tok : detail::split_tokens(text)) {
    ++i;
    std::vector<int> word;
    word.reserve(tok.size());
    for (char c : tok) {
      if (c < '1' || c > '9') {
        throw ParseError("pattern '" + tok + "' must be digits 1-9",
                         static_cast<int>(i));
      }
      word.push_back(c - '0');
    }
    try {
      patterns.push_back(Pattern(std::move(word)));
    } catch (const ContractError& e) {
      throw ParseError("pattern '" + tok + "': " + e.what(), static_cast<int>(i));
    }
  }
  return patterns;
}

AvoiderStream::AvoiderStream(int n, std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)), word_(static_cast<size_t>(n)) {
  if (n < 1) throw ContractError("n must be positive");
  for (int i = 0; i < n; ++i) word_[static_cast<size_t>(i)] = i + 1;
}

std::optional<Permutation> AvoiderStream::next() {
  if (exhausted_) return std::nullopt;
  for (;;) {
    if (started_) {
      if (!std::next_permutation(word_.begin(), word_.end())) {
        exhausted_ = true;
        return std::nullopt;
      }
    }
    started_ = true;
    Permutation candidate(word_);
    if (avoids_all(candidate, patterns_)) return candidate;
  }
}

std::vector<Permutation> enumerate_avoiders(int n, std::vector<Pattern> patterns) {
  AvoiderStream stream(n, std::move(patterns));
  std::vector<Permutation> out;
  while (auto pi = stream.next()) out.push_back(std::move(*pi));
  return out;
}

std::optional<int> hook_identity_form(const Permutation& pi) {
  const Tableau p = robinson_schensted(pi).p();
  const auto& parts = p.shape().parts();
  if (parts.empty()) return 0;  // the empty permutation
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] != 1) return std::nullopt;
  }
  if (p.row_word() != Permutation::identity(pi.size())) return std::nullopt;
  return parts[0];
}

bool descent_structure_check(const Permutation& pi, int k) {
  const int n = pi.size();
  if (k < 1 || k > n) throw ContractError("requires 1 <= k <= n");
  const std::vector<int> descents = pi.descent_set();
  if (static_cast<int>(descents.size()) != n - k) return false;
  std::vector<bool> is_descent(static_cast<size_t>(n) + 1, false);
  for (int d : descents) is_descent[static_cast<size_t>(d)] = true;
  int expected_top = n;     // descent letters must read n, n-1, ..., k+1
  int expected_rest = 1;    // the others must read 1, 2, ..., k
  for (int i = 1; i <= n; ++i) {
    if (is_descent[static_cast<size_t>(i)]) {
      if (pi.value_at(i) != expected_top--) return false;
    } else {
      if (pi.value_at(i) != expected_rest++) return false;
    }
  }
  return true;
}

int lis_length(const Permutation& pi) {
  if (pi.size() == 0) return 0;
  return robinson_schensted(pi).shape().part(1);
}

IntPolynomial signed_lis_polynomial(int n) {
  if (n < 1) throw ContractError("n must be positive");
  const IntPolynomial q = IntPolynomial::monomial(1, 1);
  const IntPolynomial q_plus_1 = IntPolynomial({1, 1});
  const IntPolynomial q_minus_1 = IntPolynomial({-1, 1});
  IntPolynomial result = q;
  for (int i = 0; i < (n - 1) / 2; ++i) result = result * q_plus_1;
  for (int i = 0; i < n / 2; ++i) result = result * q_minus_1;
  return result;
}

}  // namespace rsk
