#include "rsk/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rsk/errors.hpp"
#include "detail/tokens.hpp"

namespace rsk {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n) {
      throw ContractError("word is not a permutation: value " +
                          std::to_string(v) + " out of range 1.." +
                          std::to_string(n));
    }
    if (seen[static_cast<size_t>(v)]) {
      throw ContractError("word is not a permutation: duplicate value " +
                          std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  Permutation result;
  result.word_ = std::move(word);
  return result;
}

Permutation Permutation::parse(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  const int n = static_cast<int>(tokens.size());
  std::vector<int> word;
  word.reserve(tokens.size());
  for (int i = 0; i < n; ++i) {
    const auto& tok = tokens[static_cast<size_t>(i)];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("token " + std::to_string(i + 1) + " ('" + tok +
                           "') is not an integer",
                       i + 1);
    }
    word.push_back(value);
  }
  // Report range/duplicate problems with the offending token position.
  std::vector<int> first_pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int v = word[static_cast<size_t>(i)];
    if (v < 1 || v > n) {
      throw ParseError("token " + std::to_string(i + 1) + " ('" +
                           std::to_string(v) + "') out of range 1.." +
                           std::to_string(n),
                       i + 1);
    }
    if (first_pos[static_cast<size_t>(v)] != 0) {
      throw ParseError("token " + std::to_string(i + 1) + " duplicates value " +
                           std::to_string(v),
                       i + 1);
    }
    first_pos[static_cast<size_t>(v)] = i + 1;
  }
  Permutation result;
  result.word_ = std::move(word);
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<size_t>(value_at(i)) - 1] = i;
  }
  Permutation result;
  result.word_ = std::move(inv);
  return result;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if (value_at(value_at(i)) != i) return false;
  }
  return true;
}

long long Permutation::inversions() const {
  long long count = 0;
  const size_t n = word_.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (word_[i] > word_[j]) ++count;
    }
  }
  return count;
}

std::vector<int> Permutation::descent_set() const {
  std::vector<int> descents;
  for (int i = 1; i < size(); ++i) {
    if (value_at(i) > value_at(i + 1)) descents.push_back(i);
  }
  return descents;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) os << ' ';
    os << word_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  return os << pi.str();
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

namespace {

void involutions_rec(std::vector<int>& word, std::vector<bool>& used,
                     const std::function<void(const Permutation&)>& fn) {
  const int n = static_cast<int>(word.size());
  int a = 0;
  for (int i = 1; i <= n; ++i) {
    if (!used[static_cast<size_t>(i)]) {
      a = i;
      break;
    }
  }
  if (a == 0) {
    fn(Permutation(word));
    return;
  }
  used[static_cast<size_t>(a)] = true;

  word[static_cast<size_t>(a) - 1] = a;  // a fixed
  involutions_rec(word, used, fn);

  for (int b = a + 1; b <= n; ++b) {
    if (used[static_cast<size_t>(b)]) continue;
    used[static_cast<size_t>(b)] = true;
    word[static_cast<size_t>(a) - 1] = b;
    word[static_cast<size_t>(b) - 1] = a;
    involutions_rec(word, used, fn);
    used[static_cast<size_t>(b)] = false;
  }
  used[static_cast<size_t>(a)] = false;
}

}  // namespace

void for_each_involution(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> word(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  involutions_rec(word, used, fn);
}

}  // namespace rsk
