#include "rsk/partition.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rsk/errors.hpp"
#include "detail/tokens.hpp"

namespace rsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ContractError("partition parts must be positive, got " +
                          std::to_string(parts_[i]));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ContractError("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  std::vector<int> parts;
  parts.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("token " + std::to_string(i + 1) + " ('" + tok +
                           "') is not an integer",
                       static_cast<int>(i) + 1);
    }
    if (value <= 0) {
      throw ParseError("parts must be positive, got " + tok,
                       static_cast<int>(i) + 1);
    }
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("parts must be weakly decreasing", static_cast<int>(i) + 1);
    }
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > row_count()) return 0;
  return parts_[static_cast<size_t>(i) - 1];
}

int Partition::even_row_total() const {
  int sum = 0;
  for (int i = 2; i <= row_count(); i += 2) sum += part(i);
  return sum;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(static_cast<size_t>(parts_[0]));
    for (int i = 1; i <= parts_[0]; ++i) {
      int count = 0;
      for (int p : parts_) {
        if (p >= i) ++count;
      }
      conj[static_cast<size_t>(i) - 1] = count;
    }
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& shape) {
  return os << shape.str();
}

}  // namespace rsk
