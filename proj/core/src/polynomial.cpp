#include "rsk/polynomial.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "rsk/checked.hpp"
#include "rsk/errors.hpp"
#include "detail/tokens.hpp"

namespace rsk {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  return IntPolynomial(std::vector<std::int64_t>{c});
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, int exponent) {
  std::vector<std::int64_t> coeffs(static_cast<size_t>(exponent) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("token " + std::to_string(i + 1) + " ('" + tok +
                           "') is not an integer",
                       static_cast<int>(i) + 1);
    }
    coeffs.push_back(value);
  }
  return IntPolynomial(std::move(coeffs));
}

std::int64_t IntPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coefficients_[static_cast<size_t>(exponent)];
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    if (i > 0) os << ' ';
    os << coefficients_[i];
  }
  return os.str();
}

IntPolynomial& IntPolynomial::add_to_coefficient(int exponent, std::int64_t delta) {
  if (exponent < 0) throw ContractError("exponent must be non-negative");
  if (static_cast<size_t>(exponent) >= coefficients_.size()) {
    coefficients_.resize(static_cast<size_t>(exponent) + 1, 0);
  }
  auto& c = coefficients_[static_cast<size_t>(exponent)];
  c = checked_add(c, delta);
  normalize();
  return *this;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> coeffs(
      std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = checked_add(i < a.coefficients_.size() ? a.coefficients_[i] : 0,
                            i < b.coefficients_.size() ? b.coefficients_[i] : 0);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> coeffs(
      std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = checked_sub(i < a.coefficients_.size() ? a.coefficients_[i] : 0,
                            i < b.coefficients_.size() ? b.coefficients_[i] : 0);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<std::int64_t> coeffs(
      a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (size_t j = 0; j < b.coefficients_.size(); ++j) {
      coeffs[i + j] = checked_add(
          coeffs[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
    }
  }
  return IntPolynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << p.str();
}

}  // namespace rsk
