#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rsk {

// A polynomial in q with signed 64-bit integer coefficients, stored densely
// from the constant term up. All arithmetic is overflow-checked; an overflow
// throws OverflowError rather than wrapping. Normal form: the leading
// coefficient is nonzero (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero

  // Coefficients indexed by exponent, low to high. Trailing zeros are
  // stripped.
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(std::int64_t c, int exponent);

  // Parses the coefficient-list format, low to high: "0 -1 0 1" is q^3 - q.
  static IntPolynomial parse(std::string_view text);

  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  std::int64_t coefficient(int exponent) const;
  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }

  std::int64_t evaluate(std::int64_t x) const;

  // Coefficient-list format, low to high; "0" for the zero polynomial.
  std::string str() const;

  IntPolynomial& add_to_coefficient(int exponent, std::int64_t delta);

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  bool operator==(const IntPolynomial&) const = default;
  auto operator<=>(const IntPolynomial&) const = default;

 private:
  void normalize();

  std::vector<std::int64_t> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace rsk
