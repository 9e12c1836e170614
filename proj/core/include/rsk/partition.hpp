#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rsk {

// An integer partition: weakly decreasing positive parts. Doubles as a Young
// diagram shape (part i = length of row i). The empty partition is legal.
class Partition {
 public:
  Partition() = default;

  // Validates weakly decreasing, strictly positive parts.
  explicit Partition(std::vector<int> parts);

  // Parses "4,3,1,1" (commas and/or spaces). Throws ParseError.
  static Partition parse(std::string_view text);

  // Number the partition partitions.
  int total() const;

  int row_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // 1-based part access; 0 beyond the last part.
  int part(int i) const;

  // Sum of the even-indexed parts: part(2) + part(4) + ...  Also equal to the
  // maximum number of disjoint vertical dominoes that fit in the diagram.
  int even_row_total() const;

  // Transpose of the diagram. Involutive.
  Partition conjugate() const;

  // "(4,3,1,1)"; "()" for the empty partition.
  std::string str() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& shape);

}  // namespace rsk
