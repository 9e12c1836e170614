#include "rsk/involutions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rsk/errors.hpp"
#include "detail/insertion_impl.hpp"

namespace rsk {

CycleDecomposition CycleDecomposition::of(const Permutation& pi) {
  if (!pi.is_involution()) {
    throw ContractError("cycle decomposition of this form requires an involution");
  }
  CycleDecomposition result;
  result.n_ = pi.size();
  for (int a = 1; a <= pi.size(); ++a) {
    const int b = pi.value_at(a);
    if (b == a) {
      result.cycles_.push_back({a, a});
    } else if (a < b) {
      result.cycles_.push_back({a, b});
    }
  }
  // Greatest elements are distinct, so this order is total.
  std::sort(result.cycles_.begin(), result.cycles_.end(),
            [](const Cycle& x, const Cycle& y) { return x.greatest() < y.greatest(); });
  return result;
}

CycleDecomposition CycleDecomposition::parse(std::string_view text) {
  std::vector<Cycle> cycles;
  size_t i = 0;
  int group = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&]() -> int {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw ParseError("expected an integer in cycle " + std::to_string(group),
                       group);
    }
    i = static_cast<size_t>(ptr - text.data());
    return value;
  };
  skip_ws();
  while (i < text.size()) {
    ++group;
    if (text[i] != '(') throw ParseError("expected '('", group);
    ++i;
    skip_ws();
    const int a = read_int();
    if (a <= 0) throw ParseError("cycle elements must be positive", group);
    skip_ws();
    Cycle cycle{a, a};
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws();
      const int b = read_int();
      if (b <= a) {
        throw ParseError("pair (a,b) requires a < b", group);
      }
      cycle.high = b;
      skip_ws();
    }
    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", group);
    ++i;
    skip_ws();
    cycles.push_back(cycle);
  }

  int n = 0;
  for (const Cycle& c : cycles) n = std::max(n, c.high);
  std::vector<int> owner(static_cast<size_t>(n) + 1, 0);
  for (size_t k = 0; k < cycles.size(); ++k) {
    for (int v : {cycles[k].low, cycles[k].high}) {
      if (owner[static_cast<size_t>(v)] != 0 &&
          owner[static_cast<size_t>(v)] != static_cast<int>(k) + 1) {
        throw ParseError("element " + std::to_string(v) +
                             " appears in more than one cycle",
                         static_cast<int>(k) + 1);
      }
      owner[static_cast<size_t>(v)] = static_cast<int>(k) + 1;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (owner[static_cast<size_t>(v)] == 0) {
      throw ParseError("element " + std::to_string(v) + " is missing", 0);
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& x, const Cycle& y) { return x.greatest() < y.greatest(); });
  CycleDecomposition result;
  result.cycles_ = std::move(cycles);
  result.n_ = n;
  return result;
}

int CycleDecomposition::pair_count() const {
  int count = 0;
  for (const Cycle& c : cycles_) {
    if (!c.is_fixed_point()) ++count;
  }
  return count;
}

int CycleDecomposition::fixed_point_count() const {
  return static_cast<int>(cycles_.size()) - pair_count();
}

Permutation CycleDecomposition::to_permutation() const {
  std::vector<int> word(static_cast<size_t>(n_));
  for (const Cycle& c : cycles_) {
    word[static_cast<size_t>(c.low) - 1] = c.high;
    word[static_cast<size_t>(c.high) - 1] = c.low;
  }
  return Permutation(std::move(word));
}

std::string CycleDecomposition::str() const {
  std::ostringstream os;
  for (const Cycle& c : cycles_) {
    os << '(' << c.low;
    if (!c.is_fixed_point()) os << ',' << c.high;
    os << ')';
  }
  return os.str();
}

namespace {

// Appends value at the end of 1-based row `row`, creating the row if it is
// the first missing one. The construction guarantees this keeps the tableau
// valid; a violation is a bug, not bad input.
void place_at_row_end(std::vector<std::vector<int>>& rows, int row, int value) {
  if (static_cast<size_t>(row) > rows.size() + 1) {
    throw InternalError("placement skipped a row");
  }
  if (static_cast<size_t>(row) > rows.size()) rows.emplace_back();
  auto& target = rows[static_cast<size_t>(row) - 1];
  if (!target.empty() && target.back() >= value) {
    throw InternalError("placement breaks row increase");
  }
  if (row > 1) {
    const auto& above = rows[static_cast<size_t>(row) - 2];
    if (above.size() < target.size() + 1) {
      throw InternalError("placement breaks the shape");
    }
    if (above[target.size()] >= value) {
      throw InternalError("placement breaks column increase");
    }
  }
  target.push_back(value);
}

}  // namespace

std::vector<Tableau> beissinger_steps(const Permutation& pi) {
  const CycleDecomposition decomposition = CycleDecomposition::of(pi);
  std::vector<std::vector<int>> rows;
  std::vector<Tableau> steps;
  steps.reserve(decomposition.cycles().size());
  for (const Cycle& cycle : decomposition.cycles()) {
    if (cycle.is_fixed_point()) {
      place_at_row_end(rows, 1, cycle.low);
    } else {
      const auto path = detail::raw_row_insert(rows, cycle.low);
      const int stop_row = path.back().first;
      place_at_row_end(rows, stop_row + 1, cycle.high);
    }
    steps.emplace_back(rows);
  }
  if (steps.empty()) steps.emplace_back();  // n = 0: the empty tableau
  return steps;
}

Tableau beissinger_build(const Permutation& pi) {
  return beissinger_steps(pi).back();
}

Sign sign_from_shape(const Partition& shape) {
  return sign_of_parity(shape.even_row_total());
}

}  // namespace rsk
