#include "rsk/rsk.hpp"

#include <algorithm>

#include "rsk/errors.hpp"
#include "detail/insertion_impl.hpp"

namespace rsk {

std::pair<Tableau, InsertionTrace> row_insert(const Tableau& t, int x) {
  if (x <= 0) throw ContractError("inserted value must be positive");
  if (t.contains(x)) {
    throw ContractError("value " + std::to_string(x) +
                        " already occurs in the tableau");
  }
  auto rows = t.rows();
  InsertionTrace trace;
  trace.bump_path = detail::raw_row_insert(rows, x);
  trace.final_square = trace.bump_path.back();
  return {Tableau(std::move(rows)), std::move(trace)};
}

InsertionStepper::InsertionStepper(Permutation pi) : pi_(std::move(pi)) {}

InsertionTrace InsertionStepper::advance() {
  if (done()) throw ContractError("stepper already consumed its word");
  ++step_;
  const int x = pi_.value_at(step_);
  InsertionTrace trace;
  trace.bump_path = detail::raw_row_insert(p_rows_, x);
  trace.final_square = trace.bump_path.back();
  const auto [row, col] = trace.final_square;
  if (static_cast<size_t>(row) > q_rows_.size()) q_rows_.emplace_back();
  auto& q_row = q_rows_[static_cast<size_t>(row) - 1];
  if (static_cast<int>(q_row.size()) + 1 != col) {
    throw InternalError("recording square out of step with insertion square");
  }
  q_row.push_back(step_);
  return trace;
}

Tableau InsertionStepper::insertion_tableau() const { return Tableau(p_rows_); }

Tableau InsertionStepper::recording_tableau() const { return Tableau(q_rows_); }

TableauPair InsertionStepper::result() const {
  if (!done()) throw ContractError("insertion is not finished");
  return TableauPair(Tableau(p_rows_), Tableau(q_rows_));
}

TableauPair robinson_schensted(const Permutation& pi) {
  InsertionStepper stepper(pi);
  while (!stepper.done()) stepper.advance();
  return stepper.result();
}

Permutation robinson_schensted_inverse(const TableauPair& pair) {
  auto p_rows = pair.p().rows();
  auto q_rows = pair.q().rows();
  const int n = pair.p().size();
  std::vector<int> word(static_cast<size_t>(n), 0);

  for (int i = n; i >= 1; --i) {
    // i is the largest remaining entry of Q, so it sits at a corner.
    int row = -1;
    for (size_t r = 0; r < q_rows.size(); ++r) {
      if (!q_rows[r].empty() && q_rows[r].back() == i) {
        row = static_cast<int>(r);
        break;
      }
    }
    if (row < 0) throw InternalError("recording tableau lost an entry");
    q_rows[static_cast<size_t>(row)].pop_back();
    if (q_rows[static_cast<size_t>(row)].empty()) q_rows.pop_back();

    // Reverse bumping from the same corner of P.
    int value = p_rows[static_cast<size_t>(row)].back();
    p_rows[static_cast<size_t>(row)].pop_back();
    if (p_rows[static_cast<size_t>(row)].empty()) p_rows.pop_back();
    for (int r = row - 1; r >= 0; --r) {
      auto& above = p_rows[static_cast<size_t>(r)];
      auto it = std::lower_bound(above.begin(), above.end(), value);
      if (it == above.begin()) {
        throw InternalError("reverse bump found no smaller entry above");
      }
      --it;  // rightmost entry smaller than value
      std::swap(*it, value);
    }
    word[static_cast<size_t>(i) - 1] = value;
  }
  return Permutation(std::move(word));
}

}  // namespace rsk
