#include "rsk/imbalance.hpp"

#include "rsk/checked.hpp"
#include "rsk/errors.hpp"

namespace rsk {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ContractError("n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  if (n == 0) out.assign(1, Partition());
  return out;
}

SytStream::SytStream(Partition shape)
    : shape_(std::move(shape)),
      n_(shape_.total()),
      row_of_(static_cast<size_t>(n_), -1),
      fill_(static_cast<size_t>(shape_.row_count()), 0) {}

// A row can take the next entry when it has room and stays strictly shorter
// than the row above. Rows above the topmost non-full row are full, so a
// feasible row always exists while squares remain; place_from cannot fail.
bool SytStream::place_from(int entry) {
  for (int k = entry; k <= n_; ++k) {
    bool placed = false;
    for (int r = 0; r < shape_.row_count(); ++r) {
      if (fill_[static_cast<size_t>(r)] < shape_.part(r + 1) &&
          (r == 0 || fill_[static_cast<size_t>(r) - 1] > fill_[static_cast<size_t>(r)])) {
        row_of_[static_cast<size_t>(k) - 1] = r;
        ++fill_[static_cast<size_t>(r)];
        placed = true;
        break;
      }
    }
    if (!placed) throw InternalError("partial standard filling failed to extend");
  }
  return true;
}

std::optional<Tableau> SytStream::next() {
  if (exhausted_) return std::nullopt;

  if (!started_) {
    started_ = true;
    place_from(1);
  } else {
    int k = n_;
    for (;;) {
      if (k == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
      const int r = row_of_[static_cast<size_t>(k) - 1];
      --fill_[static_cast<size_t>(r)];
      bool moved = false;
      for (int nr = r + 1; nr < shape_.row_count(); ++nr) {
        if (fill_[static_cast<size_t>(nr)] < shape_.part(nr + 1) &&
            fill_[static_cast<size_t>(nr) - 1] > fill_[static_cast<size_t>(nr)]) {
          row_of_[static_cast<size_t>(k) - 1] = nr;
          ++fill_[static_cast<size_t>(nr)];
          moved = true;
          break;
        }
      }
      if (moved) {
        place_from(k + 1);
        break;
      }
      --k;
    }
  }

  std::vector<std::vector<int>> rows(static_cast<size_t>(shape_.row_count()));
  for (int r = 0; r < shape_.row_count(); ++r) {
    rows[static_cast<size_t>(r)].reserve(static_cast<size_t>(shape_.part(r + 1)));
  }
  for (int k = 1; k <= n_; ++k) {
    rows[static_cast<size_t>(row_of_[static_cast<size_t>(k) - 1])].push_back(k);
  }
  return Tableau(std::move(rows));
}

ImbalanceRecord imbalance_record(const Partition& shape) {
  ImbalanceRecord record;
  record.shape = shape;
  SytStream stream(shape);
  while (auto t = stream.next()) {
    record.polynomial.add_to_coefficient(static_cast<int>(t->inversions()), 1);
  }
  record.imbalance = record.polynomial.evaluate(-1);
  record.tableau_count = record.polynomial.evaluate(1);
  return record;
}

namespace {

std::int64_t checked_binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t result = 1;
  for (int i = 1; i <= b; ++i) {
    result = checked_mul(result, a - b + i) / i;  // exact at every step
  }
  return result;
}

}  // namespace

std::int64_t hook_imbalance(int n, int k) {
  if (k < 1 || k > n) throw ContractError("hook requires 1 <= k <= n");
  if (n % 2 == 1 && k % 2 == 0) return 0;
  const auto h = [](int x) { return (x - 1) / 2; };
  return checked_binomial(h(n), h(k));
}

std::int64_t signed_imbalance_square_sum(int n) {
  if (n < 1) throw ContractError("n must be positive");
  std::int64_t sum = 0;
  for (const Partition& shape : partitions_of(n)) {
    const ImbalanceRecord record = imbalance_record(shape);
    const std::int64_t square = checked_mul(record.imbalance, record.imbalance);
    sum = shape.even_row_total() % 2 == 0 ? checked_add(sum, square)
                                          : checked_sub(sum, square);
  }
  return sum;
}

}  // namespace rsk
