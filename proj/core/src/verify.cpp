#include "rsk/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rsk/errors.hpp"
#include "rsk/imbalance.hpp"
#include "rsk/involutions.hpp"
#include "rsk/knuth.hpp"
#include "rsk/pair.hpp"
#include "rsk/patterns.hpp"
#include "rsk/rsk.hpp"

namespace rsk {

namespace oracles {

int lis_dp(const Permutation& pi) {
  const auto& w = pi.word();
  std::vector<int> best(w.size(), 1);
  int result = w.empty() ? 0 : 1;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    result = std::max(result, best[i]);
  }
  return result;
}

int lds_dp(const Permutation& pi) {
  const auto& w = pi.word();
  std::vector<int> best(w.size(), 1);
  int result = w.empty() ? 0 : 1;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (w[j] > w[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    result = std::max(result, best[i]);
  }
  return result;
}

}  // namespace oracles

namespace {

std::string input_str(const Permutation& pi) {
  return pi.size() == 0 ? "(empty)" : pi.str();
}

void add_violation(VerificationReport& report, std::string input,
                   std::string expected, std::string actual) {
  report.violations.push_back(
      {std::move(input), std::move(expected), std::move(actual)});
}

// --- per-permutation checks ------------------------------------------------

void check_sign_product(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const Sign direct = pi.sign();
  const Sign from_pair = sign_from_tableaux(robinson_schensted(pi));
  if (direct != from_pair) {
    std::ostringstream expected, actual;
    expected << direct;
    actual << from_pair;
    add_violation(report, input_str(pi), expected.str(), actual.str());
  }
}

void check_move_sign_flip(const Permutation& pi, VerificationReport& report) {
  const TableauPair before = robinson_schensted(pi);
  for (const KnuthMove& move : applicable_moves(pi)) {
    ++report.cases_checked;
    const Permutation sigma = apply_move(pi, move);
    const TableauPair after = robinson_schensted(sigma);
    if (after.p() != before.p()) {
      add_violation(report, input_str(pi) + " ; " + to_string(move),
                    "insertion tableau unchanged", "insertion tableau changed");
      continue;
    }
    const long long delta = after.q().inversions() - before.q().inversions();
    if (delta != 1 && delta != -1) {
      add_violation(report, input_str(pi) + " ; " + to_string(move),
                    "recording inversions change by +-1",
                    "change by " + std::to_string(delta));
    }
  }
}

void check_second_row_parity(const Permutation& pi, VerificationReport& report) {
  static const std::vector<Pattern> kDecreasing3{Pattern({3, 2, 1})};
  if (!avoids_all(pi, kDecreasing3)) return;
  ++report.cases_checked;
  const TableauPair pair = robinson_schensted(pi);
  if (!second_row_parity_matches(pair)) {
    const long long s = second_row_sum(pair);
    const long long inv = pair.p().inversions() + pair.q().inversions();
    add_violation(report, input_str(pi),
                  "s = inv(P)+inv(Q) (mod 2)",
                  "s=" + std::to_string(s) + " inv sum=" + std::to_string(inv));
  }
}

void check_roundtrip(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const Permutation back = robinson_schensted_inverse(robinson_schensted(pi));
  if (back != pi) {
    add_violation(report, input_str(pi), input_str(pi), input_str(back));
  }
}

void check_symmetry(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const TableauPair pair = robinson_schensted(pi);
  const TableauPair inverse_pair = robinson_schensted(pi.inverse());
  if (pair.q() != inverse_pair.p() || pair.p() != inverse_pair.q()) {
    add_violation(report, input_str(pi),
                  "Q(pi) = P(pi^-1) and P(pi) = Q(pi^-1)", "mismatch");
  }
}

void check_subsequence_lengths(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const Partition shape = robinson_schensted(pi).shape();
  const int lis = oracles::lis_dp(pi);
  const int lds = oracles::lds_dp(pi);
  if (shape.part(1) != lis || shape.row_count() != lds) {
    add_violation(report, input_str(pi),
                  "first row " + std::to_string(lis) + ", first column " +
                      std::to_string(lds),
                  "first row " + std::to_string(shape.part(1)) +
                      ", first column " + std::to_string(shape.row_count()));
  }
}

void check_descent_sets(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const auto expected = pi.descent_set();
  const auto actual = robinson_schensted(pi).q().descents();
  if (expected != actual) {
    auto join = [](const std::vector<int>& v) {
      std::string s = "{";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(v[i]);
      }
      return s + "}";
    };
    add_violation(report, input_str(pi), join(expected), join(actual));
  }
}

void check_avoider_characterizations(const Permutation& pi,
                                     VerificationReport& report) {
  static const std::vector<Pattern> kPair{Pattern({2, 1, 3}), Pattern({2, 3, 1})};
  ++report.cases_checked;
  const bool avoids = avoids_all(pi, kPair);
  const std::optional<int> k = hook_identity_form(pi);
  if (avoids != k.has_value()) {
    add_violation(report, input_str(pi),
                  avoids ? "hook with identity row word" : "no hook form",
                  k ? "k=" + std::to_string(*k) : "no hook form");
    return;
  }
  for (int candidate = 1; candidate <= pi.size(); ++candidate) {
    const bool by_descents = descent_structure_check(pi, candidate);
    const bool by_tableau = k.has_value() && *k == candidate;
    if (by_descents != by_tableau) {
      add_violation(report, input_str(pi) + " ; k=" + std::to_string(candidate),
                    by_tableau ? "descent structure" : "no descent structure",
                    by_descents ? "descent structure" : "no descent structure");
    }
  }
}

void check_involution(const Permutation& pi, VerificationReport& report) {
  ++report.cases_checked;
  const Tableau built = beissinger_build(pi);
  const TableauPair pair = robinson_schensted(pi);
  if (built != pair.p()) {
    add_violation(report, input_str(pi), "direct construction = insertion tableau",
                  "tableaux differ");
    return;
  }
  const Sign direct = pi.sign();
  const Sign by_shape = sign_from_shape(built.shape());
  if (direct != by_shape) {
    std::ostringstream expected, actual;
    expected << direct;
    actual << by_shape;
    add_violation(report, input_str(pi), expected.str(), actual.str());
  }
}

// --- aggregate suites -------------------------------------------------------

void run_square_sum(int n_max, VerificationReport& report) {
  for (int n = 2; n <= n_max; ++n) {
    std::int64_t sum = 0;
    for (const Partition& shape : partitions_of(n)) {
      ++report.cases_checked;
      const ImbalanceRecord record = imbalance_record(shape);
      const std::int64_t square = record.imbalance * record.imbalance;
      sum += shape.even_row_total() % 2 == 0 ? square : -square;
    }
    if (sum != 0) {
      add_violation(report, "n=" + std::to_string(n), "0", std::to_string(sum));
    }
  }
}

void run_signed_lis(int n_max, VerificationReport& report) {
  static const std::vector<Pattern> kPair{Pattern({2, 1, 3}), Pattern({2, 3, 1})};
  for (int n = 1; n <= n_max; ++n) {
    IntPolynomial brute;
    AvoiderStream stream(n, kPair);
    while (auto pi = stream.next()) {
      ++report.cases_checked;
      brute.add_to_coefficient(oracles::lis_dp(*pi), to_int(pi->sign()));
    }
    const IntPolynomial closed = signed_lis_polynomial(n);
    if (brute != closed) {
      add_violation(report, "n=" + std::to_string(n), closed.str(), brute.str());
    }
  }
}

void run_pair_roundtrip(int n_max, VerificationReport& report) {
  for (int n = 0; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) { check_roundtrip(pi, report); });
    for (const Partition& shape : partitions_of(n)) {
      std::vector<Tableau> tableaux;
      SytStream stream(shape);
      while (auto t = stream.next()) tableaux.push_back(std::move(*t));
      for (const Tableau& p : tableaux) {
        for (const Tableau& q : tableaux) {
          ++report.cases_checked;
          const TableauPair pair(p, q);
          if (robinson_schensted(robinson_schensted_inverse(pair)) != pair) {
            add_violation(report, "shape " + shape.str() + " pair",
                          "pair reproduced", "pair changed");
          }
        }
      }
    }
  }
}

using PerPermutationCheck = void (*)(const Permutation&, VerificationReport&);

struct SuiteEntry {
  SuiteInfo info;
  PerPermutationCheck per_permutation;  // null for aggregate-only suites
  int min_n_max;
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {{"theorem-3-1", 8,
        "involution sign equals (-1)^e; direct construction matches insertion"},
       &check_involution, 0},
      {{"lemma-4-2", 6,
        "each elementary move keeps P and shifts recording inversions by 1"},
       &check_move_sign_flip, 3},
      {{"theorem-4-4", 8, "sign(pi) = sign(P) sign(Q) (-1)^e"},
       &check_sign_product, 0},
      {{"remark-4-6", 7,
        "321-avoiders: second-row sum = inv(P)+inv(Q) (mod 2)"},
       &check_second_row_parity, 0},
      {{"theorem-5-1", 9, "sum over shapes of (-1)^e I^2 vanishes (n >= 2)"},
       nullptr, 2},
      {{"prop-5-3", 7,
        "{213,231}-avoidance = hook with identity row word = descent structure"},
       &check_avoider_characterizations, 0},
      {{"cor-5-4", 10,
        "signed lis generating function of avoiders matches the closed form"},
       nullptr, 1},
      {{"rsk-roundtrip", 7, "both round trips are the identity"}, nullptr, 0},
      {{"rsk-symmetry", 6, "inverting the permutation swaps P and Q"},
       &check_symmetry, 0},
      {{"schensted", 7,
        "longest increasing/decreasing subsequence = first row/column"},
       &check_subsequence_lengths, 0},
      {{"descents", 6, "descent set of pi equals descent set of Q"},
       &check_descent_sets, 0},
  };
  return table;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const SuiteEntry& entry : suite_table()) {
    if (entry.info.name == name) return entry;
  }
  std::string names;
  for (const SuiteEntry& entry : suite_table()) {
    if (!names.empty()) names += ", ";
    names += entry.info.name;
  }
  throw ContractError("unknown suite '" + name + "' (available: " + names + ")");
}

}  // namespace

const std::vector<SuiteInfo>& available_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const SuiteEntry& entry : suite_table()) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

VerificationReport run_suite(const std::string& name, int n_max) {
  const SuiteEntry& entry = find_suite(name);
  if (n_max > entry.info.ceiling) {
    throw ContractError("suite '" + name + "' accepts n-max up to " +
                        std::to_string(entry.info.ceiling) +
                        " (runtime budget); got " + std::to_string(n_max));
  }
  if (n_max < entry.min_n_max) {
    throw ContractError("suite '" + name + "' needs n-max >= " +
                        std::to_string(entry.min_n_max));
  }
  VerificationReport report;
  report.suite = name;
  report.n_max = n_max;

  if (name == "theorem-3-1") {
    for (int n = 0; n <= n_max; ++n) {
      for_each_involution(n, [&](const Permutation& pi) {
        check_involution(pi, report);
      });
    }
  } else if (name == "theorem-5-1") {
    run_square_sum(n_max, report);
  } else if (name == "cor-5-4") {
    run_signed_lis(n_max, report);
  } else if (name == "rsk-roundtrip") {
    run_pair_roundtrip(n_max, report);
  } else {
    for (int n = 0; n <= n_max; ++n) {
      for_each_permutation(n, [&](const Permutation& pi) {
        entry.per_permutation(pi, report);
      });
    }
  }
  return report;
}

VerificationReport run_suite_sampled(const std::string& name, int n, int count,
                                     std::uint64_t seed) {
  const SuiteEntry& entry = find_suite(name);
  // Only suites that check one unconditional property per permutation make
  // sense on random words; the rest aggregate or filter.
  const bool samplable = name == "theorem-4-4" || name == "rsk-symmetry" ||
                         name == "schensted" || name == "descents";
  if (!samplable) {
    throw ContractError("suite '" + name + "' cannot be sampled; run it exhaustively");
  }
  if (n < 0 || count < 1) throw ContractError("need n >= 0 and count >= 1");

  VerificationReport report;
  report.suite = name;
  report.n_max = n;
  std::mt19937_64 rng(seed);
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
  for (int c = 0; c < count; ++c) {
    std::shuffle(word.begin(), word.end(), rng);
    entry.per_permutation(Permutation(word), report);
  }
  return report;
}

}  // namespace rsk
