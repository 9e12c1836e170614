#include "rsk/knuth.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "rsk/errors.hpp"
#include "rsk/rsk.hpp"

namespace rsk {

namespace {

// Relative order of a window of three distinct letters, or nullopt when the
// window is monotone and matches no rewrite.
std::optional<MoveKind> classify_window(int w0, int w1, int w2) {
  if (w0 < w2 && w2 < w1) return MoveKind::acb_to_cab;
  if (w1 < w2 && w2 < w0) return MoveKind::cab_to_acb;
  if (w1 < w0 && w0 < w2) return MoveKind::bac_to_bca;
  if (w2 < w0 && w0 < w1) return MoveKind::bca_to_bac;
  return std::nullopt;
}

const char* kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::acb_to_cab: return "acb>cab";
    case MoveKind::cab_to_acb: return "cab>acb";
    case MoveKind::bac_to_bca: return "bac>bca";
    case MoveKind::bca_to_bac: return "bca>bac";
  }
  throw InternalError("unreachable move kind");
}

}  // namespace

MoveKind inverse_kind(MoveKind kind) {
  switch (kind) {
    case MoveKind::acb_to_cab: return MoveKind::cab_to_acb;
    case MoveKind::cab_to_acb: return MoveKind::acb_to_cab;
    case MoveKind::bac_to_bca: return MoveKind::bca_to_bac;
    case MoveKind::bca_to_bac: return MoveKind::bac_to_bca;
  }
  throw InternalError("unreachable move kind");
}

std::string to_string(const KnuthMove& move) {
  std::ostringstream os;
  os << "pos=" << move.position << " kind=" << kind_name(move.kind);
  return os.str();
}

std::vector<KnuthMove> applicable_moves(const Permutation& pi) {
  std::vector<KnuthMove> moves;
  for (int pos = 1; pos + 2 <= pi.size(); ++pos) {
    const auto kind = classify_window(pi.value_at(pos), pi.value_at(pos + 1),
                                      pi.value_at(pos + 2));
    if (kind) moves.push_back({pos, *kind});
  }
  return moves;
}

Permutation apply_move(const Permutation& pi, const KnuthMove& move) {
  const int pos = move.position;
  if (pos < 1 || pos + 2 > pi.size()) {
    throw ContractError("move position out of range");
  }
  const auto kind =
      classify_window(pi.value_at(pos), pi.value_at(pos + 1), pi.value_at(pos + 2));
  if (kind != move.kind) {
    throw ContractError("window at position " + std::to_string(pos) +
                        " does not match the move's pattern");
  }
  auto word = pi.word();
  const size_t i = static_cast<size_t>(pos) - 1;
  switch (move.kind) {
    case MoveKind::acb_to_cab:
    case MoveKind::cab_to_acb:
      std::swap(word[i], word[i + 1]);
      break;
    case MoveKind::bac_to_bca:
    case MoveKind::bca_to_bac:
      std::swap(word[i + 1], word[i + 2]);
      break;
  }
  return Permutation(std::move(word));
}

std::vector<Permutation> knuth_class(const Permutation& pi) {
  std::set<Permutation> seen{pi};
  std::deque<Permutation> frontier{pi};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const KnuthMove& move : applicable_moves(current)) {
      Permutation next = apply_move(current, move);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

Permutation canonical_involution(const Permutation& pi) {
  const Tableau p = robinson_schensted(pi).p();
  return robinson_schensted_inverse(TableauPair(p, p));
}

Permutation canonical_tau(const Permutation& pi) {
  const Tableau p = robinson_schensted(pi).p();
  const Tableau identity_recording = Tableau::superstandard(p.shape());
  return robinson_schensted_inverse(TableauPair(p, identity_recording));
}

}  // namespace rsk
