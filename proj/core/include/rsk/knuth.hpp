#pragma once

#include <string>
#include <vector>

#include "rsk/permutation.hpp"
#include "rsk/tableau.hpp"

namespace rsk {

// The four elementary rewrites of three consecutive letters, for a < b < c:
//
//   acb -> cab    cab -> acb    bac -> bca    bca -> bac
//
// The first two swap the left pair of the window, the last two the right
// pair. Two permutations are equivalent under these moves exactly when their
// insertion tableaux coincide.
enum class MoveKind { acb_to_cab, cab_to_acb, bac_to_bca, bca_to_bac };

MoveKind inverse_kind(MoveKind kind);

struct KnuthMove {
  int position = 0;  // 1-based index of the window's leftmost letter
  MoveKind kind = MoveKind::acb_to_cab;

  bool operator==(const KnuthMove&) const = default;
};

// "pos=3 kind=bac>bca"
std::string to_string(const KnuthMove& move);

// All moves whose left-hand pattern matches a window of pi. A window matches
// at most one kind; monotone windows match none.
std::vector<KnuthMove> applicable_moves(const Permutation& pi);

// Applies one move. Throws ContractError if the window does not match the
// move's left-hand pattern.
Permutation apply_move(const Permutation& pi, const KnuthMove& move);

// The equivalence class of pi: breadth-first closure under applicable moves,
// returned sorted. Equals the set of permutations sharing pi's insertion
// tableau; its size is the number of standard tableaux of that shape.
std::vector<Permutation> knuth_class(const Permutation& pi);

// The unique involution in pi's class: the preimage of (P, P).
Permutation canonical_involution(const Permutation& pi);

// The unique class member whose recording tableau has no inversions: the
// preimage of (P, superstandard(shape)).
Permutation canonical_tau(const Permutation& pi);

}  // namespace rsk
