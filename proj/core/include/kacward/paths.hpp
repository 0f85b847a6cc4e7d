#pragma once

#include <cstdint>
#include <vector>

#include "kacward/lattice.hpp"
#include "kacward/polynomial.hpp"

namespace kacward {

/// One step of a path word: a bond id and the direction it is traversed in
/// (+1 along the bond orientation, -1 against it).
struct Step {
  int bond{};
  int dir{};

  bool operator==(const Step&) const = default;
  auto operator<=>(const Step&) const = default;
};

/// Closed non-backtracking directed walk, as an ordered list of steps.
using PathWord = std::vector<Step>;

/// Equivalence class of a closed word under circular rotation and inversion.
struct PathClass {
  PathWord canonical;
  int length{};
  int period{};
  int sign{};
};

/// Throws std::invalid_argument unless the word chains head-to-tail, closes,
/// and never backtracks (including across the wrap-around pair).
void validate_word(const Lattice& lattice, const PathWord& word);

/// Lexicographic minimum over all rotations of the word and of its inversion.
PathWord canonical_form(const Lattice& lattice, const PathWord& word);

/// Largest w such that the word is a w-fold repetition of a subword.
int word_period(const PathWord& word);

/// s(p) = -(phase of e^{i pi/4} per left turn, e^{-i pi/4} per right turn).
/// The accumulated quarter-turn count of a closed word is always a multiple
/// of 4, so the result is exactly +1 or -1.
int word_sign(const Lattice& lattice, const PathWord& word);

/// Every nonperiodic class of closed non-backtracking walks with length
/// <= max_len, found by rooted DFS and quotiented by rotation/inversion.
/// Each class of length l is asserted to be hit exactly 2l times.
std::vector<PathClass> enumerate_closed_classes(const Lattice& lattice,
                                                int max_len);

struct IdentityOrder {
  int order{};
  std::int64_t graph_coeff{};
  std::int64_t product_coeff{};
  bool match{};
};

struct IdentityReport {
  std::vector<IdentityOrder> orders;
  bool all_match{};
};

/// Coefficient-by-coefficient comparison of the even-subgraph generating
/// polynomial against the expanded product of (1 + s(p) u^l) over path
/// classes, both truncated at u^max_order. Exact integer arithmetic.
IdentityReport feynman_identity_check(const Lattice& lattice, int max_order);

/// Expanded product side of the identity, truncated at u^max_order.
IntPolynomial path_product_polynomial(const Lattice& lattice, int max_order);

/// Z ~ 2^(N^2) (1-u^2)^(-N(N-1)) * prod over classes of length <= max_len of
/// (1 + s(p) u^l). Converges to the exact Z as max_len grows; exact whenever
/// max_len covers every class (e.g. N = 2).
double partition_product_truncated(const Lattice& lattice, double coupling_k,
                                   int max_len);

/// Sum of s(p) over all rooted directed closed non-backtracking walks of
/// length exactly n on the free plane, starting and ending at the origin
/// (the wrap-around step must not backtrack either). Periodic walks
/// included. Always even: inversion partners carry equal signs.
std::int64_t base_point_signed_walk_sum(int n);

/// Signed amplitude sum over base-point walk pairs: (sum/2) * u^n.
double base_point_amplitude(int n, double u);

}  // namespace kacward
