#ifndef SCHURLAT_SCHUR_HPP_
#define SCHURLAT_SCHUR_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "schurlat/cartan.hpp"
#include "schurlat/weyl.hpp"

namespace schurlat {

// Complete real exceptional sequence of positive real roots. Earlier entries
// have no Hom or Ext^1 into later ones at the level of the Euler form:
// euler_form(entries[j], entries[i]) == 0 whenever j < i. The standard start
// is (alpha_1, ..., alpha_n), i.e. (E_1, ..., E_n).
struct ExceptionalSequence {
  std::vector<RootVector> entries;

  auto operator<=>(ExceptionalSequence const&) const = default;
  bool operator==(ExceptionalSequence const&) const = default;
};

bool is_exceptional(CartanData const& data, ExceptionalSequence const& seq);

enum class BraidDirection { Forward, Inverse };

// Forward at position i (0-based, i + 1 < n):
//   (.., b_i, b_{i+1}, ..) -> (.., s_{b_i}(b_{i+1}), b_i, ..)
// Inverse:
//   (.., b_i, b_{i+1}, ..) -> (.., b_{i+1}, s_{b_{i+1}}(b_i), ..)
// New entries are replaced by their positive multiple.
ExceptionalSequence braid_move(CartanData const& data, ExceptionalSequence const& seq, std::size_t i,
                               BraidDirection direction);

ExceptionalSequence standard_sequence(CartanData const& data);

struct SchurSearchStats {
  std::size_t sequences_visited = 0;
};

// Roots occurring in exceptional sequences reachable from the standard one by
// braid moves whose entries all stay inside the box max|b_i| <= bound.
RootSet enumerate_schur(CartanData const& data, Int bound, SchurSearchStats* stats = nullptr);

// Every exceptional sequence visited by enumerate_schur, in BFS order.
std::vector<ExceptionalSequence> braid_orbit(CartanData const& data, Int bound);

// s_beta <= c in absolute order, i.e. l(s_beta c) = n - 1.
bool is_schur_absolute(CartanData const& data, AbsoluteLengthTable const& table, RootVector const& beta);
bool is_schur_absolute(CartanData const& data, RootVector const& beta);

// Positive roots beta with is_schur_absolute(beta); finite type only.
RootSet schur_roots_absolute(CartanData const& data);

// Pairs (beta, dual_root(beta)) for every beta in enumerate_schur(data, bound);
// every dual is checked to lie in enumerate_schur(transpose_data(data), c *
// bound). In finite type the map is also checked to be a bijection.
std::vector<std::pair<RootVector, RootVector>> dual_schur_check(CartanData const& data, Int bound);

}  // namespace schurlat

#endif  // SCHURLAT_SCHUR_HPP_
