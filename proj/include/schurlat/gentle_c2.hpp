#ifndef SCHURLAT_GENTLE_C2_HPP_
#define SCHURLAT_GENTLE_C2_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlat/halgebra.hpp"

namespace schurlat {

// Strings over the gentle algebra of type C~2 with D = diag(2,1,2):
//   e1 : 1 -> 1,  e3 : 3 -> 3,  a12 : 2 -> 1,  a23 : 3 -> 2,
// with e1^2 = e3^2 = 0. Vertices are 0-based in code, 1-based in text.
enum class Letter { E1, E3, A12, A23 };

struct SignedLetter {
  Letter base;
  bool inverse = false;

  std::size_t source() const noexcept;
  std::size_t target() const noexcept;
  SignedLetter inverted() const noexcept { return {base, !inverse}; }

  auto operator<=>(SignedLetter const&) const = default;
  bool operator==(SignedLetter const&) const = default;
};

// Word l_1 ... l_m read as composition of maps: the walk visits
// z_0, ..., z_m with z_{k-1} at t(l_k) and z_k at s(l_k); a direct letter
// sends z_k to z_{k-1}, an inverse letter sends z_{k-1} to z_k.
// `vertex` is the start vertex t(l_1), and the whole string when empty.
struct StringWord {
  std::vector<SignedLetter> letters;
  std::size_t vertex = 0;

  static StringWord trivial(std::size_t v) { return StringWord{{}, v}; }
  static StringWord of(std::vector<SignedLetter> letters);
  bool empty() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }
  // Vertices z_0 .. z_m of the walk.
  std::vector<std::size_t> walk() const;

  auto operator<=>(StringWord const&) const = default;
  bool operator==(StringWord const&) const = default;
};

StringWord inverse(StringWord const& w);
// Plain juxtaposition, without reduction.
StringWord concat(StringWord const& a, StringWord const& b);
// w^k; negative k gives powers of the inverse. w^0 is the trivial string at
// the start vertex of w.
StringWord power(StringWord const& w, int k);
// Cancels adjacent l l^-1 pairs until none remain.
StringWord reduce(StringWord const& w);
// The lexicographically smaller serialization of w and w^-1.
StringWord canonical(StringWord const& w);

bool string_validate(StringWord const& w);

// "e1 a12 a23 e3 a23- a12- e1-", empty strings as "1_2".
std::string serialize(StringWord const& w);
StringWord parse_string(std::string_view text);

CartanData c2_datum();
HPresentation c2_presentation(FieldSpec field = {});

// Throws InvalidString unless string_validate(w).
GenModule string_module(HPresentation const& pres, StringWord const& w);
std::optional<RootVector> rank_of_string(HPresentation const& pres, StringWord const& w);

// p1 p2 p3 q1 q2 q3 h1 h2 c2 c3 p1' p3' q1' q3' R2, and 1_1 1_2 1_3.
StringWord named_string(std::string_view name);

enum class TauDirection { Minus, Plus };

// tau^{-m} P(vertex) for Minus, tau^{m} I(vertex) for Plus, by the closed
// hook and cohook formulas. Throws InvalidString if a result fails to validate.
StringWord tau_string(TauDirection dir, std::size_t vertex, std::size_t m);
std::vector<StringWord> tau_orbit(TauDirection dir, std::size_t vertex, std::size_t steps);

// The brick attached to tau_string(dir, vertex, m).
StringWord dij_string(TauDirection dir, std::size_t vertex, std::size_t m);

}  // namespace schurlat

#endif  // SCHURLAT_GENTLE_C2_HPP_
