#ifndef SCHURLAT_WEYL_HPP_
#define SCHURLAT_WEYL_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "schurlat/cartan.hpp"

namespace schurlat {

// Element of W(C) acting on Z^I. Column j of the matrix is the image of
// alpha_j. Equality is matrix equality; the word is advisory.
struct WeylElement {
  IntMatrix matrix;
  std::vector<std::size_t> word;  // simple-reflection indices, 0-based

  RootVector operator()(RootVector const& v) const { return matrix * v; }
  bool operator==(WeylElement const& other) const { return matrix == other.matrix; }
};

WeylElement compose(WeylElement const& a, WeylElement const& b);

// Sorted, duplicate-free list of roots found inside the box max|b_i| <= bound.
struct RootSet {
  Int bound = 0;
  std::vector<RootVector> roots;

  bool contains(RootVector const& v) const;
  RootSet positive() const;
};

WeylElement simple_reflection(CartanData const& data, std::size_t i);

// s_beta(u) = u - 2 (beta,u) / (beta,beta) * beta, exactly.
RootVector reflect(CartanData const& data, RootVector const& beta, RootVector const& u);

// The reflection s_beta as a matrix; beta must be a real root.
WeylElement reflection_matrix(CartanData const& data, RootVector const& beta);

// Breadth-first closure of {+-alpha_i} under simple reflections, pruned to
// the coordinate box max|b_i| <= bound.
RootSet real_roots(CartanData const& data, Int bound);

// All positive roots of a finite-type datum (errors on infinite type).
std::vector<RootVector> positive_roots(CartanData const& data);

// Coordinates of the scaled coroot in the basis of scaled simple coroots:
// d_i = 2 c_i b_i / (beta,beta). This is a real root of transpose_data(data).
RootVector dual_root(CartanData const& data, RootVector const& beta);

// DC positive definite (all leading principal minors > 0).
bool is_finite_type(CartanData const& data);

// s_1 s_2 ... s_n
WeylElement coxeter_element(CartanData const& data);

// Distances from the identity in the Cayley graph of a finite Weyl group
// with all reflections as generators. Built once, then queried.
class AbsoluteLengthTable {
 public:
  static constexpr std::size_t kMaxGroupOrder = 51840;

  explicit AbsoluteLengthTable(CartanData const& data);

  std::size_t group_order() const noexcept { return length_.size(); }
  int length(WeylElement const& w) const;
  std::vector<WeylElement> const& reflections() const noexcept { return reflections_; }

 private:
  std::map<std::vector<Int>, int> length_;
  std::vector<WeylElement> reflections_;
};

int absolute_length(CartanData const& data, WeylElement const& w);

}  // namespace schurlat

#endif  // SCHURLAT_WEYL_HPP_
