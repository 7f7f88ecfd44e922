#ifndef SCHURLAT_HALGEBRA_HPP_
#define SCHURLAT_HALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schurlat/cartan.hpp"
#include "schurlat/fp_matrix.hpp"

namespace schurlat {

struct FieldSpec {
  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint32_t kMinPrime = 97;
  std::uint32_t p = kDefaultPrime;
};

// Throws BadField unless p is a prime >= 97.
PrimeField make_field(FieldSpec spec);

// Arrow alpha_ij^(g) : j -> i for (i,j) in Omega and g < g_ij. It satisfies
// eps_i^{target_exp} alpha = alpha eps_j^{source_exp} with target_exp = f_ji
// and source_exp = f_ij.
struct Arrow {
  std::size_t target;  // i
  std::size_t source;  // j
  std::size_t copy;    // g, 0-based
  Int target_exp;
  Int source_exp;

  // "i,j,g" with 1-based indices, the key used in module JSON.
  std::string key() const;
};

struct Relation {
  enum class Kind { Nilpotent, Commutation };
  Kind kind;
  std::size_t vertex = 0;  // Nilpotent: eps_vertex^{exponent} = 0
  std::size_t arrow = 0;   // Commutation: index into arrows()
  Int exponent = 0;

  std::string str(std::vector<Arrow> const& arrows) const;
};

// H = H_F(C, D, Omega) as a quiver with relations over a prime field.
class HPresentation {
 public:
  HPresentation(CartanData data, FieldSpec field);

  CartanData const& data() const noexcept { return data_; }
  PrimeField const& field() const noexcept { return field_; }
  std::size_t vertices() const noexcept { return data_.rank(); }
  Int loop_order(std::size_t i) const { return data_.symmetrizer(i); }
  bool has_loop(std::size_t i) const { return data_.symmetrizer(i) > 1; }
  std::vector<Arrow> const& arrows() const noexcept { return arrows_; }
  std::vector<Relation> const& relations() const noexcept { return relations_; }

 private:
  CartanData data_;
  PrimeField field_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

HPresentation presentation(CartanData const& data, FieldSpec field = {});

// Field-level representation of H. eps[i] is the action of eps_i on M_i (the
// zero matrix when c_i = 1); arrows[a] is a dims[target] x dims[source]
// matrix for pres.arrows()[a].
struct GenModule {
  std::vector<std::size_t> dims;
  std::vector<FpMatrix> eps;
  std::vector<FpMatrix> arrows;
  std::uint32_t p = FieldSpec::kDefaultPrime;

  std::size_t total_dim() const noexcept;
  RootVector dim_vector() const;
  bool operator==(GenModule const&) const = default;
};

GenModule zero_module(HPresentation const& pres);

// Indecomposable projective H e_i, built from the normal form
// eps_i^s alpha eps_j^t (t < f_ij) of each bimodule.
GenModule projective(HPresentation const& pres, std::size_t i);
// Indecomposable injective D(e_i H).
GenModule injective(HPresentation const& pres, std::size_t i);
// E_i: H_i concentrated at vertex i, eps_i a single nilpotent Jordan block.
GenModule generalized_simple(HPresentation const& pres, std::size_t i);

// Throws ShapeMismatch when matrix shapes do not fit dims; otherwise reports
// whether all relations hold.
bool validate_rep(HPresentation const& pres, GenModule const& m);

// Rank vector when every M_i is free over F[eps_i]/(eps_i^{c_i}).
std::optional<RootVector> is_locally_free(HPresentation const& pres, GenModule const& m);

// True iff rank(x^k) = dim (order - k) / order for k = 0..order.
bool has_free_rank_profile(PrimeField const& f, FpMatrix const& x, std::size_t order);

// Columns b_1..b_r with {eps_i^s b_m} an F-basis of M_i; nullopt if M_i is
// not free.
std::optional<FpMatrix> free_generators(HPresentation const& pres, GenModule const& m, std::size_t i);

// Nilpotent Jordan block of size n in the convention eps e_s = e_{s+1}.
FpMatrix jordan_block(std::size_t n);

}  // namespace schurlat

#endif  // SCHURLAT_HALGEBRA_HPP_
