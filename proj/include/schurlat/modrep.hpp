#ifndef SCHURLAT_MODREP_HPP_
#define SCHURLAT_MODREP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "schurlat/halgebra.hpp"

namespace schurlat {

// Per-vertex linear maps f_i : M_i -> N_i.
struct HomElement {
  std::vector<FpMatrix> maps;
};

struct HomBasis {
  std::size_t dim = 0;
  std::vector<HomElement> basis;
};

struct EndReport {
  std::size_t dim = 0;
  bool is_local = false;
  std::size_t residue_dim = 0;  // dim End / rad End
  std::size_t nilpotency = 0;   // least m with rad^m = 0
  bool is_truncated_polynomial = false;
  // Set only when is_truncated_polynomial: every M_j is free over F[x]/(x^dim)
  // for the generator x of the radical.
  bool free_over_end = false;
  std::optional<HomElement> generator;
};

struct BrickReport {
  RootVector dims;  // dimension vector of M / rad_E(M)
  bool is_brick = false;
  GenModule quotient;
};

// Both sides of the standard projective resolution complex for locally free M.
struct ResolutionDims {
  std::size_t hom = 0;
  std::size_t ext1 = 0;
};

HomElement compose(PrimeField const& f, HomElement const& a, HomElement const& b);
HomElement identity_map(GenModule const& m);

// Solves f_i eps^M = eps^N f_i and f_i A^M = A^N f_j, first per vertex and
// then on the arrows. The basis is the echelon nullspace basis of that
// system, so it is deterministic.
HomBasis hom(HPresentation const& pres, GenModule const& m, GenModule const& n);

// dim Hom(M,N) - <rk M, rk N>
Int ext1_euler(HPresentation const& pres, GenModule const& m, GenModule const& n);

// Cokernel of  (+)_i Hom_{H_i}(M_i,N_i) -> (+)_{arrows} Hom_{H_i}(iHj (x) M_j, N_i),
// f |-> f_i M_ij - N_ij (1 (x) f_j). Only M needs to be locally free.
Int ext1_resolution(HPresentation const& pres, GenModule const& m, GenModule const& n);
ResolutionDims resolution_dims(HPresentation const& pres, GenModule const& m, GenModule const& n);

bool is_rigid(HPresentation const& pres, GenModule const& m);

// Locally free module of rank r with standard eps and random arrow data.
// Each free coefficient is nonzero with probability `density`.
GenModule random_locally_free(HPresentation const& pres, RootVector const& r, std::mt19937_64& rng,
                              double density = 1.0);

// First try (in try order) whose module has dim End = <r,r> and local End.
// Try t draws from a generator seeded with (seed, t), so tries may run on
// `jobs` threads without changing the result.
std::optional<GenModule> generic_rigid(HPresentation const& pres, RootVector const& r, std::uint64_t seed,
                                       std::size_t tries, std::size_t jobs = 1);

EndReport end_algebra(HPresentation const& pres, GenModule const& m);

BrickReport brick_of(HPresentation const& pres, GenModule const& m);

// M / (image of x), with the induced eps and arrow maps.
GenModule cokernel_of_endomorphism(HPresentation const& pres, GenModule const& m, HomElement const& x);

GenModule direct_sum(HPresentation const& pres, GenModule const& m, GenModule const& n);

}  // namespace schurlat

#endif  // SCHURLAT_MODREP_HPP_
