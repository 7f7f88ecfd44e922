#ifndef SCHURLAT_TILTING_HPP_
#define SCHURLAT_TILTING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurlat/modrep.hpp"

namespace schurlat {

// One rigid locally free module per Schur root, keyed by rank vector.
struct RigidAtlas {
  std::map<RootVector, GenModule> entries;
};

struct SupportTiltingPair {
  std::vector<RootVector> tilting;     // sorted atlas keys
  std::vector<std::size_t> projective;  // sorted vertices, 0-based

  auto operator<=>(SupportTiltingPair const&) const = default;
  bool operator==(SupportTiltingPair const&) const = default;
};

struct ExchangeGraph {
  std::vector<SupportTiltingPair> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second, sorted
};

struct GraphReport {
  bool regular = false;
  std::size_t degree = 0;
  bool connected = false;
};

// Throws InfiniteType, or AtlasIncomplete naming the first root without a
// rigid module.
RigidAtlas rigid_atlas(HPresentation const& pres, std::uint64_t seed, std::size_t tries, std::size_t jobs = 1);

// Ext^1 vanishes in both directions. Throws KeyMissing.
bool compatible(HPresentation const& pres, RigidAtlas const& atlas, RootVector const& a, RootVector const& b);

std::vector<SupportTiltingPair> support_tilting_pairs(HPresentation const& pres, RigidAtlas const& atlas,
                                                      std::size_t jobs = 1);

// Edge iff the tagged summand sets share exactly n-1 elements.
ExchangeGraph exchange_graph(std::vector<SupportTiltingPair> const& pairs, std::size_t n);

// degree is n; regular means every vertex has exactly n neighbours.
GraphReport check_graph(ExchangeGraph const& g, std::size_t n);

// "T:{(1,0,0)|(1,1,0)};P:{3}" with 1-based vertices.
std::string pair_label(SupportTiltingPair const& pair);
std::string to_dot(ExchangeGraph const& g);

}  // namespace schurlat

#endif  // SCHURLAT_TILTING_HPP_
