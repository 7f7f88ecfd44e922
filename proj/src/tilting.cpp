#include "schurlat/tilting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "schurlat/error.hpp"
#include "schurlat/schur.hpp"
#include "schurlat/weyl.hpp"

namespace schurlat {

namespace {

Int box_of(std::vector<RootVector> const& roots) {
  Int b = 1;
  for (auto const& r : roots) b = std::max(b, r.max_abs());
  return b;
}

// Runs body(k) for k in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += jobs) body(k);
    });
  for (auto& t : workers) t.join();
}

GenModule const& lookup(RigidAtlas const& atlas, RootVector const& key) {
  auto it = atlas.entries.find(key);
  if (it == atlas.entries.end()) throw Error(ErrorCode::KeyMissing, "no atlas entry for " + key.str());
  return it->second;
}

void extend_cliques(std::vector<std::vector<bool>> const& adj, std::vector<std::size_t> const& candidates,
                    std::size_t size, std::size_t from, std::vector<std::size_t>& current,
                    std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = from; c < candidates.size(); ++c) {
    std::size_t const v = candidates[c];
    bool ok = true;
    for (auto u : current) ok = ok && adj[u][v];
    if (!ok) continue;
    current.push_back(v);
    extend_cliques(adj, candidates, size, c + 1, current, out);
    current.pop_back();
  }
}

using Summand = std::variant<RootVector, std::size_t>;

std::vector<Summand> summands(SupportTiltingPair const& p) {
  std::vector<Summand> s;
  for (auto const& t : p.tilting) s.emplace_back(t);
  for (auto i : p.projective) s.emplace_back(i);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

RigidAtlas rigid_atlas(HPresentation const& pres, std::uint64_t seed, std::size_t tries, std::size_t jobs) {
  CartanData const& data = pres.data();
  if (!is_finite_type(data)) throw Error(ErrorCode::InfiniteType, "the rigid atlas needs a finite type datum");
  std::vector<RootVector> const roots = enumerate_schur(data, box_of(positive_roots(data))).positive().roots;
  RigidAtlas atlas;
  for (auto const& r : roots) {
    auto m = generic_rigid(pres, r, seed, tries, jobs);
    if (!m) throw Error(ErrorCode::AtlasIncomplete, "no rigid module found for " + r.str());
    atlas.entries.emplace(r, std::move(*m));
  }
  return atlas;
}

bool compatible(HPresentation const& pres, RigidAtlas const& atlas, RootVector const& a, RootVector const& b) {
  GenModule const& ma = lookup(atlas, a);
  GenModule const& mb = lookup(atlas, b);
  return ext1_euler(pres, ma, mb) == 0 && ext1_euler(pres, mb, ma) == 0;
}

std::vector<SupportTiltingPair> support_tilting_pairs(HPresentation const& pres, RigidAtlas const& atlas,
                                                      std::size_t jobs) {
  if (!is_finite_type(pres.data())) throw Error(ErrorCode::InfiniteType, "support tilting pairs need finite type");
  std::size_t const n = pres.vertices();
  std::vector<RootVector> keys;
  for (auto const& [k, m] : atlas.entries) keys.push_back(k);
  std::size_t const count = keys.size();

  std::vector<std::vector<bool>> adj(count, std::vector<bool>(count, false));
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a; b < count; ++b) todo.emplace_back(a, b);
  std::vector<char> result(todo.size());
  parallel_for(todo.size(), jobs, [&](std::size_t k) {
    result[k] = compatible(pres, atlas, keys[todo[k].first], keys[todo[k].second]);
  });
  for (std::size_t k = 0; k < todo.size(); ++k) {
    auto [a, b] = todo[k];
    adj[a][b] = adj[b][a] = result[k] != 0;
  }

  std::size_t const subsets = std::size_t{1} << n;
  std::vector<std::vector<SupportTiltingPair>> per_subset(subsets);
  parallel_for(subsets, jobs, [&](std::size_t mask) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < count; ++k) {
      bool inside = adj[k][k];
      for (std::size_t i = 0; i < n && inside; ++i)
        if (!(mask >> i & 1) && keys[k][i] != 0) inside = false;
      if (inside) candidates.push_back(k);
    }
    std::size_t const size = static_cast<std::size_t>(std::popcount(mask));
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> current;
    extend_cliques(adj, candidates, size, 0, current, cliques);
    for (auto const& c : cliques) {
      SupportTiltingPair p;
      for (auto k : c) p.tilting.push_back(keys[k]);
      for (std::size_t i = 0; i < n; ++i)
        if (!(mask >> i & 1)) p.projective.push_back(i);
      per_subset[mask].push_back(std::move(p));
    }
  });

  std::set<SupportTiltingPair> all;
  for (auto& v : per_subset)
    for (auto& p : v) all.insert(std::move(p));
  return {all.begin(), all.end()};
}

ExchangeGraph exchange_graph(std::vector<SupportTiltingPair> const& pairs, std::size_t n) {
  ExchangeGraph g;
  g.vertices = pairs;
  std::vector<std::vector<Summand>> sets;
  for (auto const& p : pairs) sets.push_back(summands(p));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      std::vector<Summand> common;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                            std::back_inserter(common));
      if (n > 0 && common.size() == n - 1) g.edges.emplace_back(a, b);
    }
  return g;
}

GraphReport check_graph(ExchangeGraph const& g, std::size_t n) {
  std::size_t const v = g.vertices.size();
  std::vector<std::size_t> degree(v, 0);
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = v;
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
    auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  GraphReport rep;
  rep.degree = n;
  rep.regular = std::all_of(degree.begin(), degree.end(), [n](std::size_t d) { return d == n; });
  rep.connected = components <= 1;
  return rep;
}

std::string pair_label(SupportTiltingPair const& pair) {
  std::string s = "T:{";
  for (std::size_t k = 0; k < pair.tilting.size(); ++k) s += (k ? "|" : "") + pair.tilting[k].str();
  s += "};P:{";
  for (std::size_t k = 0; k < pair.projective.size(); ++k)
    s += (k ? "," : "") + std::to_string(pair.projective[k] + 1);
  return s + "}";
}

std::string to_dot(ExchangeGraph const& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << pair_label(g.vertices[v]) << "\"];\n";
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace schurlat
