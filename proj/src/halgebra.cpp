#include "schurlat/halgebra.hpp"

#include <numeric>

#include "schurlat/error.hpp"

namespace schurlat {

PrimeField make_field(FieldSpec spec) {
  if (spec.p < FieldSpec::kMinPrime) {
    throw Error(ErrorCode::BadField, "p = " + std::to_string(spec.p) + " is below the minimum 97");
  }
  return PrimeField(spec.p);
}

std::string Arrow::key() const {
  return std::to_string(target + 1) + "," + std::to_string(source + 1) + "," + std::to_string(copy + 1);
}

namespace {

std::string eps_power(std::size_t i, Int k) {
  if (k == 0) return "";
  std::string s = "e" + std::to_string(i + 1);
  return k == 1 ? s : s + "^" + std::to_string(k);
}

}  // namespace

std::string Relation::str(std::vector<Arrow> const& arrows) const {
  if (kind == Kind::Nilpotent) return eps_power(vertex, exponent) + " = 0";
  Arrow const& a = arrows[arrow];
  std::string const name = "a" + std::to_string(a.target + 1) + std::to_string(a.source + 1) +
                           (a.copy ? "(" + std::to_string(a.copy + 1) + ")" : "");
  auto side = [&](std::string const& left, std::string const& right) {
    std::string s = left;
    s += s.empty() ? name : " " + name;
    if (!right.empty()) s += " " + right;
    return s;
  };
  return side(eps_power(a.target, a.target_exp), "") + " = " + side("", eps_power(a.source, a.source_exp));
}

HPresentation::HPresentation(CartanData data, FieldSpec field) : data_(std::move(data)), field_(make_field(field)) {
  for (std::size_t i = 0; i < data_.rank(); ++i)
    if (has_loop(i)) relations_.push_back({Relation::Kind::Nilpotent, i, 0, data_.symmetrizer(i)});
  for (auto [i, j] : data_.orientation()) {
    LocalConstants const lc = local_constants(data_, i, j);
    for (Int g = 0; g < lc.g; ++g) {
      arrows_.push_back(Arrow{i, j, static_cast<std::size_t>(g), lc.f_ji, lc.f_ij});
      relations_.push_back({Relation::Kind::Commutation, 0, arrows_.size() - 1, 0});
    }
  }
}

HPresentation presentation(CartanData const& data, FieldSpec field) { return HPresentation(data, field); }

std::size_t GenModule::total_dim() const noexcept { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

RootVector GenModule::dim_vector() const {
  RootVector v(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) v[i] = static_cast<Int>(dims[i]);
  return v;
}

FpMatrix jordan_block(std::size_t n) {
  FpMatrix j(n, n);
  for (std::size_t s = 0; s + 1 < n; ++s) j(s + 1, s) = 1;
  return j;
}

GenModule zero_module(HPresentation const& pres) {
  GenModule m;
  m.p = pres.field().modulus();
  m.dims.assign(pres.vertices(), 0);
  m.eps.assign(pres.vertices(), FpMatrix());
  m.arrows.assign(pres.arrows().size(), FpMatrix());
  return m;
}

namespace {

// Quiver data needed to build a projective: loop orders per vertex and arrows
// with their commutation exponents. The opposite quiver gives injectives.
struct TensorShape {
  struct Edge {
    std::size_t source, target;
    Int target_exp, source_exp;
  };
  std::vector<Int> order;
  std::vector<Edge> edges;
};

TensorShape shape_of(HPresentation const& pres, bool opposite) {
  TensorShape s;
  for (std::size_t i = 0; i < pres.vertices(); ++i) s.order.push_back(pres.loop_order(i));
  for (auto const& a : pres.arrows()) {
    if (opposite) {
      s.edges.push_back({a.target, a.source, a.source_exp, a.target_exp});
    } else {
      s.edges.push_back({a.source, a.target, a.target_exp, a.source_exp});
    }
  }
  return s;
}

// H e_k for the algebra described by `shape`. Vertex v carries free
// H_v-generators; each generator of the target of an edge is a triple
// (edge, generator of the source, t < source_exp), i.e. alpha eps^t (x) b.
struct BuiltModule {
  std::vector<std::size_t> dims;
  std::vector<FpMatrix> eps;
  std::vector<FpMatrix> edges;
};

BuiltModule build_projective(TensorShape const& shape, std::size_t k) {
  std::size_t const n = shape.order.size();
  std::vector<std::size_t> indegree(n, 0);
  for (auto const& e : shape.edges) ++indegree[e.target];
  std::vector<std::size_t> topo;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t const v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (auto const& e : shape.edges)
      if (e.source == v && --indegree[e.target] == 0) ready.push_back(e.target);
  }
  if (topo.size() != n) throw Error(ErrorCode::BadOrientation, "quiver has an oriented cycle");

  std::vector<std::size_t> gens(n, 0);
  std::vector<std::size_t> offset(shape.edges.size(), 0);  // first generator index in the target
  for (std::size_t v : topo) {
    if (v == k) gens[v] = 1;
    for (std::size_t a = 0; a < shape.edges.size(); ++a) {
      auto const& e = shape.edges[a];
      if (e.target != v) continue;
      offset[a] = gens[v];
      gens[v] += gens[e.source] * static_cast<std::size_t>(e.source_exp);
    }
  }

  BuiltModule m;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t const c = static_cast<std::size_t>(shape.order[v]);
    m.dims.push_back(c * gens[v]);
    FpMatrix eps(m.dims[v], m.dims[v]);
    for (std::size_t g = 0; g < gens[v]; ++g)
      for (std::size_t s = 0; s + 1 < c; ++s) eps(g * c + s + 1, g * c + s) = 1;
    m.eps.push_back(std::move(eps));
  }
  for (std::size_t a = 0; a < shape.edges.size(); ++a) {
    auto const& e = shape.edges[a];
    std::size_t const cs = static_cast<std::size_t>(shape.order[e.source]);
    std::size_t const ct = static_cast<std::size_t>(shape.order[e.target]);
    std::size_t const se = static_cast<std::size_t>(e.source_exp);
    std::size_t const te = static_cast<std::size_t>(e.target_exp);
    FpMatrix mat(m.dims[e.target], m.dims[e.source]);
    for (std::size_t g = 0; g < gens[e.source]; ++g)
      for (std::size_t u = 0; u < cs; ++u) {
        // alpha eps^u = eps^{q te} alpha eps^t with u = q se + t
        std::size_t const q = u / se, t = u % se;
        std::size_t const pow = q * te;
        if (pow >= ct) continue;
        std::size_t const target_gen = offset[a] + g * se + t;
        mat(target_gen * ct + pow, g * cs + u) = 1;
      }
    m.edges.push_back(std::move(mat));
  }
  return m;
}

void check_vertex(HPresentation const& pres, std::size_t i) {
  if (i >= pres.vertices()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(i + 1));
}

}  // namespace

GenModule projective(HPresentation const& pres, std::size_t i) {
  check_vertex(pres, i);
  BuiltModule b = build_projective(shape_of(pres, false), i);
  return GenModule{std::move(b.dims), std::move(b.eps), std::move(b.edges), pres.field().modulus()};
}

GenModule injective(HPresentation const& pres, std::size_t i) {
  check_vertex(pres, i);
  BuiltModule b = build_projective(shape_of(pres, true), i);
  GenModule m{std::move(b.dims), {}, {}, pres.field().modulus()};
  for (auto const& e : b.eps) m.eps.push_back(e.transpose());
  for (auto const& e : b.edges) m.arrows.push_back(e.transpose());
  return m;
}

GenModule generalized_simple(HPresentation const& pres, std::size_t i) {
  check_vertex(pres, i);
  GenModule m = zero_module(pres);
  std::size_t const c = static_cast<std::size_t>(pres.loop_order(i));
  m.dims[i] = c;
  m.eps[i] = jordan_block(c);
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
    auto const& arr = pres.arrows()[a];
    m.arrows[a] = FpMatrix(m.dims[arr.target], m.dims[arr.source]);
  }
  return m;
}

bool validate_rep(HPresentation const& pres, GenModule const& m) {
  std::size_t const n = pres.vertices();
  if (m.p != pres.field().modulus()) throw Error(ErrorCode::ShapeMismatch, "module field differs from presentation");
  if (m.dims.size() != n || m.eps.size() != n || m.arrows.size() != pres.arrows().size()) {
    throw Error(ErrorCode::ShapeMismatch, "module has the wrong number of vertices or arrows");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (m.eps[i].rows() != m.dims[i] || m.eps[i].cols() != m.dims[i]) {
      throw Error(ErrorCode::ShapeMismatch, "eps matrix at vertex " + std::to_string(i + 1));
    }
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
    auto const& arr = pres.arrows()[a];
    if (m.arrows[a].rows() != m.dims[arr.target] || m.arrows[a].cols() != m.dims[arr.source]) {
      throw Error(ErrorCode::ShapeMismatch, "arrow matrix " + arr.key());
    }
  }
  PrimeField const& f = pres.field();
  for (auto const& x : m.eps)
    for (auto v : x.data())
      if (v >= f.modulus()) return false;
  for (auto const& x : m.arrows)
    for (auto v : x.data())
      if (v >= f.modulus()) return false;

  for (std::size_t i = 0; i < n; ++i) {
    if (!power(f, m.eps[i], static_cast<std::size_t>(pres.loop_order(i))).is_zero()) return false;
  }
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
    auto const& arr = pres.arrows()[a];
    FpMatrix const lhs = multiply(f, power(f, m.eps[arr.target], static_cast<std::size_t>(arr.target_exp)), m.arrows[a]);
    FpMatrix const rhs = multiply(f, m.arrows[a], power(f, m.eps[arr.source], static_cast<std::size_t>(arr.source_exp)));
    if (lhs != rhs) return false;
  }
  return true;
}

bool has_free_rank_profile(PrimeField const& f, FpMatrix const& x, std::size_t order) {
  std::size_t const dim = x.rows();
  if (order == 0 || dim % order != 0) return false;
  FpMatrix pw = FpMatrix::identity(dim);
  for (std::size_t k = 0; k <= order; ++k) {
    if (rank(f, pw) != dim / order * (order - k)) return false;
    pw = multiply(f, pw, x);
  }
  return true;
}

std::optional<RootVector> is_locally_free(HPresentation const& pres, GenModule const& m) {
  if (!validate_rep(pres, m)) throw Error(ErrorCode::InvalidRep, "module violates the relations of H");
  RootVector r(pres.vertices());
  for (std::size_t i = 0; i < pres.vertices(); ++i) {
    std::size_t const c = static_cast<std::size_t>(pres.loop_order(i));
    if (!has_free_rank_profile(pres.field(), m.eps[i], c)) return std::nullopt;
    r[i] = static_cast<Int>(m.dims[i] / c);
  }
  return r;
}

std::optional<FpMatrix> free_generators(HPresentation const& pres, GenModule const& m, std::size_t i) {
  PrimeField const& f = pres.field();
  std::size_t const c = static_cast<std::size_t>(pres.loop_order(i));
  std::size_t const dim = m.dims[i];
  if (dim % c != 0) return std::nullopt;
  FpMatrix const gens = complement_basis(f, column_basis(f, m.eps[i]));
  if (gens.cols() * c != dim) return std::nullopt;
  std::vector<std::vector<FpMatrix::value_type>> cols;
  for (std::size_t g = 0; g < gens.cols(); ++g) {
    auto v = gens.column(g);
    for (std::size_t s = 0; s < c; ++s) {
      cols.push_back(v);
      v = apply(f, m.eps[i], v);
    }
  }
  if (rank(f, from_columns(dim, cols)) != dim) return std::nullopt;
  return gens;
}

}  // namespace schurlat
