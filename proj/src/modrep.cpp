#include "schurlat/modrep.hpp"

#include <algorithm>
#include <thread>

#include "schurlat/error.hpp"

namespace schurlat {

namespace {

using Vec = std::vector<FpMatrix::value_type>;

void check_same_algebra(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  if (!validate_rep(pres, m) || !validate_rep(pres, n)) {
    throw Error(ErrorCode::InvalidRep, "module violates the relations of H");
  }
}

// Basis of {f : f eps_m = eps_n f} for f : dim(eps_m) -> dim(eps_n).
std::vector<FpMatrix> intertwiners(PrimeField const& f, FpMatrix const& eps_m, FpMatrix const& eps_n) {
  std::size_t const dm = eps_m.rows(), dn = eps_n.rows();
  std::vector<FpMatrix> out;
  if (dm == 0 || dn == 0) return out;
  if (eps_m.is_zero() && eps_n.is_zero()) {
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        FpMatrix e(dn, dm);
        e(r, c) = 1;
        out.push_back(std::move(e));
      }
    return out;
  }
  FpMatrix eq(dn * dm, dn * dm);
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c) {
      std::size_t const row = r * dm + c;
      for (std::size_t k = 0; k < dm; ++k)
        if (auto x = eps_m(k, c)) eq(row, r * dm + k) = f.add(eq(row, r * dm + k), x);
      for (std::size_t k = 0; k < dn; ++k)
        if (auto x = eps_n(r, k)) eq(row, k * dm + c) = f.sub(eq(row, k * dm + c), x);
    }
  FpMatrix const ns = nullspace(f, eq);
  for (std::size_t b = 0; b < ns.cols(); ++b) {
    FpMatrix e(dn, dm);
    for (std::size_t u = 0; u < dn * dm; ++u) e.data()[u] = ns(u, b);
    out.push_back(std::move(e));
  }
  return out;
}

void put_block(FpMatrix& dst, std::size_t row0, std::size_t col, FpMatrix const& block, bool negate,
               PrimeField const& f) {
  for (std::size_t u = 0; u < block.data().size(); ++u) {
    auto const x = block.data()[u];
    if (x == 0) continue;
    auto& d = dst(row0 + u, col);
    d = negate ? f.sub(d, x) : f.add(d, x);
  }
}

Vec flatten(HomElement const& h) {
  Vec v;
  for (auto const& m : h.maps) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

HomElement linear_combination(PrimeField const& f, std::vector<HomElement> const& basis, Vec const& coeffs,
                              HomElement const& shape) {
  HomElement out = shape;
  for (auto& m : out.maps) std::fill(m.data().begin(), m.data().end(), 0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coeffs[b] == 0) continue;
    for (std::size_t i = 0; i < out.maps.size(); ++i)
      out.maps[i] = add(f, out.maps[i], scale(f, basis[b].maps[i], coeffs[b]));
  }
  return out;
}

bool is_zero_map(HomElement const& h) {
  return std::all_of(h.maps.begin(), h.maps.end(), [](FpMatrix const& m) { return m.is_zero(); });
}

}  // namespace

HomElement compose(PrimeField const& f, HomElement const& a, HomElement const& b) {
  HomElement out;
  for (std::size_t i = 0; i < a.maps.size(); ++i) out.maps.push_back(multiply(f, a.maps[i], b.maps[i]));
  return out;
}

HomElement identity_map(GenModule const& m) {
  HomElement id;
  for (auto d : m.dims) id.maps.push_back(FpMatrix::identity(d));
  return id;
}

HomBasis hom(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  check_same_algebra(pres, m, n);
  PrimeField const& f = pres.field();
  std::size_t const nv = pres.vertices();

  std::vector<std::vector<FpMatrix>> local(nv);
  std::vector<std::size_t> first(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    local[i] = intertwiners(f, m.eps[i], n.eps[i]);
    first[i + 1] = first[i] + local[i].size();
  }
  std::size_t const vars = first[nv];

  std::size_t eqs = 0;
  for (auto const& a : pres.arrows()) eqs += n.dims[a.target] * m.dims[a.source];
  FpMatrix system(eqs, vars);
  std::size_t row0 = 0;
  for (std::size_t ai = 0; ai < pres.arrows().size(); ++ai) {
    auto const& a = pres.arrows()[ai];
    for (std::size_t b = 0; b < local[a.target].size(); ++b) {
      put_block(system, row0, first[a.target] + b, multiply(f, local[a.target][b], m.arrows[ai]), false, f);
    }
    for (std::size_t b = 0; b < local[a.source].size(); ++b) {
      put_block(system, row0, first[a.source] + b, multiply(f, n.arrows[ai], local[a.source][b]), true, f);
    }
    row0 += n.dims[a.target] * m.dims[a.source];
  }

  FpMatrix const lambda = nullspace(f, system);
  HomBasis out;
  out.dim = lambda.cols();
  for (std::size_t b = 0; b < lambda.cols(); ++b) {
    HomElement h;
    for (std::size_t i = 0; i < nv; ++i) {
      FpMatrix acc(n.dims[i], m.dims[i]);
      for (std::size_t k = 0; k < local[i].size(); ++k) {
        auto const c = lambda(first[i] + k, b);
        if (c) acc = add(f, acc, scale(f, local[i][k], c));
      }
      h.maps.push_back(std::move(acc));
    }
    out.basis.push_back(std::move(h));
  }
  return out;
}

Int ext1_euler(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  auto const rm = is_locally_free(pres, m);
  auto const rn = is_locally_free(pres, n);
  if (!rm || !rn) throw Error(ErrorCode::NotLocallyFree, "ext1_euler needs locally free modules");
  Int const h = static_cast<Int>(hom(pres, m, n).dim);
  Int const e = h - euler_form(pres.data(), *rm, *rn);
  if (e < 0) throw Error(ErrorCode::InvariantBroken, "negative Ext dimension from the Euler form");
  return e;
}

ResolutionDims resolution_dims(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  check_same_algebra(pres, m, n);
  PrimeField const& f = pres.field();
  std::size_t const nv = pres.vertices();

  std::vector<FpMatrix> gens(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    auto g = free_generators(pres, m, j);
    if (!g) throw Error(ErrorCode::NotLocallyFree, "M is not free at vertex " + std::to_string(j + 1));
    gens[j] = std::move(*g);
  }

  std::vector<std::vector<FpMatrix>> local(nv);
  std::vector<std::size_t> first(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    local[i] = intertwiners(f, m.eps[i], n.eps[i]);
    first[i + 1] = first[i] + local[i].size();
  }
  std::size_t const vars = first[nv];

  // Hom_{H_i}(iH'j (x) M_j, N_i) = N_i^{f_ij r_j}: a map is recorded by its
  // values on the free generators alpha eps_j^t (x) b_m.
  std::vector<std::size_t> block_start;
  std::size_t rows = 0;
  for (auto const& a : pres.arrows()) {
    block_start.push_back(rows);
    rows += n.dims[a.target] * static_cast<std::size_t>(a.source_exp) * gens[a.source].cols();
  }

  FpMatrix delta(rows, vars);
  for (std::size_t ai = 0; ai < pres.arrows().size(); ++ai) {
    auto const& a = pres.arrows()[ai];
    std::size_t const dn = n.dims[a.target];
    std::size_t const se = static_cast<std::size_t>(a.source_exp);
    // Source vectors eps_j^t b_m in M_j and the same eps-powers on N_j.
    std::vector<Vec> shifted;  // index (t, m) -> t * r + m
    FpMatrix const& g = gens[a.source];
    for (std::size_t t = 0; t < se; ++t)
      for (std::size_t mm = 0; mm < g.cols(); ++mm) {
        Vec v = g.column(mm);
        for (std::size_t s = 0; s < t; ++s) v = apply(f, m.eps[a.source], v);
        shifted.push_back(std::move(v));
      }
    FpMatrix const eps_n = n.eps[a.source];
    for (std::size_t b = 0; b < local[a.target].size(); ++b) {
      FpMatrix const fa = multiply(f, local[a.target][b], m.arrows[ai]);
      for (std::size_t k = 0; k < shifted.size(); ++k) {
        Vec const val = apply(f, fa, shifted[k]);
        for (std::size_t r = 0; r < dn; ++r)
          if (val[r]) {
            auto& d = delta(block_start[ai] + k * dn + r, first[a.target] + b);
            d = f.add(d, val[r]);
          }
      }
    }
    for (std::size_t b = 0; b < local[a.source].size(); ++b) {
      for (std::size_t t = 0; t < se; ++t)
        for (std::size_t mm = 0; mm < g.cols(); ++mm) {
          // N_a (alpha eps^t (x) f_j b_m) = A^N eps_N^t f_j b_m
          Vec v = apply(f, local[a.source][b], g.column(mm));
          for (std::size_t s = 0; s < t; ++s) v = apply(f, eps_n, v);
          Vec const val = apply(f, n.arrows[ai], v);
          std::size_t const k = t * g.cols() + mm;
          for (std::size_t r = 0; r < dn; ++r)
            if (val[r]) {
              auto& d = delta(block_start[ai] + k * dn + r, first[a.source] + b);
              d = f.sub(d, val[r]);
            }
        }
    }
  }
  std::size_t const rk = rank(f, delta);
  return ResolutionDims{vars - rk, rows - rk};
}

Int ext1_resolution(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  return static_cast<Int>(resolution_dims(pres, m, n).ext1);
}

bool is_rigid(HPresentation const& pres, GenModule const& m) { return ext1_euler(pres, m, m) == 0; }

GenModule random_locally_free(HPresentation const& pres, RootVector const& r, std::mt19937_64& rng,
                              double density) {
  if (r.size() != pres.vertices() || !r.is_nonnegative()) {
    throw Error(ErrorCode::DimensionMismatch, "rank vector must be non-negative of length n");
  }
  PrimeField const& f = pres.field();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto draw = [&]() -> FpMatrix::value_type {
    if (density < 1.0 && coin(rng) >= density) return 0;
    return static_cast<FpMatrix::value_type>(rng() % f.modulus());
  };

  GenModule m = zero_module(pres);
  for (std::size_t i = 0; i < pres.vertices(); ++i) {
    std::size_t const c = static_cast<std::size_t>(pres.loop_order(i));
    m.dims[i] = c * static_cast<std::size_t>(r[i]);
    m.eps[i] = FpMatrix(m.dims[i], m.dims[i]);
    for (std::size_t g = 0; g < static_cast<std::size_t>(r[i]); ++g)
      for (std::size_t s = 0; s + 1 < c; ++s) m.eps[i](g * c + s + 1, g * c + s) = 1;
  }
  for (std::size_t ai = 0; ai < pres.arrows().size(); ++ai) {
    auto const& a = pres.arrows()[ai];
    std::size_t const cs = static_cast<std::size_t>(pres.loop_order(a.source));
    std::size_t const ct = static_cast<std::size_t>(pres.loop_order(a.target));
    std::size_t const se = static_cast<std::size_t>(a.source_exp);
    std::size_t const te = static_cast<std::size_t>(a.target_exp);
    FpMatrix mat(m.dims[a.target], m.dims[a.source]);
    for (std::size_t g = 0; g < static_cast<std::size_t>(r[a.source]); ++g)
      for (std::size_t t = 0; t < se; ++t) {
        // Value of the H_i-linear structure map on alpha eps^t (x) b_g.
        Vec v(m.dims[a.target]);
        for (auto& x : v) x = draw();
        for (std::size_t q = 0; q * se + t < cs; ++q) {
          std::size_t const col = g * cs + q * se + t;
          std::size_t const shift = q * te;
          for (std::size_t row = 0; row < m.dims[a.target]; ++row) {
            std::size_t const s = row % ct;
            if (s + shift < ct) mat(row + shift, col) = v[row];
          }
        }
      }
    m.arrows[ai] = std::move(mat);
  }
  return m;
}

std::optional<GenModule> generic_rigid(HPresentation const& pres, RootVector const& r, std::uint64_t seed,
                                       std::size_t tries, std::size_t jobs) {
  Int const target = euler_form(pres.data(), r, r);
  if (target <= 0 || !r.is_positive()) return std::nullopt;

  auto attempt = [&](std::size_t t) -> std::optional<GenModule> {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    GenModule m = random_locally_free(pres, r, rng);
    if (static_cast<Int>(hom(pres, m, m).dim) != target) return std::nullopt;
    if (!end_algebra(pres, m).is_local) return std::nullopt;
    return m;
  };

  jobs = std::max<std::size_t>(jobs, 1);
  for (std::size_t base = 0; base < tries; base += jobs) {
    std::size_t const batch = std::min(jobs, tries - base);
    std::vector<std::optional<GenModule>> results(batch);
    if (batch == 1) {
      results[0] = attempt(base);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t k = 0; k < batch; ++k)
        workers.emplace_back([&, k] { results[k] = attempt(base + k); });
      for (auto& w : workers) w.join();
    }
    for (auto& res : results)
      if (res) return std::move(res);
  }
  return std::nullopt;
}

EndReport end_algebra(HPresentation const& pres, GenModule const& m) {
  PrimeField const& f = pres.field();
  HomBasis const hb = hom(pres, m, m);
  std::size_t const d = hb.dim;
  EndReport rep;
  rep.dim = d;
  if (d == 0) return rep;
  if (f.modulus() <= d) {
    throw Error(ErrorCode::FieldTooSmall, "p must exceed dim End = " + std::to_string(d));
  }

  HomElement const shape = hb.basis.front();
  std::vector<Vec> flat;
  for (auto const& h : hb.basis) flat.push_back(flatten(h));
  SpanCoordinates const coords(f, from_columns(flat.front().size(), flat));

  // gamma[a][b] = coordinates of e_a e_b
  std::vector<std::vector<Vec>> gamma(d, std::vector<Vec>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) gamma[a][b] = coords.coordinates(flatten(compose(f, hb.basis[a], hb.basis[b])));

  Vec tr(d, 0);  // trace of left multiplication by e_k
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) tr[k] = f.add(tr[k], gamma[k][l][l]);
  FpMatrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      FpMatrix::value_type acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc = f.add(acc, f.mul(gamma[a][b][k], tr[k]));
      form(a, b) = acc;
    }
  FpMatrix const rad = nullspace(f, form.transpose());
  std::size_t const rad_dim = rad.cols();
  rep.residue_dim = d - rad_dim;
  rep.is_local = rep.residue_dim == 1;

  // Powers of the radical, as coefficient vectors in the End basis.
  auto product_span = [&](FpMatrix const& x, FpMatrix const& y) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < x.cols(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) {
        Vec acc(d, 0);
        for (std::size_t a = 0; a < d; ++a) {
          if (!x(a, i)) continue;
          for (std::size_t b = 0; b < d; ++b) {
            if (!y(b, j)) continue;
            auto const w = f.mul(x(a, i), y(b, j));
            for (std::size_t k = 0; k < d; ++k) acc[k] = f.add(acc[k], f.mul(w, gamma[a][b][k]));
          }
        }
        cols.push_back(std::move(acc));
      }
    if (cols.empty()) return FpMatrix(d, 0);
    return column_basis(f, from_columns(d, cols));
  };
  rep.nilpotency = 1;
  for (FpMatrix pw = rad; pw.cols() > 0; pw = product_span(rad, pw)) ++rep.nilpotency;

  if (!rep.is_local) return rep;

  HomElement const id = identity_map(m);
  auto generates = [&](HomElement const& x) {
    std::vector<Vec> powers;
    HomElement pw = id;
    for (std::size_t k = 0; k < d; ++k) {
      powers.push_back(flatten(pw));
      pw = compose(f, x, pw);
    }
    return is_zero_map(pw) && rank(f, from_columns(powers.front().size(), powers)) == d;
  };
  std::vector<Vec> candidates;
  if (rad_dim == 0) candidates.push_back(Vec(d, 0));
  for (std::size_t c = 0; c < rad_dim; ++c) candidates.push_back(rad.column(c));
  std::mt19937_64 rng(0x5eed);
  for (int extra = 0; extra < 16 && rad_dim > 1; ++extra) {
    Vec v(d, 0);
    for (std::size_t c = 0; c < rad_dim; ++c) {
      auto const k = static_cast<FpMatrix::value_type>(rng() % f.modulus());
      for (std::size_t a = 0; a < d; ++a) v[a] = f.add(v[a], f.mul(k, rad(a, c)));
    }
    candidates.push_back(std::move(v));
  }
  for (auto const& coeffs : candidates) {
    HomElement x = linear_combination(f, hb.basis, coeffs, shape);
    if (!generates(x)) continue;
    rep.is_truncated_polynomial = true;
    rep.free_over_end = true;
    for (auto const& xi : x.maps)
      if (!has_free_rank_profile(f, xi, d)) rep.free_over_end = false;
    rep.generator = std::move(x);
    break;
  }
  return rep;
}

GenModule cokernel_of_endomorphism(HPresentation const& pres, GenModule const& m, HomElement const& x) {
  PrimeField const& f = pres.field();
  std::size_t const nv = pres.vertices();
  std::vector<FpMatrix> section(nv), projection(nv);
  GenModule q = zero_module(pres);
  for (std::size_t i = 0; i < nv; ++i) {
    FpMatrix const im = column_basis(f, x.maps[i]);
    FpMatrix const comp = complement_basis(f, im);
    FpMatrix const inv = inverse(f, hconcat(im, comp));
    FpMatrix proj(comp.cols(), m.dims[i]);
    for (std::size_t r = 0; r < comp.cols(); ++r)
      for (std::size_t c = 0; c < m.dims[i]; ++c) proj(r, c) = inv(im.cols() + r, c);
    q.dims[i] = comp.cols();
    section[i] = comp;
    projection[i] = std::move(proj);
  }
  for (std::size_t i = 0; i < nv; ++i) q.eps[i] = multiply(f, projection[i], multiply(f, m.eps[i], section[i]));
  for (std::size_t ai = 0; ai < pres.arrows().size(); ++ai) {
    auto const& a = pres.arrows()[ai];
    q.arrows[ai] = multiply(f, projection[a.target], multiply(f, m.arrows[ai], section[a.source]));
  }
  return q;
}

BrickReport brick_of(HPresentation const& pres, GenModule const& m) {
  auto const r = is_locally_free(pres, m);
  if (!r) throw Error(ErrorCode::NotRigidIndecomposable, "module is not locally free");
  EndReport const end = end_algebra(pres, m);
  if (!end.is_truncated_polynomial || static_cast<Int>(end.dim) != euler_form(pres.data(), *r, *r)) {
    throw Error(ErrorCode::NotRigidIndecomposable, "End is not a truncated polynomial ring of dimension <r,r>");
  }
  BrickReport rep;
  rep.quotient = cokernel_of_endomorphism(pres, m, *end.generator);
  rep.dims = rep.quotient.dim_vector();
  rep.is_brick = hom(pres, rep.quotient, rep.quotient).dim == 1;
  return rep;
}

GenModule direct_sum(HPresentation const& pres, GenModule const& m, GenModule const& n) {
  check_same_algebra(pres, m, n);
  auto block = [](FpMatrix const& a, FpMatrix const& b) {
    FpMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
  };
  GenModule out = zero_module(pres);
  for (std::size_t i = 0; i < pres.vertices(); ++i) {
    out.dims[i] = m.dims[i] + n.dims[i];
    out.eps[i] = block(m.eps[i], n.eps[i]);
  }
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) out.arrows[a] = block(m.arrows[a], n.arrows[a]);
  return out;
}

}  // namespace schurlat
