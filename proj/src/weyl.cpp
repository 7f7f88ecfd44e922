#include "schurlat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schurlat/error.hpp"

namespace schurlat {

WeylElement compose(WeylElement const& a, WeylElement const& b) {
  WeylElement out{a.matrix * b.matrix, a.word};
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

bool RootSet::contains(RootVector const& v) const {
  return std::binary_search(roots.begin(), roots.end(), v);
}

RootSet RootSet::positive() const {
  RootSet out{bound, {}};
  for (auto const& r : roots)
    if (r.is_positive()) out.roots.push_back(r);
  return out;
}

WeylElement simple_reflection(CartanData const& data, std::size_t i) {
  std::size_t const n = data.rank();
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "reflection index " + std::to_string(i + 1));
  WeylElement s{IntMatrix::identity(n), {i}};
  for (std::size_t j = 0; j < n; ++j) s.matrix(i, j) -= data.cartan(i, j);
  return s;
}

namespace {

// 2 (beta,u) / (beta,beta) with exactness checks.
Int reflection_coefficient(CartanData const& data, RootVector const& beta, RootVector const& u) {
  Int const bb = sym_form(data, beta, beta);
  if (bb == 0) throw Error(ErrorCode::IsotropicReflection, "(beta,beta) = 0 for beta = " + beta.str());
  Int const num = checked_mul(2, sym_form(data, beta, u));
  if (num % bb != 0) {
    throw Error(ErrorCode::NonIntegralResult, "2(beta,u)/(beta,beta) not integral for beta = " + beta.str());
  }
  return num / bb;
}

}  // namespace

RootVector reflect(CartanData const& data, RootVector const& beta, RootVector const& u) {
  Int const k = reflection_coefficient(data, beta, u);
  return u - k * beta;
}

WeylElement reflection_matrix(CartanData const& data, RootVector const& beta) {
  std::size_t const n = data.rank();
  WeylElement s{IntMatrix(n, n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    RootVector const img = reflect(data, beta, RootVector::unit(n, j));
    for (std::size_t i = 0; i < n; ++i) s.matrix(i, j) = img[i];
  }
  return s;
}

RootSet real_roots(CartanData const& data, Int bound) {
  if (bound < 1) throw Error(ErrorCode::BoundTooSmall, "bound must be >= 1");
  std::size_t const n = data.rank();
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection(data, i));

  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    for (Int sign : {Int{1}, Int{-1}}) {
      RootVector v = sign * RootVector::unit(n, i);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    RootVector const v = queue.front();
    queue.pop_front();
    for (auto const& s : gens) {
      RootVector w = s(v);
      if (w.max_abs() > bound) continue;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return RootSet{bound, {seen.begin(), seen.end()}};
}

std::vector<RootVector> positive_roots(CartanData const& data) {
  if (!is_finite_type(data)) throw Error(ErrorCode::InfiniteType, "positive roots requested for infinite type");
  // Every finite-type root has coordinates bounded by the highest root, whose
  // coefficients never exceed 6; the box is a generous enclosure.
  return real_roots(data, 64).positive().roots;
}

RootVector dual_root(CartanData const& data, RootVector const& beta) {
  Int const bb = sym_form(data, beta, beta);
  if (bb == 0) throw Error(ErrorCode::IsotropicRoot, "(beta,beta) = 0 for beta = " + beta.str());
  RootVector d(data.rank());
  for (std::size_t i = 0; i < data.rank(); ++i) {
    Int const num = checked_mul(2, checked_mul(data.symmetrizer(i), beta[i]));
    if (num % bb != 0) throw Error(ErrorCode::NonIntegralDual, beta.str() + " is not a real root");
    d[i] = num / bb;
  }
  return d;
}

namespace {

// Exact determinant of a small integer matrix by fraction-free (Bareiss)
// elimination in 128-bit arithmetic.
__int128 bareiss_determinant(std::vector<std::vector<__int128>> m) {
  std::size_t const n = m.size();
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

bool is_finite_type(CartanData const& data) {
  IntMatrix const& dc = data.symmetrized();
  for (std::size_t k = 1; k <= data.rank(); ++k) {
    std::vector<std::vector<__int128>> minor(k, std::vector<__int128>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = dc(i, j);
    if (bareiss_determinant(std::move(minor)) <= 0) return false;
  }
  return true;
}

WeylElement coxeter_element(CartanData const& data) {
  WeylElement c{IntMatrix::identity(data.rank()), {}};
  for (std::size_t i = 0; i < data.rank(); ++i) c = compose(c, simple_reflection(data, i));
  return c;
}

AbsoluteLengthTable::AbsoluteLengthTable(CartanData const& data) {
  if (!is_finite_type(data)) throw Error(ErrorCode::InfiniteType, "absolute length needs finite type");
  for (auto const& beta : positive_roots(data)) reflections_.push_back(reflection_matrix(data, beta));

  IntMatrix const id = IntMatrix::identity(data.rank());
  length_.emplace(id.data(), 0);
  std::deque<IntMatrix> queue{id};
  while (!queue.empty()) {
    IntMatrix const w = queue.front();
    queue.pop_front();
    int const d = length_.at(w.data());
    for (auto const& s : reflections_) {
      IntMatrix next = w * s.matrix;
      if (length_.emplace(next.data(), d + 1).second) {
        if (length_.size() > kMaxGroupOrder) {
          throw Error(ErrorCode::GroupTooLarge, "Weyl group exceeds " + std::to_string(kMaxGroupOrder));
        }
        queue.push_back(std::move(next));
      }
    }
  }
}

int AbsoluteLengthTable::length(WeylElement const& w) const {
  auto it = length_.find(w.matrix.data());
  if (it == length_.end()) throw Error(ErrorCode::InvariantBroken, "matrix is not an element of W");
  return it->second;
}

int absolute_length(CartanData const& data, WeylElement const& w) {
  return AbsoluteLengthTable(data).length(w);
}

}  // namespace schurlat
