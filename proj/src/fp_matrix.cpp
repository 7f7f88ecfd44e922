#include "schurlat/fp_matrix.hpp"

#include <algorithm>
#include <string>

#include "schurlat/error.hpp"

namespace schurlat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(value_type p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::BadField, std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::InvariantBroken, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

FpMatrix::FpMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](value_type x) { return x == 0; });
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<FpMatrix::value_type> FpMatrix::column(std::size_t c) const {
  std::vector<value_type> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

namespace {

void require(bool ok, char const* what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

}  // namespace

FpMatrix multiply(PrimeField const& f, FpMatrix const& a, FpMatrix const& b) {
  require(a.cols() == b.rows(), "matrix product shape");
  std::uint64_t const p = f.modulus();
  FpMatrix out(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t const x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) acc[c] = (acc[c] + x * b(k, c)) % p;
    }
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = static_cast<FpMatrix::value_type>(acc[c]);
  }
  return out;
}

FpMatrix add(PrimeField const& f, FpMatrix const& a, FpMatrix const& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = f.add(a.data()[i], b.data()[i]);
  return out;
}

FpMatrix subtract(PrimeField const& f, FpMatrix const& a, FpMatrix const& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return out;
}

FpMatrix scale(PrimeField const& f, FpMatrix a, FpMatrix::value_type k) {
  for (auto& x : a.data()) x = f.mul(x, k);
  return a;
}

FpMatrix power(PrimeField const& f, FpMatrix const& a, std::size_t k) {
  require(a.rows() == a.cols(), "power of a non-square matrix");
  FpMatrix out = FpMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = multiply(f, out, a);
  return out;
}

std::vector<FpMatrix::value_type> apply(PrimeField const& f, FpMatrix const& a,
                                        std::vector<FpMatrix::value_type> const& v) {
  require(a.cols() == v.size(), "matrix-vector shape");
  std::uint64_t const p = f.modulus();
  std::vector<FpMatrix::value_type> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc = (acc + static_cast<std::uint64_t>(a(r, c)) * v[c]) % p;
    out[r] = static_cast<FpMatrix::value_type>(acc);
  }
  return out;
}

FpMatrix hconcat(FpMatrix const& a, FpMatrix const& b) {
  require(a.rows() == b.rows(), "hconcat shape");
  FpMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

FpMatrix from_columns(std::size_t rows, std::vector<std::vector<FpMatrix::value_type>> const& cols) {
  FpMatrix out(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = cols[c][r];
  }
  return out;
}

RowEchelon rref(PrimeField const& f, FpMatrix a) {
  std::size_t const rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < cols && cur < rows; ++col) {
    std::size_t piv = cur;
    while (piv < rows && a(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != cur)
      for (std::size_t c = col; c < cols; ++c) std::swap(a(piv, c), a(cur, c));
    auto const s = f.inv(a(cur, col));
    nz.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (a(cur, c) == 0) continue;
      a(cur, c) = f.mul(a(cur, c), s);
      nz.push_back(c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == cur) continue;
      auto const factor = a(r, col);
      if (factor == 0) continue;
      for (std::size_t c : nz) a(r, c) = f.sub(a(r, c), f.mul(factor, a(cur, c)));
    }
    pivots.push_back(col);
    ++cur;
  }
  return RowEchelon{std::move(a), std::move(pivots)};
}

std::size_t rank(PrimeField const& f, FpMatrix const& a) {
  // Rank is computed on the thinner orientation.
  return a.rows() < a.cols() ? rref(f, a.transpose()).pivots.size() : rref(f, a).pivots.size();
}

FpMatrix nullspace(PrimeField const& f, FpMatrix const& a) {
  RowEchelon const e = rref(f, a);
  std::size_t const cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<FpMatrix::value_type>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FpMatrix::value_type> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return from_columns(cols, basis);
}

FpMatrix column_basis(PrimeField const& f, FpMatrix const& a) {
  RowEchelon const e = rref(f, a);
  std::vector<std::vector<FpMatrix::value_type>> cols;
  for (auto c : e.pivots) cols.push_back(a.column(c));
  return from_columns(a.rows(), cols);
}

FpMatrix complement_basis(PrimeField const& f, FpMatrix const& span) {
  std::size_t const n = span.rows();
  FpMatrix const candidates = hconcat(span, FpMatrix::identity(n));
  RowEchelon const e = rref(f, candidates);
  std::vector<std::vector<FpMatrix::value_type>> added;
  for (auto c : e.pivots)
    if (c >= span.cols()) added.push_back(candidates.column(c));
  return from_columns(n, added);
}

FpMatrix inverse(PrimeField const& f, FpMatrix const& a) {
  require(a.rows() == a.cols(), "inverse of a non-square matrix");
  std::size_t const n = a.rows();
  RowEchelon const e = rref(f, hconcat(a, FpMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::InvariantBroken, "matrix is singular");
  }
  FpMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

SpanCoordinates::SpanCoordinates(PrimeField const& f, FpMatrix basis) : field_(f), basis_(std::move(basis)) {
  // Pivot columns of basis^T are rows of basis on which it is invertible.
  RowEchelon const e = rref(f, basis_.transpose());
  if (e.pivots.size() != basis_.cols()) throw Error(ErrorCode::InvariantBroken, "basis is not independent");
  rows_ = e.pivots;
  FpMatrix square(rows_.size(), rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) square(i, j) = basis_(rows_[i], j);
  inverse_ = inverse(f, square);
}

std::vector<FpMatrix::value_type> SpanCoordinates::coordinates(std::vector<FpMatrix::value_type> const& v) const {
  std::vector<FpMatrix::value_type> restricted(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) restricted[i] = v[rows_[i]];
  return apply(field_, inverse_, restricted);
}

bool SpanCoordinates::in_span(std::vector<FpMatrix::value_type> const& v) const {
  return apply(field_, basis_, coordinates(v)) == v;
}

}  // namespace schurlat
