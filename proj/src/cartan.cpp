#include "schurlat/cartan.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "schurlat/error.hpp"

namespace schurlat {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer addition overflow");
  }
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  }
  return r;
}

// ---------------------------------------------------------------------------
// RootVector

bool RootVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

bool RootVector::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x >= 0; });
}

bool RootVector::is_positive() const noexcept { return is_nonnegative() && !is_zero(); }

Int RootVector::max_abs() const noexcept {
  Int m = 0;
  for (Int x : coords_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

RootVector RootVector::operator-() const {
  RootVector r(*this);
  for (auto& x : r.coords_) x = -x;
  return r;
}

RootVector& RootVector::operator+=(RootVector const& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

RootVector& RootVector::operator-=(RootVector const& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], -other.coords_[i]);
  return *this;
}

RootVector operator*(Int k, RootVector v) {
  for (auto& x : v.coords_) x = checked_mul(k, x);
  return v;
}

std::string RootVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, RootVector const& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out(r, c) = checked_add(out(r, c), checked_mul(a, other(k, c)));
    }
  return out;
}

RootVector IntMatrix::operator*(RootVector const& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  RootVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = checked_add(acc, checked_mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CartanData

namespace {

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

CartanData validate(IntMatrix const& c, std::vector<Int> const& d,
                    std::vector<std::pair<std::size_t, std::size_t>> const& omega) {
  std::size_t const n = c.rows();
  if (n == 0 || c.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "C must be a non-empty square matrix");
  }
  if (d.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "D has length " + std::to_string(d.size()) + ", expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] <= 0) {
      throw Error(ErrorCode::NonPositiveSymmetrizer, "c_" + std::to_string(i + 1) + " <= 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) != 2) throw Error(ErrorCode::BadDiagonal, "C" + at(i, i) + " != 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) throw Error(ErrorCode::BadOffDiagonal, "C" + at(i, j) + " > 0");
      if ((c(i, j) == 0) != (c(j, i) == 0)) {
        throw Error(ErrorCode::BadOffDiagonal, "zero pattern not symmetric at " + at(i, j));
      }
    }

  CartanData out;
  out.n_ = n;
  out.c_ = c;
  out.d_ = d;
  out.dc_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.dc_(i, j) = checked_mul(d[i], c(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (out.dc_(i, j) != out.dc_(j, i)) {
        throw Error(ErrorCode::NonSymmetrizable, "DC not symmetric at " + at(i, j));
      }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [i, j] : omega) {
    if (i >= n || j >= n) throw Error(ErrorCode::BadOrientation, "index out of range in " + at(i, j));
    if (i >= j) {
      throw Error(ErrorCode::BadOrientation, at(i, j) + " violates the i<j convention");
    }
    if (c(i, j) == 0) throw Error(ErrorCode::BadOrientation, at(i, j) + " but C" + at(i, j) + " = 0");
    if (!seen.insert({i, j}).second) throw Error(ErrorCode::BadOrientation, "duplicate " + at(i, j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (c(i, j) < 0 && !seen.count({i, j})) {
        throw Error(ErrorCode::BadOrientation, "edge " + at(i, j) + " has no orientation");
      }
  out.omega_.assign(seen.begin(), seen.end());

  Int l = 1;
  for (Int ci : d) l = checked_mul(l / std::gcd(l, ci), ci);
  out.lcm_ = l;
  return out;
}

namespace {

void check_dims(CartanData const& data, RootVector const& u, RootVector const& v) {
  if (u.size() != data.rank() || v.size() != data.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from rank " +
                                                   std::to_string(data.rank()));
  }
}

}  // namespace

Int euler_form(CartanData const& data, RootVector const& u, RootVector const& v) {
  check_dims(data, u, v);
  std::size_t const n = data.rank();
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    acc = checked_add(acc, checked_mul(data.symmetrizer(i), checked_mul(u[i], v[i])));
    for (std::size_t j = 0; j < i; ++j) {
      if (data.cartan(i, j) == 0 || v[j] == 0) continue;
      Int const gram = checked_mul(data.symmetrizer(i), data.cartan(i, j));
      acc = checked_add(acc, checked_mul(gram, checked_mul(u[i], v[j])));
    }
  }
  return acc;
}

Int sym_form(CartanData const& data, RootVector const& u, RootVector const& v) {
  check_dims(data, u, v);
  RootVector const w = data.symmetrized() * v;
  Int acc = 0;
  for (std::size_t i = 0; i < data.rank(); ++i) acc = checked_add(acc, checked_mul(u[i], w[i]));
  return acc;
}

LocalConstants local_constants(CartanData const& data, std::size_t i, std::size_t j) {
  if (i >= data.rank() || j >= data.rank() || i == j || data.cartan(i, j) == 0) {
    throw Error(ErrorCode::NotAdjacent, "vertices " + at(i, j) + " are not adjacent");
  }
  Int const cij = -data.cartan(i, j);
  Int const cji = -data.cartan(j, i);
  LocalConstants lc{};
  lc.g = std::gcd(cij, cji);
  lc.f_ij = cij / lc.g;
  lc.f_ji = cji / lc.g;
  lc.k = std::gcd(data.symmetrizer(i), data.symmetrizer(j));
  lc.l = std::lcm(data.symmetrizer(i), data.symmetrizer(j));
  return lc;
}

CartanData transpose_data(CartanData const& data) {
  std::vector<Int> dprime(data.rank());
  for (std::size_t i = 0; i < data.rank(); ++i) dprime[i] = data.lcm() / data.symmetrizer(i);
  return validate(data.cartan().transpose(), dprime, data.orientation());
}

CartanData scale_symmetrizer(CartanData const& data, Int k) {
  std::vector<Int> d = data.symmetrizer();
  for (auto& x : d) x = checked_mul(x, k);
  return validate(data.cartan(), d, data.orientation());
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> linear_orientation(IntMatrix const& c) {
  std::vector<std::pair<std::size_t, std::size_t>> omega;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i + 1; j < c.cols(); ++j)
      if (c(i, j) < 0) omega.emplace_back(i, j);
  return omega;
}

}  // namespace

CartanData named_datum(std::string const& name) {
  IntMatrix c;
  std::vector<Int> d;
  if (name == "A1") {
    c = IntMatrix{{2}};
    d = {1};
  } else if (name == "A2") {
    c = IntMatrix{{2, -1}, {-1, 2}};
    d = {1, 1};
  } else if (name == "A3") {
    c = IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    d = {1, 1, 1};
  } else if (name == "B2") {
    c = IntMatrix{{2, -1}, {-2, 2}};
    d = {2, 1};
  } else if (name == "B3") {
    c = IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    d = {2, 2, 1};
  } else if (name == "C3") {
    c = IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
    d = {1, 1, 2};
  } else if (name == "G2") {
    c = IntMatrix{{2, -1}, {-3, 2}};
    d = {3, 1};
  } else if (name == "C2~") {
    c = IntMatrix{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}};
    d = {2, 1, 2};
  } else {
    throw Error(ErrorCode::ParseError, "unknown named datum '" + name + "'");
  }
  return validate(c, d, linear_orientation(c));
}

std::vector<std::string> named_data() { return {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "C2~"}; }

}  // namespace schurlat
