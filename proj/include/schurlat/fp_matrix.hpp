#ifndef SCHURLAT_FP_MATRIX_HPP_
#define SCHURLAT_FP_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace schurlat {

// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(value_type p);

  value_type modulus() const noexcept { return p_; }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  bool operator==(PrimeField const&) const = default;

 private:
  value_type p_;
};

bool is_prime(std::uint64_t n);

// Dense row-major matrix with entries in [0, p).
class FpMatrix {
 public:
  using value_type = PrimeField::value_type;

  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FpMatrix(std::initializer_list<std::initializer_list<value_type>> rows);
  static FpMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<value_type> const& data() const noexcept { return data_; }
  std::vector<value_type>& data() noexcept { return data_; }

  bool is_zero() const noexcept;
  FpMatrix transpose() const;
  std::vector<value_type> column(std::size_t c) const;

  bool operator==(FpMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

FpMatrix multiply(PrimeField const& f, FpMatrix const& a, FpMatrix const& b);
FpMatrix add(PrimeField const& f, FpMatrix const& a, FpMatrix const& b);
FpMatrix subtract(PrimeField const& f, FpMatrix const& a, FpMatrix const& b);
FpMatrix scale(PrimeField const& f, FpMatrix a, FpMatrix::value_type k);
FpMatrix power(PrimeField const& f, FpMatrix const& a, std::size_t k);
std::vector<FpMatrix::value_type> apply(PrimeField const& f, FpMatrix const& a,
                                        std::vector<FpMatrix::value_type> const& v);

// Columns [a | b].
FpMatrix hconcat(FpMatrix const& a, FpMatrix const& b);
FpMatrix from_columns(std::size_t rows, std::vector<std::vector<FpMatrix::value_type>> const& cols);

struct RowEchelon {
  FpMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(PrimeField const& f, FpMatrix a);
std::size_t rank(PrimeField const& f, FpMatrix const& a);

// Basis of {x : a x = 0} as the columns of the result, one per free column of
// rref(a), with a 1 in that free position (deterministic).
FpMatrix nullspace(PrimeField const& f, FpMatrix const& a);

// Basis of the column space, chosen among the columns of a (pivot columns).
FpMatrix column_basis(PrimeField const& f, FpMatrix const& a);

// Columns of `span` (assumed independent) extended by standard unit vectors
// to a basis of the ambient space; returns only the added vectors.
FpMatrix complement_basis(PrimeField const& f, FpMatrix const& span);

FpMatrix inverse(PrimeField const& f, FpMatrix const& a);

// Coordinates of vectors lying in the span of a fixed set of independent
// columns: picks rows on which the basis is invertible and inverts there.
class SpanCoordinates {
 public:
  SpanCoordinates(PrimeField const& f, FpMatrix basis);

  std::size_t dimension() const noexcept { return basis_.cols(); }
  std::vector<FpMatrix::value_type> coordinates(std::vector<FpMatrix::value_type> const& v) const;
  bool in_span(std::vector<FpMatrix::value_type> const& v) const;

 private:
  PrimeField field_;
  FpMatrix basis_;
  std::vector<std::size_t> rows_;
  FpMatrix inverse_;
};

}  // namespace schurlat

#endif  // SCHURLAT_FP_MATRIX_HPP_
