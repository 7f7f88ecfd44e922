#ifndef SCHURLAT_CARTAN_HPP_
#define SCHURLAT_CARTAN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace schurlat {

using Int = std::int64_t;

// Checked 64-bit arithmetic; throws Error(Overflow) instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// Integer vector in the basis of simple roots. Also used for rank vectors
// and dimension vectors.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : coords_(n, 0) {}
  explicit RootVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  RootVector(std::initializer_list<Int> coords) : coords_(coords) {}

  static RootVector unit(std::size_t n, std::size_t i) {
    RootVector v(n);
    v.coords_[i] = 1;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::vector<Int> const& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  // All coordinates >= 0 and not all zero.
  bool is_positive() const noexcept;
  bool is_nonnegative() const noexcept;
  Int max_abs() const noexcept;

  RootVector operator-() const;
  RootVector& operator+=(RootVector const& other);
  RootVector& operator-=(RootVector const& other);
  friend RootVector operator+(RootVector a, RootVector const& b) { return a += b; }
  friend RootVector operator-(RootVector a, RootVector const& b) { return a -= b; }
  friend RootVector operator*(Int k, RootVector v);

  auto operator<=>(RootVector const&) const = default;
  bool operator==(RootVector const&) const = default;

  std::string str() const;

 private:
  std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, RootVector const& v);

// Dense square or rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<Int> const& data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator*(IntMatrix const& other) const;
  RootVector operator*(RootVector const& v) const;

  auto operator<=>(IntMatrix const&) const = default;
  bool operator==(IntMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Validated symmetrizable Cartan datum (C, D, Omega). Indices are 0-based
// internally; Omega pairs (i, j) satisfy i < j and mean an arrow j -> i in
// the associated algebra.
class CartanData {
 public:
  std::size_t rank() const noexcept { return n_; }
  IntMatrix const& cartan() const noexcept { return c_; }
  Int cartan(std::size_t i, std::size_t j) const { return c_(i, j); }
  std::vector<Int> const& symmetrizer() const noexcept { return d_; }
  Int symmetrizer(std::size_t i) const { return d_[i]; }
  std::vector<std::pair<std::size_t, std::size_t>> const& orientation() const noexcept {
    return omega_;
  }
  // lcm of all c_i
  Int lcm() const noexcept { return lcm_; }
  // diag(D) * C, symmetric.
  IntMatrix const& symmetrized() const noexcept { return dc_; }

  bool operator==(CartanData const& other) const {
    return c_ == other.c_ && d_ == other.d_ && omega_ == other.omega_;
  }

 private:
  friend CartanData validate(IntMatrix const&, std::vector<Int> const&,
                             std::vector<std::pair<std::size_t, std::size_t>> const&);
  std::size_t n_ = 0;
  IntMatrix c_;
  std::vector<Int> d_;
  std::vector<std::pair<std::size_t, std::size_t>> omega_;
  Int lcm_ = 1;
  IntMatrix dc_;
};

struct LocalConstants {
  Int g;
  Int f_ij;
  Int f_ji;
  Int k;
  Int l;
};

// Omega is given with 0-based indices; it is cross-checked against the zero
// pattern of C rather than inferred.
CartanData validate(IntMatrix const& c, std::vector<Int> const& d,
                    std::vector<std::pair<std::size_t, std::size_t>> const& omega);

// Non-symmetric bilinear form with <a_i,a_i> = c_i and, for (j,i) in Omega
// (j < i), <a_i,a_j> = c_i c_ij; every other pairing of simple roots is 0.
// Equals dim Hom - dim Ext^1 on rank vectors of locally free modules.
Int euler_form(CartanData const& data, RootVector const& u, RootVector const& v);

// u^T (DC) v = euler_form(u,v) + euler_form(v,u).
Int sym_form(CartanData const& data, RootVector const& u, RootVector const& v);

LocalConstants local_constants(CartanData const& data, std::size_t i, std::size_t j);

// (C^T, diag(c / c_i), Omega).
CartanData transpose_data(CartanData const& data);

// Same C and Omega with symmetrizer multiplied by k.
CartanData scale_symmetrizer(CartanData const& data, Int k);

// Named data used throughout tests and the repro commands: A1, A2, A3, B2,
// B3, C3, G2 with minimal symmetrizers, and C2~ with D = (2,1,2). All use
// the linear orientation {(1,2),(2,3),...}.
CartanData named_datum(std::string const& name);
std::vector<std::string> named_data();

}  // namespace schurlat

#endif  // SCHURLAT_CARTAN_HPP_
