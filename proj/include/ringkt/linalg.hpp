#pragma once

// Exact integer and rational linear algebra.
//
// Conventions used throughout the library:
//   * matrices act on column vectors; lattices are spanned by basis COLUMNS;
//   * the Hermite normal form is lower triangular and obtained by unimodular
//     COLUMN operations: hnf(m) returns (h, u) with m * u = h;
//   * the Smith normal form returns (d, u, v) with u * m * v = d, the
//     diagonal nonnegative, d_i | d_{i+1}, zeros trailing.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ringkt/error.hpp"

namespace ringkt {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "set_column");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Columns [first, first+count).
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix power(const IntMatrix& m, unsigned long k);
RatMatrix to_rational(const IntMatrix& m);
/// Converts a rational matrix whose entries are all integers; nullopt otherwise.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Inverse over Q; throws DimensionMismatch for non-square, InvariantViolation if singular.
RatMatrix inverse(const RatMatrix& m);
/// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Coefficients c_0..c_n (ascending) of det(x*I - m).
RatVector characteristic_polynomial(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;       ///< lower-triangular column echelon form, m * u = h
  IntMatrix u;       ///< unimodular, cols x cols
  std::size_t rank;  ///< number of nonzero leading columns of h
};

/// Column Hermite normal form. Pivots are positive; entries to the left of a
/// pivot in its row lie in [0, pivot); columns beyond `rank` are zero.
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  ///< diagonal, nonnegative, d_i | d_{i+1}, zeros trailing
  IntMatrix u;  ///< unimodular, rows x rows
  IntMatrix v;  ///< unimodular, cols x cols
};

SmithForm snf(const IntMatrix& m);

/// Diagonal of the Smith form (length min(rows, cols)).
IntVector smith_diagonal(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x in Z^cols : m x = 0}. The
/// returned lattice is saturated.
IntMatrix integer_kernel(const IntMatrix& m);

/// A full-rank sublattice of Z^r given by a basis matrix whose COLUMNS are
/// linearly independent over Q.
class Lattice {
 public:
  /// Validates column independence.
  static Lattice from_basis(const IntMatrix& basis);
  /// Lattice spanned by arbitrary generator columns (dependent allowed).
  static Lattice from_generators(std::size_t ambient, const IntMatrix& generators);
  static Lattice full(std::size_t ambient);

  std::size_t ambient_rank() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

 private:
  explicit Lattice(IntMatrix basis) : basis_(std::move(basis)) {}
  IntMatrix basis_;
};

/// Integer coefficients c with basis * c = x, or nullopt when x is not in the
/// lattice. Throws DimensionMismatch if x has the wrong length.
std::optional<IntVector> lattice_membership(const IntVector& x, const Lattice& l);

/// {x : N x in l for some N > 0}, returned with an HNF basis.
Lattice saturate(const Lattice& l);

/// Index [outer : inner] for sublattices of equal rank; nullopt if inner is
/// not contained in outer or ranks differ.
std::optional<Integer> lattice_index(const Lattice& outer, const Lattice& inner);

/// Finitely generated abelian group Z^r / (column span of relations).
class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation(std::size_t generators, IntMatrix relations);

  std::size_t generator_count() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  /// Length generator_count; nonnegative, divisibility chain, zeros trailing.
  const IntVector& invariant_factors() const { return factors_; }

  std::size_t free_rank() const;
  /// Invariant factors > 1.
  IntVector torsion() const;
  /// Least common multiple of the torsion; 0 if there is a free part.
  Integer exponent() const;
  bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }
  /// e.g. "Z^2 + Z/2 + Z/6", or "0".
  std::string to_string() const;

 private:
  std::size_t generators_;
  IntMatrix relations_;
  IntVector factors_;
};

/// Z^rows / im(m).
AbelianGroupPresentation cokernel(const IntMatrix& m);

/// Floor division and nonnegative remainder for b > 0 (or general sign).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

}  // namespace ringkt
