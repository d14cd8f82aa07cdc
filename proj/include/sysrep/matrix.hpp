#pragma once

// Dense exact matrices over a Field: arithmetic, powers, row reduction,
// Krylov minimal polynomials and the Smith normal form of xI - A.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sysrep/field.hpp"
#include "sysrep/polynomial.hpp"

namespace sysrep {

using Vector = std::vector<Element>;

inline constexpr std::size_t kMaxDimension = 64;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Element& c, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> row_major);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix block_diagonal(Field field, const std::vector<Matrix>& blocks);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;

  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// A^t by binary exponentiation; negative t goes through the inverse.
Matrix pow(const Matrix& a, std::int64_t t);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& a);
Element determinant(const Matrix& a);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Kernel basis read off the RREF: one vector per free column, in increasing
/// column order, with a 1 in that free column.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Some x with m x = b, or std::nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// f(A) by Horner's scheme on matrices.
Matrix evaluate(const Polynomial& f, const Matrix& a);
/// f(A) v by Horner's scheme on vectors.
Vector apply(const Polynomial& f, const Matrix& a, const Vector& v);

/// Companion matrix of a monic f = x^d + c_{d-1} x^{d-1} + ... + c_0:
/// ones on the sub-diagonal, last column (-c_0, ..., -c_{d-1}).
Matrix companion(const Polynomial& f);

/// Krylov vectors v, Av, ..., A^{d-1}v together with the monic annihilator of v.
struct KrylovResult {
  Polynomial annihilator;
  std::vector<Vector> basis;
};
KrylovResult krylov(const Matrix& a, const Vector& v);

Polynomial minimal_polynomial(const Matrix& a);
/// Product of the invariant factors of xI - A.
Polynomial characteristic_polynomial(const Matrix& a);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(Field field, std::size_t n);
  /// xI - A.
  static PolyMatrix characteristic(const Matrix& a);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Evaluate every entry at a field element.
  Matrix evaluate_at(const Element& x) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += f * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Polynomial& f);
  /// col_i += f * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Polynomial& f);
  void scale_row(std::size_t i, const Element& c);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

struct SmithForm {
  std::vector<Polynomial> invariant_factors;  // d_1 | ... | d_n, monic
  PolyMatrix left;
  PolyMatrix right;  // left * (xI - A) * right = diag(d_1, ..., d_n)
};

/// Smith normal form of xI - A over k[x] with unimodular transforms,
/// verified by exact multiplication before returning.
SmithForm smith_normal_form(const Matrix& a);

/// The diagonal of the Smith form of xI - A, without transforms.
std::vector<Polynomial> smith_invariant_factors(const Matrix& a);

}  // namespace sysrep
