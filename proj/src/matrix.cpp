#include "sysrep/matrix.hpp"

#include <sstream>

namespace sysrep {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Element& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> row_major)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  for (const auto& e : data_) {
    if (!(e.field() == field_)) throw Error(ErrorCode::FieldMismatch, "matrix entry outside the matrix field");
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Element> data;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (auto v : row) data.push_back(field.from_int(v));
  }
  return Matrix(field, r, c, std::move(data));
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::block_diagonal(Field field, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(field, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    }
    off += b.rows();
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Element& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  const Field& f = a.field_;
  Matrix r(f, a.rows_, b.cols_);
  if (f.kind() == FieldKind::Prime) {
    // Residue fast path: accumulate in 64 bits, reduce every few terms.
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> bv(b.data_.size());
    for (std::size_t i = 0; i < bv.size(); ++i) bv[i] = b.data_[i].residue();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k).residue();
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * bv[k * b.cols_ + j]) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.from_int(static_cast<std::int64_t>(acc[j]));
    }
    return r;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Matrix operator*(const Element& c, const Matrix& a) {
  Matrix r = a;
  for (auto& e : r.data_) e = c * e;
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix columns");
  Vector r(a.rows_, a.field_.zero());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Element acc = a.field_.zero();
    for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix pow(const Matrix& a, std::int64_t t) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix base = t < 0 ? inverse(a) : a;
  std::uint64_t e = t < 0 ? static_cast<std::uint64_t>(-(t + 1)) + 1 : static_cast<std::uint64_t>(t);
  Matrix result = Matrix::identity(a.field(), a.rows());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& r = out.reduced;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && r(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(lead, j));
    }
    const Element inv = r(lead, c).inverse();
    for (std::size_t j = c; j < cols; ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r(i, c).is_zero()) continue;
      const Element factor = r(i, c);
      for (std::size_t j = c; j < cols; ++j) r(i, j) -= factor * r(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon re = row_reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : re.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon re = row_reduce(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] == m.cols()) return std::nullopt;
    x[re.pivots[r]] = re.reduced(r, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  RowEchelon re = row_reduce(aug);
  if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = re.reduced(i, n + j);
  }
  return inv;
}

Element determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Element det = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return a.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Element inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Element factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

Matrix evaluate(const Polynomial& f, const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
  if (!(f.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "polynomial and matrix fields differ");
  const Matrix id = Matrix::identity(a.field(), a.rows());
  Matrix acc(a.field(), a.rows(), a.cols());
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i] * id;
  return acc;
}

Vector apply(const Polynomial& f, const Matrix& a, const Vector& v) {
  if (!(f.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "polynomial and matrix fields differ");
  if (v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix");
  Vector acc = zero_vector(a.field(), v.size());
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = a * acc + c[i] * v;
  return acc;
}

Matrix companion(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::DimensionMismatch, "companion matrix needs a monic polynomial of degree >= 1");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = f.field().one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.coefficient(i);
  return c;
}

KrylovResult krylov(const Matrix& a, const Vector& v) {
  if (v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix");
  const Field& f = a.field();
  struct Row {
    Vector w;
    std::size_t pivot;
    Polynomial combo;
  };
  std::vector<Row> echelon;
  KrylovResult out;
  Vector u = v;
  for (std::size_t k = 0;; ++k) {
    Vector w = u;
    Polynomial combo = Polynomial::monomial(f.one(), k);
    for (const auto& row : echelon) {
      if (w[row.pivot].is_zero()) continue;
      const Element c = w[row.pivot];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * row.w[i];
      combo -= c * row.combo;
    }
    std::size_t piv = 0;
    while (piv < w.size() && w[piv].is_zero()) ++piv;
    if (piv == w.size()) {
      out.annihilator = combo;
      return out;
    }
    const Element inv = w[piv].inverse();
    for (auto& e : w) e *= inv;
    echelon.push_back({std::move(w), piv, inv * combo});
    out.basis.push_back(u);
    u = a * u;
  }
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Polynomial m = Polynomial::constant(a.field().one());
  for (std::size_t i = 0; i < n && static_cast<std::size_t>(m.degree()) < n; ++i) {
    m = lcm(m, krylov(a, unit_vector(a.field(), n, i)).annihilator);
  }
  return m;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  Polynomial out = Polynomial::constant(a.field().one());
  for (const auto& d : smith_invariant_factors(a)) out *= d;
  return out;
}

}  // namespace sysrep
