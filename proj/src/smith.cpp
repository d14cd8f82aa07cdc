#include "sysrep/matrix.hpp"

namespace sysrep {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(field)) {}

PolyMatrix PolyMatrix::identity(Field field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(field.one());
  return m;
}

PolyMatrix PolyMatrix::characteristic(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "xI - A needs a square matrix");
  const Field& f = a.field();
  PolyMatrix m(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(i, j) = i == j ? Polynomial(f, {-a(i, j), f.one()}) : Polynomial::constant(-a(i, j));
    }
  }
  return m;
}

Matrix PolyMatrix::evaluate_at(const Element& x) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(x);
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  PolyMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

void PolyMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void PolyMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void PolyMatrix::add_row_multiple(std::size_t i, std::size_t j, const Polynomial& f) {
  if (f.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!(*this)(j, c).is_zero()) (*this)(i, c) += f * (*this)(j, c);
  }
}

void PolyMatrix::add_col_multiple(std::size_t i, std::size_t j, const Polynomial& f) {
  if (f.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, j).is_zero()) (*this)(r, i) += (*this)(r, j) * f;
  }
}

void PolyMatrix::scale_row(std::size_t i, const Element& c) {
  for (std::size_t col = 0; col < cols_; ++col) (*this)(i, col) = c * (*this)(i, col);
}

namespace {

// Diagonalizes m in place; left/right (when non-null) accumulate the row and
// column operations.
std::vector<Polynomial> diagonalize(PolyMatrix& m, PolyMatrix* left, PolyMatrix* right) {
  const std::size_t n = m.rows();
  std::vector<Polynomial> diag;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot: nonzero entry of least degree, ties broken by (row, col).
      std::size_t pr = n, pc = n;
      int best = -1;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          const Polynomial& e = m(i, j);
          if (e.is_zero()) continue;
          if (best < 0 || e.degree() < best) {
            best = e.degree();
            pr = i;
            pc = j;
          }
        }
      }
      if (best < 0) break;
      m.swap_rows(k, pr);
      if (left) left->swap_rows(k, pr);
      m.swap_cols(k, pc);
      if (right) right->swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        DivMod qr = divmod(m(i, k), m(k, k));
        m.add_row_multiple(i, k, -qr.quotient);
        if (left) left->add_row_multiple(i, k, -qr.quotient);
        if (!m(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        DivMod qr = divmod(m(k, j), m(k, k));
        m.add_col_multiple(j, k, -qr.quotient);
        if (right) right->add_col_multiple(j, k, -qr.quotient);
        if (!m(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Divisibility repair: pull a non-multiple into row k and go again.
      bool repaired = false;
      for (std::size_t i = k + 1; i < n && !repaired; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!(m(i, j) % m(k, k)).is_zero()) {
            const Polynomial one = Polynomial::constant(m.field().one());
            m.add_row_multiple(k, i, one);
            if (left) left->add_row_multiple(k, i, one);
            repaired = true;
            break;
          }
        }
      }
      if (!repaired) break;
    }
    if (m(k, k).is_zero()) {
      diag.emplace_back(m.field());
      continue;
    }
    const Element inv = m(k, k).leading().inverse();
    m.scale_row(k, inv);
    if (left) left->scale_row(k, inv);
    diag.push_back(m(k, k));
  }
  return diag;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a) {
  const PolyMatrix start = PolyMatrix::characteristic(a);
  PolyMatrix m = start;
  const std::size_t n = a.rows();
  SmithForm out{{}, PolyMatrix::identity(a.field(), n), PolyMatrix::identity(a.field(), n)};
  out.invariant_factors = diagonalize(m, &out.left, &out.right);

  PolyMatrix expected(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) expected(i, i) = out.invariant_factors[i];
  if (!(out.left * start * out.right == expected)) {
    throw Error(ErrorCode::Internal, "Smith transforms failed verification");
  }
  return out;
}

std::vector<Polynomial> smith_invariant_factors(const Matrix& a) {
  PolyMatrix m = PolyMatrix::characteristic(a);
  return diagonalize(m, nullptr, nullptr);
}

}  // namespace sysrep
