#pragma once

// Exact dense linear algebra: row echelon forms, kernels and the subspace
// lattice. Subspaces are kept in reduced row echelon form so that structural
// equality of the basis matrix is equality of subspaces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbalg/error.hpp"
#include "cbalg/field.hpp"

namespace cbalg {

template <class S>
bool is_zero(const std::vector<S>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

template <Field F>
Element<F> zero_vector(const F& field, std::size_t n) {
  return Element<F>(n, field.zero());
}

template <Field F>
Element<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  Element<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

// y += a * x
template <class S>
void axpy(std::vector<S>& y, const S& a, const std::vector<S>& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

template <class S>
std::vector<S> add(std::vector<S> a, const std::vector<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
std::vector<S> subtract(std::vector<S> a, const std::vector<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
std::vector<S> scaled(const S& s, std::vector<S> v) {
  for (auto& c : v) c *= s;
  return v;
}

template <class S>
std::vector<S> negated(std::vector<S> v) {
  for (auto& c : v) c = -c;
  return v;
}

template <Field F>
class Matrix {
 public:
  using scalar = Scalar<F>;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(F field, std::size_t cols, const std::vector<Element<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw error(errc::dimension_mismatch, "row length differs from column count");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(F field, std::size_t rows, const std::vector<Element<F>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw error(errc::dimension_mismatch, "column length differs from row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Element<F> row(std::size_t r) const {
    return Element<F>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  }

  Element<F> column(std::size_t c) const {
    Element<F> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  std::vector<Element<F>> row_vectors() const {
    std::vector<Element<F>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Element<F> apply(const Element<F>& v) const {
    if (v.size() != cols_) throw error(errc::dimension_mismatch, "matrix-vector size mismatch");
    Element<F> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const auto& e = (*this)(r, c);
        if (!e.is_zero()) out[r] += e * v[c];
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  // Canonical text of the entries; used as a set key for group closure.
  std::string key() const {
    std::string out;
    for (const auto& e : entries_) {
      out += e.str();
      out += ',';
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw error(errc::dimension_mismatch, "matrix product size mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar> entries_;
};

template <Field F>
struct Echelon {
  Matrix<F> form;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot is the first nonzero entry in
// column order, without any pivoting heuristic.
template <Field F>
Echelon<F> echelon(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const auto inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
Matrix<F> rref(const Matrix<F>& m) {
  return echelon(m).form;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return echelon(m).pivots.size();
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  auto e = echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.form(r, n + c);
  return inv;
}

template <Field F>
class Subspace {
 public:
  // Row space of the given vectors.
  static Subspace span(const F& field, std::size_t ambient, const std::vector<Element<F>>& vectors) {
    return row_space(Matrix<F>::from_rows(field, ambient, vectors));
  }

  static Subspace row_space(const Matrix<F>& m) {
    auto e = echelon(m);
    const std::size_t r = e.pivots.size();
    Matrix<F> basis(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = e.form(i, c);
    return Subspace(std::move(basis), std::move(e.pivots));
  }

  static Subspace zero(const F& field, std::size_t ambient) { return Subspace(Matrix<F>(field, 0, ambient), {}); }

  static Subspace full(const F& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, ambient), std::move(piv));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Element<F> basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Element<F>> basis_vectors() const { return basis_.row_vectors(); }

  // Non-pivot columns; the unit vectors there span a complement.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  // Remainder of v after clearing the pivot coordinates; zero iff v is a member.
  Element<F> reduce(Element<F> v) const {
    check_size(v);
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto a = v[pivots_[i]];
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (!basis_(i, c).is_zero()) v[c] -= a * basis_(i, c);
      }
    }
    return v;
  }

  bool contains(const Element<F>& v) const { return cbalg::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw error(errc::dimension_mismatch, "subspaces in different ambient spaces");
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  // Coordinates of a member in the echelon basis (its pivot entries).
  Element<F> coordinates(const Element<F>& v) const {
    if (!contains(v)) throw error(errc::dimension_mismatch, "vector is not in the subspace");
    Element<F> out;
    out.reserve(dim());
    for (auto p : pivots_) out.push_back(v[p]);
    return out;
  }

  Element<F> combine(const Element<F>& coords) const {
    if (coords.size() != dim()) throw error(errc::dimension_mismatch, "coordinate count differs from dimension");
    Element<F> v(ambient_dim(), field().zero());
    for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_vector(i));
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_size(const Element<F>& v) const {
    if (v.size() != ambient_dim()) throw error(errc::dimension_mismatch, "vector length differs from ambient dimension");
  }

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

// Null space {v : M v = 0}.
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  const auto e = echelon(m);
  std::vector<Element<F>> vectors;
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (k < e.pivots.size() && e.pivots[k] == f) {
      ++k;
      continue;
    }
    Element<F> v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.form(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(m.field(), m.cols(), vectors);
}

template <Field F>
void require_same_ambient(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw error(errc::dimension_mismatch, "ambient dimensions " + std::to_string(u.ambient_dim()) + " and " +
                                              std::to_string(v.ambient_dim()));
  }
}

template <Field F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  require_same_ambient(u, v);
  auto rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return Subspace<F>::span(u.field(), u.ambient_dim(), rows);
}

// U ∩ V from the kernel of [U^T | -V^T]: a·U = b·V.
template <Field F>
Subspace<F> intersection(const Subspace<F>& u, const Subspace<F>& v) {
  require_same_ambient(u, v);
  const std::size_t n = u.ambient_dim();
  Matrix<F> stacked(u.field(), n, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) stacked(r, i) = u.basis()(i, r);
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) stacked(r, u.dim() + j) = -v.basis()(j, r);
  const auto ker = kernel(stacked);
  std::vector<Element<F>> vectors;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    const auto w = ker.basis_vector(k);
    Element<F> x(n, u.field().zero());
    for (std::size_t i = 0; i < u.dim(); ++i) axpy(x, w[i], u.basis_vector(i));
    vectors.push_back(std::move(x));
  }
  return Subspace<F>::span(u.field(), n, vectors);
}

template <Field F>
struct Lattice {
  Subspace<F> sum;
  Subspace<F> intersection;
  bool u_contains_v;
  bool equal;
};

template <Field F>
Lattice<F> subspace_lattice(const Subspace<F>& u, const Subspace<F>& v) {
  return {sum(u, v), intersection(u, v), u.contains(v), u == v};
}

template <Field F>
bool member(const Subspace<F>& u, const Element<F>& v) {
  return u.contains(v);
}

// Matrices stacked vertically (all with the same column count).
template <Field F>
Matrix<F> vstack(const F& field, std::size_t cols, const std::vector<Matrix<F>>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw error(errc::dimension_mismatch, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix<F> out(field, rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
  }
  return out;
}

}  // namespace cbalg
