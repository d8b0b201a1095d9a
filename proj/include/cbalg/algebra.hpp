#pragma once

// Finite-dimensional nonassociative algebras given by structure constants.
//
// The table stores e_i e_j for every ordered pair (0-based indices). An
// algebra built with Convention::anticommutative is specified by its i < j
// products only; the remaining entries are synthesised as e_j e_i = -e_i e_j
// and e_i e_i = 0.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cbalg/error.hpp"
#include "cbalg/field.hpp"
#include "cbalg/linalg.hpp"

namespace cbalg {

enum class Convention { general, anticommutative };
enum class Side { right, left };

template <Field F>
struct Term {
  std::size_t k;
  Scalar<F> c;
};

// e_left * e_right = sum of c * e_k over the terms (0-based).
template <Field F>
struct Product {
  std::size_t left;
  std::size_t right;
  std::vector<Term<F>> terms;
};

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

template <Field F>
class Algebra {
 public:
  using scalar = Scalar<F>;
  using element = Element<F>;

  // The abelian algebra of dimension n.
  Algebra(F field, std::size_t n, Convention convention = Convention::general)
      : field_(field),
        dim_(n),
        table_(n * n, element(n, field.zero())),
        convention_(convention),
        labels_(default_labels(n)) {}

  static Algebra from_products(F field, std::size_t n, const std::vector<Product<F>>& products,
                               Convention convention, std::vector<std::string> labels = {}) {
    Algebra a(field, n, convention);
    for (const auto& p : products) {
      if (p.left >= n || p.right >= n) {
        throw error(errc::bad_index, "product index out of range for dimension " + std::to_string(n));
      }
      if (convention == Convention::anticommutative) {
        if (p.left == p.right) {
          throw error(errc::diagonal_in_anticommutative,
                      "square of e" + std::to_string(p.left + 1) + " given for an anticommutative table");
        }
        if (p.left > p.right) {
          throw error(errc::bad_index, "anticommutative tables list only i < j products");
        }
      }
      for (const auto& t : p.terms) {
        if (t.k >= n) throw error(errc::bad_index, "result index out of range for dimension " + std::to_string(n));
        a.table_[p.left * n + p.right][t.k] += t.c;
        if (convention == Convention::anticommutative) a.table_[p.right * n + p.left][t.k] -= t.c;
      }
    }
    a.set_labels(std::move(labels));
    return a;
  }

  // table[i * n + j] = e_i e_j.
  static Algebra from_table(F field, std::size_t n, std::vector<element> table,
                            Convention convention = Convention::general, std::vector<std::string> labels = {}) {
    if (table.size() != n * n) throw error(errc::dimension_mismatch, "table must have n*n entries");
    for (const auto& v : table) {
      if (v.size() != n) throw error(errc::dimension_mismatch, "table entry has wrong length");
    }
    Algebra a(field, n, convention);
    a.table_ = std::move(table);
    if (convention == Convention::anticommutative) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(a.product(i, i))) throw error(errc::not_anti_commutative, "nonzero square in table");
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!is_zero(add(a.product(i, j), a.product(j, i)))) {
            throw error(errc::not_anti_commutative, "table is not antisymmetric");
          }
        }
      }
    }
    a.set_labels(std::move(labels));
    return a;
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Convention convention() const { return convention_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const element& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<element>& table() const { return table_; }

  element zero() const { return element(dim_, field_.zero()); }
  element basis(std::size_t i) const { return unit_vector(field_, dim_, i); }

  // Same field and structure constants; labels and storage convention are presentation only.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void set_labels(std::vector<std::string> labels) {
    if (labels.empty()) return;
    if (labels.size() != dim_) throw error(errc::dimension_mismatch, "label count differs from dimension");
    labels_ = std::move(labels);
  }

  F field_;
  std::size_t dim_;
  std::vector<element> table_;
  Convention convention_;
  std::vector<std::string> labels_;
};

template <Field F>
void require_element(const Algebra<F>& a, const Element<F>& x) {
  if (x.size() != a.dim()) {
    throw error(errc::dimension_mismatch, "element of length " + std::to_string(x.size()) +
                                              " in algebra of dimension " + std::to_string(a.dim()));
  }
}

template <Field F>
void require_subspace(const Algebra<F>& a, const Subspace<F>& s) {
  if (s.ambient_dim() != a.dim() || !(s.field() == a.field())) {
    throw error(errc::dimension_mismatch, "subspace does not live in this algebra");
  }
}

template <Field F>
Element<F> multiply(const Algebra<F>& a, const Element<F>& x, const Element<F>& y) {
  require_element(a, x);
  require_element(a, y);
  Element<F> out = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], a.product(i, j));
    }
  }
  return out;
}

// Matrix of a -> a*x (right) or a -> x*a (left); column i is the image of e_i.
template <Field F>
Matrix<F> mul_operator(const Algebra<F>& a, const Element<F>& x, Side side) {
  require_element(a, x);
  const std::size_t n = a.dim();
  Matrix<F> m(a.field(), n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t t = 0; t < n; ++t) {
      if (x[t].is_zero()) continue;
      const auto& img = side == Side::right ? a.product(col, t) : a.product(t, col);
      for (std::size_t r = 0; r < n; ++r) {
        if (!img[r].is_zero()) m(r, col) += x[t] * img[r];
      }
    }
  }
  return m;
}

// span{u v : u in U, v in V}, from basis products.
template <Field F>
Subspace<F> subspace_product(const Algebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
  require_subspace(a, u);
  require_subspace(a, v);
  std::vector<Element<F>> products;
  const auto ub = u.basis_vectors();
  const auto vb = v.basis_vectors();
  for (const auto& x : ub)
    for (const auto& y : vb) products.push_back(multiply(a, x, y));
  return Subspace<F>::span(a.field(), a.dim(), products);
}

template <Field F>
Subspace<F> whole(const Algebra<F>& a) {
  return Subspace<F>::full(a.field(), a.dim());
}

struct IdealReport {
  bool right_closed;  // I·A ⊆ I
  bool left_closed;   // A·I ⊆ I
  bool is_ideal() const { return right_closed && left_closed; }
};

template <Field F>
IdealReport ideal_report(const Algebra<F>& a, const Subspace<F>& i) {
  const auto all = whole(a);
  return {i.contains(subspace_product(a, i, all)), i.contains(subspace_product(a, all, i))};
}

// Two-sided: I·A ⊆ I and A·I ⊆ I.
template <Field F>
bool is_ideal(const Algebra<F>& a, const Subspace<F>& i) {
  return ideal_report(a, i).is_ideal();
}

template <Field F>
bool is_subalgebra(const Algebra<F>& a, const Subspace<F>& s) {
  return s.contains(subspace_product(a, s, s));
}

// Smallest two-sided ideal containing S.
template <Field F>
Subspace<F> ideal_closure(const Algebra<F>& a, Subspace<F> s) {
  require_subspace(a, s);
  const auto all = whole(a);
  for (;;) {
    auto next = sum(sum(s, subspace_product(a, s, all)), subspace_product(a, all, s));
    if (next == s) return s;
    s = std::move(next);
  }
}

template <Field F>
struct Quotient {
  Algebra<F> algebra;
  Matrix<F> projection;                // dim(A/I) x dim(A)
  std::vector<std::size_t> complement;  // ambient indices of the quotient basis
};

// A/I on the basis of ambient unit vectors at the non-pivot columns of I.
template <Field F>
Quotient<F> quotient(const Algebra<F>& a, const Subspace<F>& ideal) {
  require_subspace(a, ideal);
  if (!is_ideal(a, ideal)) throw error(errc::not_an_ideal, "quotient by a subspace that is not a two-sided ideal");
  const auto free = ideal.free_columns();
  const std::size_t m = free.size();
  auto project = [&](const Element<F>& v) {
    const auto r = ideal.reduce(v);
    Element<F> out;
    out.reserve(m);
    for (auto c : free) out.push_back(r[c]);
    return out;
  };
  Matrix<F> proj(a.field(), m, a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const auto img = project(a.basis(c));
    for (std::size_t r = 0; r < m; ++r) proj(r, c) = img[r];
  }
  std::vector<Element<F>> table;
  table.reserve(m * m);
  for (auto i : free)
    for (auto j : free) table.push_back(project(a.product(i, j)));
  std::vector<std::string> labels;
  for (auto c : free) labels.push_back(a.labels()[c]);
  auto q = Algebra<F>::from_table(a.field(), m, std::move(table), a.convention(), std::move(labels));
  return {std::move(q), std::move(proj), free};
}

template <Field F>
struct Restriction {
  Algebra<F> algebra;
  Matrix<F> inclusion;  // dim(A) x dim(S); column a is the a-th basis vector of S
};

template <Field F>
Restriction<F> induced_subalgebra(const Algebra<F>& a, const Subspace<F>& s) {
  require_subspace(a, s);
  if (!is_subalgebra(a, s)) throw error(errc::not_closed, "subspace is not closed under the product");
  const auto basis = s.basis_vectors();
  const std::size_t m = basis.size();
  std::vector<Element<F>> table;
  table.reserve(m * m);
  for (const auto& x : basis)
    for (const auto& y : basis) table.push_back(s.coordinates(multiply(a, x, y)));
  auto sub = Algebra<F>::from_table(a.field(), m, std::move(table), a.convention());
  return {std::move(sub), Matrix<F>::from_columns(a.field(), a.dim(), basis)};
}

template <Field F>
Algebra<F> direct_sum(const Algebra<F>& a1, const Algebra<F>& a2) {
  if (!(a1.field() == a2.field())) throw error(errc::field_mismatch, "direct sum of algebras over different fields");
  const std::size_t n1 = a1.dim(), n = a1.dim() + a2.dim();
  std::vector<Element<F>> table(n * n, Element<F>(n, a1.field().zero()));
  for (std::size_t i = 0; i < a1.dim(); ++i)
    for (std::size_t j = 0; j < a1.dim(); ++j)
      for (std::size_t k = 0; k < a1.dim(); ++k) table[i * n + j][k] = a1.product(i, j)[k];
  for (std::size_t i = 0; i < a2.dim(); ++i)
    for (std::size_t j = 0; j < a2.dim(); ++j)
      for (std::size_t k = 0; k < a2.dim(); ++k) table[(n1 + i) * n + n1 + j][n1 + k] = a2.product(i, j)[k];
  const bool anti = a1.convention() == Convention::anticommutative && a2.convention() == Convention::anticommutative;
  return Algebra<F>::from_table(a1.field(), n, std::move(table), anti ? Convention::anticommutative : Convention::general);
}

// The algebra whose product is x*y = g^{-1}((g x)(g y)); g is then an
// isomorphism from the result onto A.
template <Field F>
Algebra<F> change_basis(const Algebra<F>& a, const Matrix<F>& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) throw error(errc::dimension_mismatch, "basis change has wrong size");
  const auto ginv = inverse(g);
  if (!ginv) throw error(errc::dimension_mismatch, "basis change is not invertible");
  const std::size_t n = a.dim();
  std::vector<Element<F>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(g.column(i));
  std::vector<Element<F>> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(ginv->apply(multiply(a, images[i], images[j])));
  return Algebra<F>::from_table(a.field(), n, std::move(table), a.convention());
}

}  // namespace cbalg
