#pragma once

// Builders for anti-commutative CB-algebras from a splitting A = (Z + B) + C,
// verification of a given splitting, the seven-dimensional example with
// A^3 != 0, a seeded random generator for test corpora, and liesation of
// Leibniz algebras.
//
// The splitting data: C has basis e_1..e_r, and
//   e_i e_j    = e_ij + z_ij   (e_ij in B, z_ij in Z, both antisymmetric)
//   e_i e_jk   = z_ijk         (z alternating; zero on repeated indices)
//   B B = 0,  A Z = Z A = 0.
// Products of e_i with a general b in B are read off through any expression
// of b in terms of the e_jk; that is well defined exactly when every linear
// dependency among the e_jk is also one among the z_ijk.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cbalg/algebra.hpp"
#include "cbalg/identities.hpp"
#include "cbalg/structure.hpp"

namespace cbalg {

template <Field F>
class DecompositionData {
 public:
  DecompositionData(F field, std::size_t r, std::size_t dim_b, std::size_t dim_z)
      : field_(field),
        r_(r),
        dim_b_(dim_b),
        dim_z_(dim_z),
        e_(r * r, Element<F>(dim_b, field.zero())),
        zij_(r * r, Element<F>(dim_z, field.zero())),
        zijk_(r * r * r, Element<F>(dim_z, field.zero())) {}

  const F& field() const { return field_; }
  std::size_t r() const { return r_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim_z() const { return dim_z_; }
  std::size_t dim() const { return r_ + dim_b_ + dim_z_; }

  // Sets e_ij (and e_ji = -e_ij); 0-based, i != j.
  void set_e(std::size_t i, std::size_t j, Element<F> coords) {
    check_pair(i, j);
    check_len(coords, dim_b_);
    e_[j * r_ + i] = negated(coords);
    e_[i * r_ + j] = std::move(coords);
  }

  void set_zij(std::size_t i, std::size_t j, Element<F> coords) {
    check_pair(i, j);
    check_len(coords, dim_z_);
    zij_[j * r_ + i] = negated(coords);
    zij_[i * r_ + j] = std::move(coords);
  }

  // Sets z_ijk on distinct indices and extends it to all permutations by sign.
  void set_zijk(std::size_t i, std::size_t j, std::size_t k, Element<F> coords) {
    if (i >= r_ || j >= r_ || k >= r_) throw error(errc::bad_index, "z_ijk index out of range");
    if (i == j || j == k || i == k) throw error(errc::bad_index, "z_ijk is zero on repeated indices");
    check_len(coords, dim_z_);
    const std::array<std::size_t, 3> idx{i, j, k};
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const auto& s = perms[p];
      zijk_[(idx[s[0]] * r_ + idx[s[1]]) * r_ + idx[s[2]]] = p < 3 ? coords : negated(coords);
    }
  }

  const Element<F>& e(std::size_t i, std::size_t j) const { return e_[i * r_ + j]; }
  const Element<F>& zij(std::size_t i, std::size_t j) const { return zij_[i * r_ + j]; }
  const Element<F>& zijk(std::size_t i, std::size_t j, std::size_t k) const { return zijk_[(i * r_ + j) * r_ + k]; }

 private:
  void check_pair(std::size_t i, std::size_t j) const {
    if (i >= r_ || j >= r_) throw error(errc::bad_index, "pair index out of range");
    if (i == j) throw error(errc::bad_index, "e_ii and z_ii are zero");
  }
  static void check_len(const Element<F>& v, std::size_t n) {
    if (v.size() != n) throw error(errc::bad_dims, "coordinate vector has length " + std::to_string(v.size()) +
                                                       ", expected " + std::to_string(n));
  }

  F field_;
  std::size_t r_, dim_b_, dim_z_;
  std::vector<Element<F>> e_, zij_, zijk_;
};

struct ConditionEntry {
  bool holds = true;
  std::string witness;
};

struct ConditionReport {
  std::array<ConditionEntry, 6> conditions;  // conditions[0] is (1)

  bool well_defined() const { return conditions[4].holds; }
  bool center_exact() const { return conditions[5].holds; }
  bool through(std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i) {
      if (!conditions[i].holds) return false;
    }
    return true;
  }
  bool all() const { return through(6); }
};

template <Field F>
struct Decomposed {
  Algebra<F> algebra;
  ConditionReport report;
  Subspace<F> Z, B, C;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = j + 1; k < r; ++k) out.emplace_back(j, k);
  return out;
}

inline std::string pair_name(std::size_t j, std::size_t k) {
  return std::to_string(j + 1) + std::to_string(k + 1);
}

template <Field F>
std::string describe(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Element<F>& lambda) {
  std::string out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (lambda[p].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += lambda[p].str() + "*e" + pair_name(pairs[p].first, pairs[p].second);
  }
  return out;
}

template <Field F>
Subspace<F> coordinate_block(const F& field, std::size_t n, std::size_t from, std::size_t count) {
  std::vector<Element<F>> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(unit_vector(field, n, from + i));
  return Subspace<F>::span(field, n, v);
}

template <Field F>
ConditionEntry center_condition(const Algebra<F>& a, const Subspace<F>& z, const Subspace<F>& bc) {
  const auto zc = center(a);
  if (!intersection(zc, bc).is_zero()) return {false, "a nonzero element of B+C is central"};
  if (!(zc == z)) return {false, "Z is not the center of A"};
  return {};
}

}  // namespace detail

// Assembles the algebra on the basis (C, B, Z). Throws IllDefined when the
// e_ij fail to span B or a dependency among them is not one among the z_ijk.
template <Field F>
Decomposed<F> build_from_decomposition(const DecompositionData<F>& d) {
  const F& field = d.field();
  const std::size_t r = d.r(), nb = d.dim_b(), nz = d.dim_z(), n = d.dim();
  const auto pairs = detail::ordered_pairs(r);
  if (nb > pairs.size()) throw error(errc::bad_dims, "dim B exceeds r(r-1)/2");

  // Columns are the B-coordinates of e_jk, j < k.
  Matrix<F> lambda_map(field, nb, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& v = d.e(pairs[p].first, pairs[p].second);
    for (std::size_t m = 0; m < nb; ++m) lambda_map(m, p) = v[m];
  }
  const auto ech = echelon(lambda_map);
  if (ech.pivots.size() != nb) throw error(errc::ill_defined, "condition (4): the e_ij do not span B");

  ConditionReport report;
  const auto deps = kernel(lambda_map);
  for (std::size_t t = 0; t < deps.dim(); ++t) {
    const auto lam = deps.basis_vector(t);
    for (std::size_t i = 0; i < r; ++i) {
      Element<F> s(nz, field.zero());
      for (std::size_t p = 0; p < pairs.size(); ++p) axpy(s, lam[p], d.zijk(i, pairs[p].first, pairs[p].second));
      if (!is_zero(s)) {
        throw error(errc::ill_defined, "condition (5): " + detail::describe<F>(pairs, lam) +
                                           " = 0 in B but the matching z_" + std::to_string(i + 1) +
                                           "jk combination is nonzero");
      }
    }
  }

  // Preimage of each B basis vector through the pivot columns.
  Matrix<F> square(field, nb, nb);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t c = 0; c < nb; ++c) square(m, c) = lambda_map(m, ech.pivots[c]);
  const auto square_inv = *inverse(square);

  std::vector<Product<F>> products;
  auto push = [&](std::size_t i, std::size_t j, const Element<F>& v) {
    Product<F> pr{i, j, {}};
    for (std::size_t k = 0; k < n; ++k) {
      if (!v[k].is_zero()) pr.terms.push_back({k, v[k]});
    }
    if (!pr.terms.empty()) products.push_back(std::move(pr));
  };
  for (const auto& [i, j] : pairs) {
    Element<F> v(n, field.zero());
    for (std::size_t m = 0; m < nb; ++m) v[r + m] = d.e(i, j)[m];
    for (std::size_t m = 0; m < nz; ++m) v[r + nb + m] = d.zij(i, j)[m];
    push(i, j, v);
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t m = 0; m < nb; ++m) {
      Element<F> v(n, field.zero());
      for (std::size_t c = 0; c < nb; ++c) {
        const auto& coef = square_inv(c, m);
        const auto& [j, k] = pairs[ech.pivots[c]];
        const auto& z = d.zijk(i, j, k);
        for (std::size_t q = 0; q < nz; ++q) {
          if (!z[q].is_zero()) v[r + nb + q] += coef * z[q];
        }
      }
      push(i, r + m, v);
    }
  }
  auto a = Algebra<F>::from_products(field, n, products, Convention::anticommutative);

  auto zsp = detail::coordinate_block(field, n, r + nb, nz);
  auto bsp = detail::coordinate_block(field, n, r, nb);
  auto csp = detail::coordinate_block(field, n, 0, r);
  if (auto ac = is_anti_commutative(a); !ac) report.conditions[2] = {false, "product is not anti-commutative"};
  if (auto aa = is_anti_associative(a); !aa) report.conditions[2] = {false, "product is not anti-associative"};
  report.conditions[5] = detail::center_condition(a, zsp, sum(bsp, csp));
  return {std::move(a), std::move(report), std::move(zsp), std::move(bsp), std::move(csp)};
}

// Checks conditions (1)-(6) for a given splitting A = (Z + B) + C, using the
// echelon basis of C as e_1..e_r. Condition (6) is read as: the center of A
// equals Z, equivalently Z(A) meets B + C trivially.
template <Field F>
ConditionReport verify_decomposition(const Algebra<F>& a, const Subspace<F>& z, const Subspace<F>& b,
                                     const Subspace<F>& c) {
  const std::size_t n = a.dim();
  const F& field = a.field();
  require_subspace(a, z);
  require_subspace(a, b);
  require_subspace(a, c);
  if (z.dim() + b.dim() + c.dim() != n || !sum(sum(z, b), c).is_full()) {
    throw error(errc::not_a_direct_sum, "Z, B and C do not split A as a direct sum");
  }
  std::vector<Element<F>> cols = z.basis_vectors();
  for (auto& v : b.basis_vectors()) cols.push_back(std::move(v));
  for (auto& v : c.basis_vectors()) cols.push_back(std::move(v));
  const auto to_parts = *inverse(Matrix<F>::from_columns(field, n, cols));
  const std::size_t nz = z.dim(), nb = b.dim(), r = c.dim();
  auto part = [&](const Element<F>& v, std::size_t from, std::size_t count) {
    const auto coords = to_parts.apply(v);
    return Element<F>(coords.begin() + from, coords.begin() + from + count);
  };
  auto z_part = [&](const Element<F>& v) { return part(v, 0, nz); };
  auto b_part = [&](const Element<F>& v) { return part(v, nz, nb); };
  auto c_part = [&](const Element<F>& v) { return part(v, nz + nb, r); };

  ConditionReport report;
  const auto cb = c.basis_vectors();
  const auto bb = b.basis_vectors();
  const auto zb = z.basis_vectors();

  for (std::size_t i = 0; i < r && report.conditions[0].holds; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!is_zero(c_part(multiply(a, cb[i], cb[j])))) {
        report.conditions[0] = {false, "e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " has a C component"};
        break;
      }
    }
    for (std::size_t m = 0; m < nb && report.conditions[0].holds; ++m) {
      const auto v = multiply(a, cb[i], bb[m]);
      if (!is_zero(b_part(v)) || !is_zero(c_part(v))) {
        report.conditions[0] = {false, "e" + std::to_string(i + 1) + " times a B basis vector leaves Z"};
      }
    }
  }

  for (std::size_t m = 0; m < nb && report.conditions[1].holds; ++m)
    for (std::size_t q = 0; q < nb; ++q) {
      if (!is_zero(multiply(a, bb[m], bb[q]))) {
        report.conditions[1] = {false, "B B != 0"};
        break;
      }
    }
  for (std::size_t m = 0; m < nz && report.conditions[1].holds; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(multiply(a, a.basis(i), zb[m])) || !is_zero(multiply(a, zb[m], a.basis(i)))) {
        report.conditions[1] = {false, "A Z != 0"};
        break;
      }
    }

  // e_jk and z_ijk as read off the product.
  std::vector<Element<F>> eb(r * r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) eb[j * r + k] = b_part(multiply(a, cb[j], cb[k]));
  auto zijk = [&](std::size_t i, std::size_t j, std::size_t k) {
    return z_part(multiply(a, cb[i], b.combine(eb[j * r + k])));
  };
  if (auto ac = is_anti_commutative(a); !ac) {
    report.conditions[2] = {false, "A is not anti-commutative"};
  } else {
    for (std::size_t i = 0; i < r && report.conditions[2].holds; ++i)
      for (std::size_t j = 0; j < r && report.conditions[2].holds; ++j)
        for (std::size_t k = 0; k < r; ++k) {
          const auto v = zijk(i, j, k);
          const bool ok = (i != j || is_zero(v)) && is_zero(add(v, zijk(j, i, k))) && is_zero(add(v, zijk(i, k, j)));
          if (!ok) {
            report.conditions[2] = {false, "z_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                               std::to_string(k + 1) + " is not alternating"};
            break;
          }
        }
  }

  const auto pairs = detail::ordered_pairs(r);
  Matrix<F> lambda_map(field, nb, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& v = eb[pairs[p].first * r + pairs[p].second];
    for (std::size_t m = 0; m < nb; ++m) lambda_map(m, p) = v[m];
  }
  if (rank(lambda_map) != nb) report.conditions[3] = {false, "the e_ij do not span B"};

  const auto deps = kernel(lambda_map);
  for (std::size_t t = 0; t < deps.dim() && report.conditions[4].holds; ++t) {
    const auto lam = deps.basis_vector(t);
    for (std::size_t i = 0; i < r; ++i) {
      Element<F> s(nz, field.zero());
      for (std::size_t p = 0; p < pairs.size(); ++p) axpy(s, lam[p], zijk(i, pairs[p].first, pairs[p].second));
      if (!is_zero(s)) {
        report.conditions[4] = {false, detail::describe<F>(pairs, lam) + " = 0 but the z combination is not"};
        break;
      }
    }
  }

  report.conditions[5] = detail::center_condition(a, z, sum(b, c));
  return report;
}

// e1e2 = e4, e1e3 = e5, e2e3 = e6, e1e6 = e7, e2e5 = -e7, e3e4 = e7.
template <Field F>
Algebra<F> example_seven(const F& field) {
  auto t = [&](std::size_t i, std::size_t j, std::size_t k, long long c) {
    return Product<F>{i - 1, j - 1, {{k - 1, field.from_int(c)}}};
  };
  return Algebra<F>::from_products(
      field, 7, {t(1, 2, 4, 1), t(1, 3, 5, 1), t(2, 3, 6, 1), t(1, 6, 7, 1), t(2, 5, 7, -1), t(3, 4, 7, 1)},
      Convention::anticommutative);
}

// The splitting behind example_seven: r = 3, B free on e12, e13, e23, z_123 = z.
template <Field F>
DecompositionData<F> example_seven_decomposition(const F& field) {
  DecompositionData<F> d(field, 3, 3, 1);
  d.set_e(0, 1, {field.one(), field.zero(), field.zero()});
  d.set_e(0, 2, {field.zero(), field.one(), field.zero()});
  d.set_e(1, 2, {field.zero(), field.zero(), field.one()});
  d.set_zijk(0, 1, 2, {field.one()});
  return d;
}

namespace detail {

template <Field F, class Rng>
Scalar<F> random_nonzero(const F& field, Rng& rng) {
  if constexpr (F::finite) {
    std::uniform_int_distribution<std::uint32_t> dist(1, field.order() - 1);
    return field.element(dist(rng));
  } else {
    std::uniform_int_distribution<int> dist(1, 6);
    const int v = dist(rng);
    return field.from_int(v <= 3 ? v : 3 - v);
  }
}

template <Field F, class Rng>
Scalar<F> random_scalar(const F& field, Rng& rng, double density) {
  std::bernoulli_distribution hit(density);
  return hit(rng) ? random_nonzero(field, rng) : field.zero();
}

template <Field F, class Rng>
Element<F> random_vector(const F& field, std::size_t n, Rng& rng, double density) {
  Element<F> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng, density));
  return v;
}

}  // namespace detail

// Splitting data with B free on the e_jk; z_ij and z_ijk coefficients are
// nonzero with probability `density`.
template <Field F>
DecompositionData<F> random_decomposition(std::uint64_t seed, const F& field, std::size_t r, std::size_t dim_z,
                                          double density) {
  std::mt19937_64 rng(seed);
  const auto pairs = detail::ordered_pairs(r);
  DecompositionData<F> d(field, r, pairs.size(), dim_z);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    d.set_e(pairs[p].first, pairs[p].second, unit_vector(field, pairs.size(), p));
    d.set_zij(pairs[p].first, pairs[p].second, detail::random_vector(field, dim_z, rng, density));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) d.set_zijk(i, j, k, detail::random_vector(field, dim_z, rng, density));
  return d;
}

template <Field F>
Algebra<F> random_cb_algebra(std::uint64_t seed, const F& field, std::size_t r, std::size_t dim_z, double density) {
  if (r < 1) throw error(errc::bad_dims, "random CB algebra needs r >= 1");
  return build_from_decomposition(random_decomposition(seed, field, r, dim_z, density)).algebra;
}

template <Field F>
struct Liesation {
  Subspace<F> ideal;
  Algebra<F> quotient;
  Matrix<F> projection;
};

// L / I where I is the ideal generated by all squares x^2, which is spanned
// by polarisation from e_i e_i and e_i e_j + e_j e_i.
template <Field F>
Liesation<F> liesation(const Algebra<F>& l) {
  if (!is_leibniz(l, Side::right) && !is_leibniz(l, Side::left)) {
    throw error(errc::not_leibniz, "liesation needs a left or right Leibniz algebra");
  }
  std::vector<Element<F>> squares;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    squares.push_back(l.product(i, i));
    for (std::size_t j = i + 1; j < l.dim(); ++j) squares.push_back(add(l.product(i, j), l.product(j, i)));
  }
  auto ideal = ideal_closure(l, Subspace<F>::span(l.field(), l.dim(), squares));
  auto q = quotient(l, ideal);
  auto lie = Algebra<F>::from_table(l.field(), q.algebra.dim(), q.algebra.table(), Convention::anticommutative,
                                    q.algebra.labels());
  return {std::move(ideal), std::move(lie), std::move(q.projection)};
}

}  // namespace cbalg
