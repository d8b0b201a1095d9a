#pragma once

// Centers, centralizers, lower central and derived series, and the CB/CL
// deciders in both their identity-based and brute-force forms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cbalg/algebra.hpp"
#include "cbalg/identities.hpp"

namespace cbalg {

// {x : x e_j = e_j x = 0 for every j}.
template <Field F>
Subspace<F> center(const Algebra<F>& a) {
  std::vector<Matrix<F>> blocks;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const auto e = a.basis(j);
    blocks.push_back(mul_operator(a, e, Side::right));
    blocks.push_back(mul_operator(a, e, Side::left));
  }
  return kernel(vstack(a.field(), a.dim(), blocks));
}

// C_A(x) = {y : xy = yx = 0}.
template <Field F>
Subspace<F> centralizer(const Algebra<F>& a, const Element<F>& x) {
  return kernel(vstack(a.field(), a.dim(), {mul_operator(a, x, Side::left), mul_operator(a, x, Side::right)}));
}

// {y : xy = 0} for Side::left, {y : yx = 0} for Side::right.
template <Field F>
Subspace<F> annihilator(const Algebra<F>& a, const Element<F>& x, Side side) {
  return kernel(mul_operator(a, x, side));
}

enum class SeriesKind { lower_central, derived };

template <Field F>
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace<F>> terms;  // A^1 = A, A^2, ... or A^(0) = A, A^(1), ...
  std::optional<std::size_t> nilpotency_class;
  bool solvable = false;
  bool metabelian = false;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& t : terms) out.push_back(t.dim());
    return out;
  }
};

namespace detail {

// Iterates until the zero subspace or a repeated term.
template <Field F, class Next>
std::vector<Subspace<F>> iterate_series(const Algebra<F>& a, Next next) {
  std::vector<Subspace<F>> terms{whole(a)};
  while (!terms.back().is_zero()) {
    auto t = next(terms.back());
    if (t == terms.back()) break;
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace detail

template <Field F>
std::vector<Subspace<F>> lower_central_terms(const Algebra<F>& a) {
  const auto all = whole(a);
  return detail::iterate_series(a, [&](const Subspace<F>& s) { return subspace_product(a, s, all); });
}

template <Field F>
std::vector<Subspace<F>> derived_terms(const Algebra<F>& a) {
  return detail::iterate_series(a, [&](const Subspace<F>& s) { return subspace_product(a, s, s); });
}

// A^k for k >= 1, extending a stabilised or terminated series.
template <Field F>
Subspace<F> lower_central_term(const Algebra<F>& a, std::size_t k) {
  const auto terms = lower_central_terms(a);
  return terms[std::min(k, terms.size()) - 1];
}

// A^(k) for k >= 0.
template <Field F>
Subspace<F> derived_term(const Algebra<F>& a, std::size_t k) {
  const auto terms = derived_terms(a);
  return terms[std::min(k, terms.size() - 1)];
}

template <Field F>
SeriesReport<F> series(const Algebra<F>& a, SeriesKind kind) {
  auto lower = lower_central_terms(a);
  auto derived = derived_terms(a);
  SeriesReport<F> r{kind, {}, std::nullopt, derived.back().is_zero(), false};
  if (lower.back().is_zero()) r.nilpotency_class = lower.size() - 1;
  r.metabelian = derived.back().is_zero() && derived.size() <= 3;
  r.terms = kind == SeriesKind::lower_central ? std::move(lower) : std::move(derived);
  return r;
}

// dim A^i = n - i for i = 2..n.
template <Field F>
bool is_filiform(const Algebra<F>& a) {
  if (!is_lie(a)) throw error(errc::not_lie, "filiform is defined for Lie algebras");
  const std::size_t n = a.dim();
  const auto terms = lower_central_terms(a);
  for (std::size_t i = 2; i <= n; ++i) {
    const auto& t = terms[std::min(i, terms.size()) - 1];
    if (t.dim() != n - i) return false;
  }
  return true;
}

enum class CbMode { theorem, brute_force, both };

// x y = 0 while (x z) y != 0.
template <Field F>
struct CbWitness {
  Element<F> x, y, z;
};

template <Field F>
struct CBReport {
  CbMode method;
  bool is_cb = true;
  bool is_cl = true;
  std::optional<CbWitness<F>> witness;
  std::optional<Element<F>> cl_witness;  // some x whose centralizer is not an ideal
  std::optional<Witness<F>> identity_witness;
};

template <Field F>
struct BruteCb {
  bool holds = true;
  std::optional<CbWitness<F>> witness;
};

template <Field F>
struct BruteCl {
  bool holds = true;
  std::optional<Element<F>> witness;
};

// Enumerates x (one per line, which suffices by homogeneity); y runs over a
// basis of {y : xy = 0} and z over the algebra basis.
template <Field F>
BruteCb<F> brute_force_cb(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  BruteCb<F> out;
  const std::size_t n = a.dim();
  for_each_line(a.field(), n, cap, [&](const Element<F>& x) {
    const auto ys = annihilator(a, x, Side::left).basis_vectors();
    if (ys.empty()) return true;
    for (std::size_t k = 0; k < n; ++k) {
      const auto xz = multiply(a, x, a.basis(k));
      if (is_zero(xz)) continue;
      for (const auto& y : ys) {
        if (!is_zero(multiply(a, xz, y))) {
          out.holds = false;
          out.witness = CbWitness<F>{x, y, a.basis(k)};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

template <Field F>
BruteCl<F> brute_force_cl(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  BruteCl<F> out;
  for_each_line(a.field(), a.dim(), cap, [&](const Element<F>& x) {
    if (!is_ideal(a, centralizer(a, x))) {
      out.holds = false;
      out.witness = x;
      return false;
    }
    return true;
  });
  return out;
}

namespace detail {

// Turns a failing absolute-zero-divisor coefficient into an explicit CB
// violation: with x = e_i (+ e_k), the pair (x, x) has zero product while
// (x e_j) x is minus the reported defect.
template <Field F>
CbWitness<F> cb_witness_from(const Algebra<F>& a, const Witness<F>& w) {
  Element<F> x = a.basis(w.indices[1]);
  if (w.law == std::string(law_zero_divisor_polar)) x = add(std::move(x), a.basis(w.indices[2]));
  return {x, x, a.basis(w.indices[0])};
}

}  // namespace detail

// Decides CB and CL. The theorem route needs an anti-commutative algebra and
// reads both verdicts off anti-associativity; the brute-force route needs a
// finite field with p^n <= cap; `both` runs the two and insists they agree.
template <Field F>
CBReport<F> decide_cb_cl(const Algebra<F>& a, CbMode mode, std::uint64_t cap = default_cap) {
  CBReport<F> report;
  report.method = mode;
  if (mode != CbMode::brute_force) {
    if (!is_anti_commutative(a)) {
      throw error(errc::not_anti_commutative, "the identity-based decision applies to anti-commutative algebras");
    }
    auto aa = is_anti_associative(a);
    report.is_cb = report.is_cl = aa.holds;
    if (!aa.holds) {
      report.identity_witness = aa.witness;
      auto azd = all_absolute_zero_divisors(a);
      if (azd.holds) throw error(errc::verdict_mismatch, "anti-associativity fails but every element is an absolute zero divisor");
      report.witness = detail::cb_witness_from(a, *azd.witness);
      report.cl_witness = report.witness->y;
    }
  }
  if (mode != CbMode::theorem) {
    // Enumeration size is validated before any work is done.
    vector_count(a.field(), a.dim(), cap);
    auto cb = brute_force_cb(a, cap);
    auto cl = brute_force_cl(a, cap);
    if (mode == CbMode::both && (cb.holds != report.is_cb || cl.holds != report.is_cl)) {
      throw error(errc::verdict_mismatch, "brute-force and identity-based verdicts disagree");
    }
    report.is_cb = cb.holds;
    report.is_cl = cl.holds;
    if (cb.witness) report.witness = cb.witness;
    if (cl.witness) report.cl_witness = cl.witness;
  }
  return report;
}

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

enum class ElementMode { necessary, brute_force };

template <Field F>
struct ElementTest {
  Verdict verdict;
  std::optional<Witness<F>> necessary_witness;               // (e_i z) e_j + (e_j z) e_i != 0
  std::optional<std::pair<Element<F>, Element<F>>> brute_witness;  // (x, y): y in C_A(x), (x z) y != 0
};

inline constexpr const char* law_element_square = "(e_i z) e_i";
inline constexpr const char* law_element_polar = "(e_i z) e_j + (e_j z) e_i";

// Every x with a basis of its centralizer, one x per line.
template <Field F>
struct CentralizerTable {
  std::vector<std::pair<Element<F>, std::vector<Element<F>>>> rows;
};

template <Field F>
CentralizerTable<F> centralizer_table(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  CentralizerTable<F> t;
  for_each_line(a.field(), a.dim(), cap, [&](const Element<F>& x) {
    auto c = centralizer(a, x).basis_vectors();
    if (!c.empty()) t.rows.emplace_back(x, std::move(c));
    return true;
  });
  return t;
}

template <Field F>
std::optional<std::pair<Element<F>, Element<F>>> cb_element_violation(const Algebra<F>& a, const Element<F>& z,
                                                                       const CentralizerTable<F>& table) {
  for (const auto& [x, ys] : table.rows) {
    const auto xz = multiply(a, x, z);
    if (is_zero(xz)) continue;
    for (const auto& y : ys) {
      if (!is_zero(multiply(a, xz, y))) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

template <Field F>
ElementTest<F> cb_element_test(const Algebra<F>& a, const Element<F>& z, ElementMode mode,
                               std::uint64_t cap = default_cap) {
  require_element(a, z);
  if (mode == ElementMode::necessary) {
    if (!is_anti_commutative(a)) throw error(errc::not_anti_commutative, "necessary test assumes anti-commutativity");
    const std::size_t n = a.dim();
    std::vector<Element<F>> ez;
    for (std::size_t i = 0; i < n; ++i) ez.push_back(multiply(a, a.basis(i), z));
    for (std::size_t i = 0; i < n; ++i) {
      auto d = multiply(a, ez[i], a.basis(i));
      if (!is_zero(d)) return {Verdict::no, Witness<F>{law_element_square, {i, i}, std::move(d)}, std::nullopt};
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto d = add(multiply(a, ez[i], a.basis(j)), multiply(a, ez[j], a.basis(i)));
        if (!is_zero(d)) return {Verdict::no, Witness<F>{law_element_polar, {i, j}, std::move(d)}, std::nullopt};
      }
    return {Verdict::inconclusive, std::nullopt, std::nullopt};
  }
  const auto table = centralizer_table(a, cap);
  if (auto v = cb_element_violation(a, z, table)) return {Verdict::no, std::nullopt, std::move(v)};
  return {Verdict::yes, std::nullopt, std::nullopt};
}

template <Field F>
struct CbElementSet {
  Subspace<F> K;
  bool closed;                      // K·K ⊆ K
  std::vector<Element<F>> elements;  // certified elements in enumeration order
};

// All brute-force certified CB-elements, verified to form a subspace.
template <Field F>
CbElementSet<F> cb_element_subalgebra(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  const auto table = centralizer_table(a, cap);
  std::vector<Element<F>> elements;
  for_each_vector(a.field(), a.dim(), cap, [&](const Element<F>& z) {
    if (!cb_element_violation(a, z, table)) elements.push_back(z);
    return true;
  });
  auto k = Subspace<F>::span(a.field(), a.dim(), elements);
  std::uint64_t expected = 1;
  if constexpr (F::finite) {
    for (std::size_t i = 0; i < k.dim(); ++i) expected *= a.field().order();
  }
  if (expected != elements.size()) {
    throw error(errc::not_a_subspace, "the CB-elements are not closed under addition and scaling");
  }
  const bool closed = is_subalgebra(a, k);
  return {std::move(k), closed, std::move(elements)};
}

// K as the common kernel of z -> (x z) y over the centralizer table; an
// independent route to the same subspace.
template <Field F>
Subspace<F> cb_element_kernel(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  const auto table = centralizer_table(a, cap);
  std::vector<Matrix<F>> blocks;
  for (const auto& [x, ys] : table.rows) {
    const auto lx = mul_operator(a, x, Side::left);
    for (const auto& y : ys) blocks.push_back(mul_operator(a, y, Side::right) * lx);
  }
  if (blocks.empty()) return whole(a);
  return kernel(vstack(a.field(), a.dim(), blocks));
}

}  // namespace cbalg
