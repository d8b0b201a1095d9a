#pragma once

// Finite groups acting by algebra automorphisms, given as matrices whose
// column i is the image of e_i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cbalg/algebra.hpp"
#include "cbalg/structure.hpp"

namespace cbalg {

inline constexpr std::size_t default_group_cap = 10'000;

struct AutomorphismCheck {
  bool holds = true;
  bool invertible = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (i, j) with g(e_i e_j) != g(e_i) g(e_j)

  explicit operator bool() const { return holds; }
};

template <Field F>
AutomorphismCheck is_automorphism(const Algebra<F>& a, const Matrix<F>& g) {
  const std::size_t n = a.dim();
  if (g.rows() != n || g.cols() != n) throw error(errc::dimension_mismatch, "automorphism matrix has wrong size");
  AutomorphismCheck out;
  if (rank(g) != n) {
    out.holds = out.invertible = false;
    return out;
  }
  std::vector<Element<F>> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(g.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(g.apply(a.product(i, j)) == multiply(a, img[i], img[j]))) {
        out.holds = false;
        out.witness = std::pair{i, j};
        return out;
      }
    }
  return out;
}

template <Field F>
struct GroupAction {
  std::size_t algebra_dim;
  std::vector<Matrix<F>> generators;
  std::vector<Matrix<F>> elements;  // identity first, then breadth-first order

  std::size_t order() const { return elements.size(); }

  bool contains_inverses() const {
    std::unordered_set<std::string> keys;
    for (const auto& g : elements) keys.insert(g.key());
    for (const auto& g : elements) {
      const auto inv = inverse(g);
      if (!inv || !keys.contains(inv->key())) return false;
    }
    return true;
  }
};

// Closure of the generators under multiplication, breadth first.
template <Field F>
GroupAction<F> generate_group(const Algebra<F>& a, const std::vector<Matrix<F>>& gens,
                              std::size_t cap = default_group_cap) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_automorphism(a, gens[i])) {
      throw error(errc::not_automorphism, "generator " + std::to_string(i + 1) + " is not an automorphism");
    }
  }
  GroupAction<F> act{a.dim(), gens, {Matrix<F>::identity(a.field(), a.dim())}};
  std::unordered_set<std::string> seen{act.elements.front().key()};
  for (std::size_t at = 0; at < act.elements.size(); ++at) {
    for (const auto& g : gens) {
      auto h = g * act.elements[at];
      if (!seen.insert(h.key()).second) continue;
      if (act.elements.size() == cap) {
        throw error(errc::cap_exceeded, "group closure exceeds " + std::to_string(cap) + " elements");
      }
      act.elements.push_back(std::move(h));
    }
  }
  return act;
}

// {g x : g in G}, without repeats, in group order.
template <Field F>
std::vector<Element<F>> orbit(const GroupAction<F>& act, const Element<F>& x) {
  if (x.size() != act.algebra_dim) throw error(errc::dimension_mismatch, "element has wrong length");
  std::vector<Element<F>> out;
  std::set<Element<F>> seen;
  for (const auto& g : act.elements) {
    auto y = g.apply(x);
    if (seen.insert(y).second) out.push_back(std::move(y));
  }
  return out;
}

template <Field F>
struct PreservationReport {
  Verdict status;  // inconclusive over infinite fields
  std::size_t cb_elements = 0;
  std::size_t checks = 0;
  std::vector<std::pair<std::size_t, Element<F>>> violations;  // (group index, z) with g z not CB
};

// Applies every group element to every certified CB-element.
template <Field F>
PreservationReport<F> verify_cb_preservation(const Algebra<F>& a, const GroupAction<F>& act,
                                             std::uint64_t cap = default_cap) {
  PreservationReport<F> rep;
  rep.status = Verdict::inconclusive;
  if constexpr (F::finite) {
    const auto k = cb_element_subalgebra(a, cap);
    const std::set<Element<F>> certified(k.elements.begin(), k.elements.end());
    rep.cb_elements = k.elements.size();
    for (const auto& z : k.elements) {
      for (std::size_t gi = 0; gi < act.elements.size(); ++gi) {
        ++rep.checks;
        if (!certified.contains(act.elements[gi].apply(z))) rep.violations.emplace_back(gi, z);
      }
    }
    rep.status = rep.violations.empty() ? Verdict::yes : Verdict::no;
  } else {
    (void)a, (void)act, (void)cap;
  }
  return rep;
}

template <Field F>
struct OrbitUnion {
  std::vector<Element<F>> set;  // union of the orbits of all CB-elements
  Subspace<F> span;
  bool is_subalgebra;    // span closed under the product
  bool set_equals_span;  // the union is already a subspace
  bool within_k;         // every member is a certified CB-element
};

template <Field F>
OrbitUnion<F> orbit_union(const Algebra<F>& a, const GroupAction<F>& act, std::uint64_t cap = default_cap) {
  if constexpr (!F::finite) {
    (void)act;
    vector_count(a.field(), a.dim(), cap);  // throws InfiniteField
  }
  const auto k = cb_element_subalgebra(a, cap);
  const std::set<Element<F>> certified(k.elements.begin(), k.elements.end());
  std::set<Element<F>> seen;
  std::vector<Element<F>> members;
  for (const auto& z : k.elements) {
    for (auto& y : orbit(act, z)) {
      if (seen.insert(y).second) members.push_back(std::move(y));
    }
  }
  auto span = Subspace<F>::span(a.field(), a.dim(), members);
  std::uint64_t span_size = 1;
  if constexpr (F::finite) {
    for (std::size_t i = 0; i < span.dim(); ++i) span_size *= a.field().order();
  }
  bool within = true;
  for (const auto& m : members) within = within && certified.contains(m);
  const bool closed = is_subalgebra(a, span);
  const bool equal = span_size == members.size();
  return {std::move(members), std::move(span), closed, equal, within};
}

}  // namespace cbalg
