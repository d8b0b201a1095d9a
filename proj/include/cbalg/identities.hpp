#pragma once

// Basis-level checkers for the identities used throughout the library.
//
// Every check expands its identity multilinearly over basis vectors, so the
// verdict is exact over every field without enumerating elements. A failing
// check carries the first offending basis tuple (lexicographic order) and the
// nonzero defect it produces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbalg/algebra.hpp"
#include "cbalg/field.hpp"

namespace cbalg {

template <Field F>
struct Witness {
  std::string law;                   // which expansion failed, e.g. "(e_i e_j) e_k + e_i (e_j e_k)"
  std::vector<std::size_t> indices;  // 0-based basis indices
  Element<F> defect;
};

template <Field F>
struct Check {
  bool holds = true;
  std::optional<Witness<F>> witness;

  explicit operator bool() const { return holds; }
};

namespace detail {

template <Field F>
Check<F> fail(std::string law, std::vector<std::size_t> idx, Element<F> defect) {
  return {false, Witness<F>{std::move(law), std::move(idx), std::move(defect)}};
}

// (e_i e_j) e_k and e_i (e_j e_k).
template <Field F>
Element<F> left_normed(const Algebra<F>& a, std::size_t i, std::size_t j, std::size_t k) {
  return multiply(a, a.product(i, j), a.basis(k));
}

template <Field F>
Element<F> right_normed(const Algebra<F>& a, std::size_t i, std::size_t j, std::size_t k) {
  return multiply(a, a.basis(i), a.product(j, k));
}

}  // namespace detail

inline constexpr const char* law_square = "e_i e_i";
inline constexpr const char* law_antisymmetry = "e_i e_j + e_j e_i";
inline constexpr const char* law_anti_associative = "(e_i e_j) e_k + e_i (e_j e_k)";
inline constexpr const char* law_associative = "(e_i e_j) e_k - e_i (e_j e_k)";
inline constexpr const char* law_jacobi = "e_i (e_j e_k) + e_j (e_k e_i) + e_k (e_i e_j)";
inline constexpr const char* law_right_leibniz = "[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]";
inline constexpr const char* law_left_leibniz = "[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]";
inline constexpr const char* law_zero_divisor_square = "(e_j e_i) e_i";
inline constexpr const char* law_zero_divisor_polar = "(e_j e_i) e_k + (e_j e_k) e_i";
inline constexpr const char* law_bracket_square = "[[x,y],[x,y]] coefficient";

// x^2 = 0 for all x, i.e. e_i e_i = 0 and e_i e_j = -e_j e_i.
template <Field F>
Check<F> is_anti_commutative(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(a.product(i, i))) return detail::fail<F>(law_square, {i, i}, a.product(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      auto s = add(a.product(i, j), a.product(j, i));
      if (!is_zero(s)) return detail::fail<F>(law_antisymmetry, {i, j}, std::move(s));
    }
  }
  return {};
}

template <Field F>
Check<F> is_anti_associative(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto d = add(detail::left_normed(a, i, j, k), detail::right_normed(a, i, j, k));
        if (!is_zero(d)) return detail::fail<F>(law_anti_associative, {i, j, k}, std::move(d));
      }
  return {};
}

template <Field F>
Check<F> is_associative(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto d = subtract(detail::left_normed(a, i, j, k), detail::right_normed(a, i, j, k));
        if (!is_zero(d)) return detail::fail<F>(law_associative, {i, j, k}, std::move(d));
      }
  return {};
}

// Anti-commutative plus the Jacobi identity on i < j < k.
template <Field F>
Check<F> is_lie(const Algebra<F>& a) {
  if (auto ac = is_anti_commutative(a); !ac) return ac;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto d = add(add(detail::right_normed(a, i, j, k), detail::right_normed(a, j, k, i)),
                     detail::right_normed(a, k, i, j));
        if (!is_zero(d)) return detail::fail<F>(law_jacobi, {i, j, k}, std::move(d));
      }
  return {};
}

template <Field F>
Check<F> is_leibniz(const Algebra<F>& a, Side side) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto d = subtract(detail::right_normed(a, i, j, k), detail::left_normed(a, i, j, k));
        if (side == Side::right) {
          d = add(std::move(d), detail::left_normed(a, i, k, j));
        } else {
          d = subtract(std::move(d), detail::right_normed(a, j, i, k));
        }
        if (!is_zero(d)) {
          return detail::fail<F>(side == Side::right ? law_right_leibniz : law_left_leibniz, {i, j, k}, std::move(d));
        }
      }
  return {};
}

// Coefficient form of [[x,y],[x,y]] = 0, with T(i,j,k,l) = [[e_i,e_j],[e_k,e_l]].
template <Field F>
Check<F> bracket_squares_vanish(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  auto t = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return multiply(a, a.product(i, j), a.product(k, l));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j; l < n; ++l) {
          Element<F> d = t(i, j, k, l);
          if (i == k && j == l) {
            // T(i,j,i,j)
          } else if (i == k) {
            d = add(std::move(d), t(i, l, i, j));
          } else if (j == l) {
            d = add(std::move(d), t(k, j, i, j));
          } else {
            d = add(add(add(std::move(d), t(i, l, k, j)), t(k, j, i, l)), t(k, l, i, j));
          }
          if (!is_zero(d)) return detail::fail<F>(law_bracket_square, {i, j, k, l}, std::move(d));
        }
  return {};
}

template <Field F>
Check<F> is_symmetric_leibniz(const Algebra<F>& a) {
  if (auto r = is_leibniz(a, Side::right); !r) return r;
  if (auto l = is_leibniz(a, Side::left); !l) return l;
  return bracket_squares_vanish(a);
}

// Pointwise [[x,y],[x,y]] = 0 by enumerating all pairs over a finite field;
// `pair` is the first offending (x, y).
template <Field F>
struct PointwiseCheck {
  bool holds = true;
  std::optional<std::pair<Element<F>, Element<F>>> pair;
};

template <Field F>
PointwiseCheck<F> bracket_squares_vanish_pointwise(const Algebra<F>& a, std::uint64_t cap = default_cap) {
  vector_count(a.field(), 2 * a.dim(), cap);
  PointwiseCheck<F> out;
  for_each_vector(a.field(), a.dim(), cap, [&](const Element<F>& x) {
    for_each_vector(a.field(), a.dim(), cap, [&](const Element<F>& y) {
      const auto b = multiply(a, x, y);
      if (!is_zero(multiply(a, b, b))) {
        out.holds = false;
        out.pair.emplace(x, y);
        return false;
      }
      return true;
    });
    return out.holds;
  });
  return out;
}

// (yx)x = 0 for all x, y, in its exact coefficient form.
template <Field F>
Check<F> all_absolute_zero_divisors(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto d = detail::left_normed(a, j, i, i);
      if (!is_zero(d)) return detail::fail<F>(law_zero_divisor_square, {j, i, i}, std::move(d));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) {
        auto d = add(detail::left_normed(a, j, i, k), detail::left_normed(a, j, k, i));
        if (!is_zero(d)) return detail::fail<F>(law_zero_divisor_polar, {j, i, k}, std::move(d));
      }
  return {};
}

// Recomputes the defect of a witness from its law and indices.
template <Field F>
Element<F> evaluate_witness(const Algebra<F>& a, const Witness<F>& w) {
  const auto& x = w.indices;
  using detail::left_normed;
  using detail::right_normed;
  const std::string& law = w.law;
  if (law == law_square) return a.product(x[0], x[0]);
  if (law == law_antisymmetry) return add(a.product(x[0], x[1]), a.product(x[1], x[0]));
  if (law == law_anti_associative) return add(left_normed(a, x[0], x[1], x[2]), right_normed(a, x[0], x[1], x[2]));
  if (law == law_associative) return subtract(left_normed(a, x[0], x[1], x[2]), right_normed(a, x[0], x[1], x[2]));
  if (law == law_jacobi) {
    return add(add(right_normed(a, x[0], x[1], x[2]), right_normed(a, x[1], x[2], x[0])),
               right_normed(a, x[2], x[0], x[1]));
  }
  if (law == law_right_leibniz) {
    return add(subtract(right_normed(a, x[0], x[1], x[2]), left_normed(a, x[0], x[1], x[2])),
               left_normed(a, x[0], x[2], x[1]));
  }
  if (law == law_left_leibniz) {
    return subtract(subtract(right_normed(a, x[0], x[1], x[2]), left_normed(a, x[0], x[1], x[2])),
                    right_normed(a, x[1], x[0], x[2]));
  }
  if (law == law_zero_divisor_square) return left_normed(a, x[0], x[1], x[2]);
  if (law == law_zero_divisor_polar) return add(left_normed(a, x[0], x[1], x[2]), left_normed(a, x[0], x[2], x[1]));
  if (law == law_bracket_square) {
    const std::size_t i = x[0], j = x[1], k = x[2], l = x[3];
    auto t = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
      return multiply(a, a.product(p, q), a.product(r, s));
    };
    if (i == k && j == l) return t(i, j, i, j);
    if (i == k) return add(t(i, j, i, l), t(i, l, i, j));
    if (j == l) return add(t(i, j, k, j), t(k, j, i, j));
    return add(add(add(t(i, j, k, l), t(i, l, k, j)), t(k, j, i, l)), t(k, l, i, j));
  }
  throw error(errc::parse_error, "unknown law '" + law + "'");
}

template <Field F>
struct IdentityReport {
  Check<F> anti_commutative;
  Check<F> anti_associative;
  Check<F> lie;
  Check<F> associative;
  Check<F> right_leibniz;
  Check<F> left_leibniz;
  Check<F> symmetric_leibniz;
  Check<F> absolute_zero_divisors;
};

template <Field F>
IdentityReport<F> identity_report(const Algebra<F>& a) {
  return {is_anti_commutative(a),  is_anti_associative(a),    is_lie(a),
          is_associative(a),       is_leibniz(a, Side::right), is_leibniz(a, Side::left),
          is_symmetric_leibniz(a), all_absolute_zero_divisors(a)};
}

}  // namespace cbalg
