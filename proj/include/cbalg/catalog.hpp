#pragma once

// Nilpotent Lie algebras of dimension at most six (characteristic != 2),
// in the L_{d,k} naming, with the CB verdict expected for each family.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbalg/algebra.hpp"
#include "cbalg/identities.hpp"
#include "cbalg/structure.hpp"

namespace cbalg {

// [e_i, e_j] = coefficient * e_k, coefficient multiplied by epsilon when `eps`.
struct CatalogProduct {
  int i, j, k;
  int coefficient = 1;
  bool eps = false;
};

enum class ExpectedReason { cube_zero, witness_triple };

struct CatalogEntry {
  std::string name;  // "L5,4"
  std::size_t dim;
  bool parametric;
  std::vector<CatalogProduct> products;
  bool expected_cb;
  ExpectedReason expected_reason;
  std::string summand_of;  // "L4,2" when the entry is L4,2 ⊕ I
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
  using P = std::vector<CatalogProduct>;
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::size_t dim, P products, bool cb, bool parametric = false) {
    out.push_back({std::move(name), dim, parametric, std::move(products), cb,
                   cb ? ExpectedReason::cube_zero : ExpectedReason::witness_triple, ""});
  };
  auto plus_i = [&](std::string name, const std::string& base) {
    for (const auto& e : out) {
      if (e.name == base) {
        out.push_back({std::move(name), e.dim + 1, e.parametric, e.products, e.expected_cb, e.expected_reason, base});
        return;
      }
    }
  };
  add("L1,1", 1, {}, true);
  add("L2,1", 2, {}, true);
  add("L3,1", 3, {}, true);
  add("L3,2", 3, {{1, 2, 3}}, true);
  plus_i("L4,1", "L3,1");
  plus_i("L4,2", "L3,2");
  add("L4,3", 4, {{1, 2, 3}, {1, 3, 4}}, false);
  plus_i("L5,1", "L4,1");
  plus_i("L5,2", "L4,2");
  plus_i("L5,3", "L4,3");
  add("L5,4", 5, {{1, 2, 5}, {3, 4, 5}}, true);
  add("L5,5", 5, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}}, false);
  add("L5,6", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}, false);
  add("L5,7", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}, false);
  add("L5,8", 5, {{1, 2, 4}, {1, 3, 5}}, true);
  add("L5,9", 5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}}, false);
  for (int k = 1; k <= 9; ++k) plus_i("L6," + std::to_string(k), "L5," + std::to_string(k));
  add("L6,10", 6, {{1, 2, 3}, {1, 3, 6}, {4, 5, 6}}, false);
  add("L6,11", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 3, 6}, {2, 5, 6}}, false);
  add("L6,12", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 5, 6}}, false);
  add("L6,13", 6, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {1, 5, 6}, {3, 4, 6}}, false);
  add("L6,14", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6, -1}}, false);
  add("L6,15", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {1, 5, 6}, {2, 4, 6}}, false);
  add("L6,16", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6, -1}}, false);
  add("L6,17", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 3, 6}}, false);
  add("L6,18", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}, false);
  add("L6,19", 6, {{1, 2, 4}, {1, 3, 5}, {2, 4, 6}, {3, 5, 6, 1, true}}, false, true);
  add("L6,20", 6, {{1, 2, 4}, {1, 3, 5}, {1, 5, 6}, {2, 4, 6}}, false);
  add("L6,21", 6, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {1, 4, 6}, {2, 5, 6, 1, true}}, false, true);
  add("L6,22", 6, {{1, 2, 5}, {1, 3, 6}, {2, 4, 6, 1, true}, {3, 4, 5}}, true, true);
  add("L6,23", 6, {{1, 2, 3}, {1, 3, 5}, {1, 4, 6}, {2, 4, 5}}, false);
  add("L6,24", 6, {{1, 2, 3}, {1, 3, 5}, {1, 4, 6, 1, true}, {2, 3, 6}, {2, 4, 5}}, false, true);
  add("L6,25", 6, {{1, 2, 3}, {1, 3, 5}, {1, 4, 6}}, false);
  add("L6,26", 6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}, true);
  return out;
}

// Accepts "L6,19", "L6_19" and "L_{6,19}".
inline std::string canonical_name(std::string_view name) {
  std::string s;
  for (char ch : name) {
    if (ch == '_' && s == "L") continue;
    if (ch == '{' || ch == '}' || ch == ' ') continue;
    s += ch == '_' ? ',' : ch;
  }
  return s;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& find_entry(std::string_view name) {
  const auto key = detail::canonical_name(name);
  for (const auto& e : catalog()) {
    if (e.name == key) return e;
  }
  throw error(errc::unknown_name, "no catalog entry named '" + std::string(name) + "'");
}

template <Field F>
Algebra<F> instantiate(const CatalogEntry& entry, const F& field, const std::optional<Scalar<F>>& epsilon) {
  if (field.characteristic() == 2) {
    throw error(errc::char_two, "the catalog is a classification in characteristic different from two");
  }
  if (entry.parametric && !epsilon) throw error(errc::missing_epsilon, entry.name + " needs a value for epsilon");
  if (!entry.parametric && epsilon) throw error(errc::unexpected_epsilon, entry.name + " takes no epsilon");
  std::vector<Product<F>> products;
  for (const auto& p : entry.products) {
    auto c = field.from_int(p.coefficient);
    if (p.eps) c *= *epsilon;
    products.push_back({static_cast<std::size_t>(p.i - 1),
                        static_cast<std::size_t>(p.j - 1),
                        {{static_cast<std::size_t>(p.k - 1), c}}});
  }
  return Algebra<F>::from_products(field, entry.dim, products, Convention::anticommutative);
}

template <Field F>
Algebra<F> get_entry(std::string_view name, const F& field, const std::optional<Scalar<F>>& epsilon = std::nullopt) {
  return instantiate(find_entry(name), field, epsilon);
}

// {0, 1, -1, 2} over Q, every residue over F_p.
template <Field F>
std::vector<Scalar<F>> default_epsilons(const F& field) {
  std::vector<Scalar<F>> out;
  if constexpr (F::finite) {
    for (std::uint32_t v = 0; v < field.order(); ++v) out.push_back(field.element(v));
  } else {
    for (int v : {0, 1, -1, 2}) out.push_back(field.from_int(v));
  }
  return out;
}

template <Field F>
struct CatalogSample {
  std::optional<Scalar<F>> epsilon;
  bool computed_cb;
  bool l3_zero;
  std::optional<Witness<F>> witness;  // first failing anti-associativity triple
};

template <Field F>
struct CatalogRow {
  const CatalogEntry* entry;
  std::vector<CatalogSample<F>> samples;
  bool computed_cb;  // over every sample
  bool l3_zero;      // over every sample
  bool match;
};

template <Field F>
CatalogRow<F> check_entry(const CatalogEntry& entry, const F& field, const std::vector<Scalar<F>>& epsilons) {
  CatalogRow<F> row{&entry, {}, true, true, true};
  std::vector<std::optional<Scalar<F>>> eps;
  if (entry.parametric) {
    if (epsilons.empty()) throw error(errc::missing_epsilon, entry.name + " needs at least one epsilon sample");
    for (const auto& e : epsilons) eps.emplace_back(e);
  } else {
    eps.emplace_back(std::nullopt);
  }
  for (const auto& e : eps) {
    const auto a = instantiate(entry, field, e);
    const auto report = decide_cb_cl(a, CbMode::theorem);
    const bool l3 = lower_central_term(a, 3).is_zero();
    row.samples.push_back({e, report.is_cb, l3, report.identity_witness});
    row.computed_cb = row.computed_cb && report.is_cb;
    row.l3_zero = row.l3_zero && l3;
    row.match = row.match && report.is_cb == entry.expected_cb;
  }
  return row;
}

template <Field F>
std::vector<CatalogRow<F>> check_catalog(const F& field, std::vector<Scalar<F>> epsilons = {}) {
  if (field.characteristic() == 2) {
    throw error(errc::char_two, "the catalog is a classification in characteristic different from two");
  }
  if (epsilons.empty()) epsilons = default_epsilons(field);
  std::vector<CatalogRow<F>> rows;
  for (const auto& e : catalog()) rows.push_back(check_entry(e, field, epsilons));
  return rows;
}

}  // namespace cbalg
