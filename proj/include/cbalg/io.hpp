#pragma once

// The algebra file: a JSON object
//
//   { "field": {"type": "Fp", "p": 5},          or {"type": "Q"}
//     "dim": 3,
//     "labels": ["x", "y", "z"],                  optional
//     "anticommutative": true,
//     "products": [ {"left": 1, "right": 2, "result": [{"k": 3, "c": "1"}]} ],
//     "decomposition": { "r": 3, "dimB": 3, "dimZ": 1,
//                        "e":    [{"i": 1, "j": 2, "coords": ["1", "0", "0"]}],
//                        "zij":  [{"i": 1, "j": 2, "coords": ["0"]}],
//                        "zijk": [{"i": 1, "j": 2, "k": 3, "coords": ["1"]}] },
//     "generators": [ [["0","1","0"], ["1","0","0"], ["0","0","-1"]] ] }
//
// Indices are 1-based, unlisted products are zero, generator matrices are
// row-major with column i the image of e_i. Scalars are strings in the field's
// canonical form ("3", "-1/2"); plain JSON integers are accepted too.
//
// Parsing is two-stage: text -> AlgebraDocument (field independent, scalars
// kept as strings), then instantiate<F> once the field is known, so that a
// --field override can retype the same file.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cbalg/algebra.hpp"
#include "cbalg/construct.hpp"
#include "cbalg/error.hpp"
#include "cbalg/field.hpp"

namespace cbalg {

// An error raised while reading a file, located by 1-based line and column.
class file_error : public error {
 public:
  file_error(errc code, const std::string& what, std::size_t line, std::size_t column)
      : error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

// Start offsets of every value in a syntactically valid JSON text, keyed by
// JSON pointer. nlohmann does not keep positions, so schema errors look
// their location up here.
class PositionIndex {
 public:
  explicit PositionIndex(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  std::size_t offset(const std::string& pointer) const {
    for (std::string p = pointer;; p = p.substr(0, p.rfind('/'))) {
      if (auto it = at_.find(p); it != at_.end()) return it->second;
      if (p.empty()) return 0;
    }
  }

 private:
  void value(const std::string& ptr) {
    at_[ptr] = pos_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        const std::string child = ptr + "/" + key;
        value(child);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      for (std::size_t i = 0; pos_ < text_.size() && text_[pos_] != ']'; ++i) {
        value(ptr + "/" + std::to_string(i));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '"') {
      string();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos) ++pos_;
    }
  }

  std::string string() {
    std::string out;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::string_view(" \t\r\n").find(text_[pos_]) != std::string_view::npos) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> at_;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

// A scalar as written in the file, with its position for later errors.
struct RawScalar {
  std::string text;
  std::size_t line = 0, column = 0;
};

struct RawTerm {
  std::size_t k;  // 0-based
  RawScalar c;
};

struct RawProduct {
  std::size_t left, right;  // 0-based
  std::vector<RawTerm> result;
  std::size_t line = 0, column = 0;
};

struct RawCoords {
  std::vector<std::size_t> idx;  // 0-based
  std::vector<RawScalar> coords;
  std::size_t line = 0, column = 0;
};

struct RawDecomposition {
  std::size_t r, dim_b, dim_z;
  std::vector<RawCoords> e, zij, zijk;
};

using RawMatrix = std::vector<std::vector<RawScalar>>;

struct AlgebraDocument {
  std::optional<FieldDescriptor> field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  bool anticommutative = false;
  std::vector<RawProduct> products;
  std::optional<RawDecomposition> decomposition;
  std::vector<RawMatrix> generators;
};

namespace detail {

class DocumentReader {
 public:
  explicit DocumentReader(std::string_view text) : text_(text), index_(text) {}

  AlgebraDocument read(const nlohmann::json& root) {
    if (!root.is_object()) fail("", "the file must hold a JSON object");
    AlgebraDocument doc;
    if (root.contains("field")) doc.field = field(root.at("field"), "/field");
    if (root.contains("decomposition")) doc.decomposition = decomposition(root.at("decomposition"), "/decomposition");
    if (root.contains("dim")) {
      doc.dim = count(root.at("dim"), "/dim");
    } else if (doc.decomposition) {
      doc.dim = doc.decomposition->r + doc.decomposition->dim_b + doc.decomposition->dim_z;
    } else {
      fail("", "missing key 'dim'");
    }
    if (doc.decomposition &&
        doc.dim != doc.decomposition->r + doc.decomposition->dim_b + doc.decomposition->dim_z) {
      fail("/dim", "dim differs from r + dimB + dimZ of the decomposition", errc::bad_dims);
    }
    if (root.contains("labels")) {
      const auto& l = root.at("labels");
      if (!l.is_array() || l.size() != doc.dim) fail("/labels", "labels must be a list of dim strings");
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l[i].is_string()) fail("/labels/" + std::to_string(i), "label must be a string");
        doc.labels.push_back(l[i].get<std::string>());
      }
    }
    if (root.contains("anticommutative")) {
      const auto& ac = root.at("anticommutative");
      if (!ac.is_boolean()) fail("/anticommutative", "anticommutative must be true or false");
      doc.anticommutative = ac.get<bool>();
    }
    if (root.contains("products")) {
      const auto& ps = root.at("products");
      if (!ps.is_array()) fail("/products", "products must be a list");
      for (std::size_t n = 0; n < ps.size(); ++n) doc.products.push_back(product(ps[n], "/products/" + std::to_string(n), doc));
    }
    if (root.contains("generators")) {
      const auto& gs = root.at("generators");
      if (!gs.is_array()) fail("/generators", "generators must be a list of matrices");
      for (std::size_t g = 0; g < gs.size(); ++g) {
        const std::string at = "/generators/" + std::to_string(g);
        if (!gs[g].is_array() || gs[g].size() != doc.dim) fail(at, "generator must have dim rows");
        RawMatrix m;
        for (std::size_t r = 0; r < doc.dim; ++r) m.push_back(scalars(gs[g][r], at + "/" + std::to_string(r), doc.dim));
        doc.generators.push_back(std::move(m));
      }
    }
    for (const auto& [key, value] : root.items()) {
      static const std::vector<std::string> known{"field",    "dim",           "labels",    "anticommutative",
                                                  "products", "decomposition", "generators"};
      if (std::find(known.begin(), known.end(), key) == known.end()) fail("/" + key, "unknown key '" + key + "'");
    }
    return doc;
  }

  [[noreturn]] void fail(const std::string& pointer, const std::string& what, errc code = errc::parse_error) const {
    const auto [line, col] = line_column(text_, index_.offset(pointer));
    throw file_error(code, what, line, col);
  }

  RawScalar scalar(const nlohmann::json& v, const std::string& at) const {
    const auto [line, col] = line_column(text_, index_.offset(at));
    if (v.is_string()) return {v.get<std::string>(), line, col};
    if (v.is_number_integer()) return {v.dump(), line, col};
    fail(at, "scalar must be a string such as \"-3/4\" or an integer", errc::bad_scalar);
  }

 private:
  FieldDescriptor field(const nlohmann::json& f, const std::string& at) const {
    if (!f.is_object() || !f.contains("type") || !f.at("type").is_string()) {
      fail(at, "field must be {\"type\": \"Q\"} or {\"type\": \"Fp\", \"p\": prime}");
    }
    const auto type = f.at("type").get<std::string>();
    if (type == "Q") return FieldDescriptor::rationals();
    if (type != "Fp") fail(at + "/type", "unknown field type '" + type + "'");
    if (!f.contains("p") || !f.at("p").is_number_unsigned()) fail(at, "Fp needs a positive integer p");
    const auto p = f.at("p").get<std::uint64_t>();
    try {
      return FieldDescriptor::prime(p);
    } catch (const error&) {
      fail(at + "/p", "p = " + std::to_string(p) + " is not a supported prime");
    }
  }

  std::size_t count(const nlohmann::json& v, const std::string& at) const {
    if (!v.is_number_unsigned()) fail(at, "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  // 1-based index in 1..n, returned 0-based.
  std::size_t index(const nlohmann::json& v, const std::string& at, std::size_t n) const {
    if (!v.is_number_integer()) fail(at, "index must be an integer");
    const auto i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      fail(at, "index " + std::to_string(i) + " is outside 1.." + std::to_string(n), errc::bad_index);
    }
    return static_cast<std::size_t>(i - 1);
  }

  const nlohmann::json& need(const nlohmann::json& obj, const char* key, const std::string& at) const {
    if (!obj.is_object()) fail(at, "expected an object");
    if (!obj.contains(key)) fail(at, std::string("missing key '") + key + "'");
    return obj.at(key);
  }

  std::vector<RawScalar> scalars(const nlohmann::json& v, const std::string& at, std::size_t n) const {
    if (!v.is_array() || v.size() != n) fail(at, "expected a list of " + std::to_string(n) + " scalars", errc::bad_dims);
    std::vector<RawScalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(v[i], at + "/" + std::to_string(i)));
    return out;
  }

  RawProduct product(const nlohmann::json& p, const std::string& at, const AlgebraDocument& doc) const {
    RawProduct out{index(need(p, "left", at), at + "/left", doc.dim), index(need(p, "right", at), at + "/right", doc.dim),
                   {}};
    std::tie(out.line, out.column) = line_column(text_, index_.offset(at));
    if (doc.anticommutative) {
      if (out.left == out.right) {
        fail(at, "e" + std::to_string(out.left + 1) + " squared listed in an anticommutative table",
             errc::diagonal_in_anticommutative);
      }
      if (out.left > out.right) fail(at, "anticommutative tables list only left < right", errc::bad_index);
    }
    const auto& res = need(p, "result", at);
    if (!res.is_array()) fail(at + "/result", "result must be a list of terms");
    for (std::size_t t = 0; t < res.size(); ++t) {
      const std::string tat = at + "/result/" + std::to_string(t);
      out.result.push_back({index(need(res[t], "k", tat), tat + "/k", doc.dim), scalar(need(res[t], "c", tat), tat + "/c")});
    }
    return out;
  }

  RawDecomposition decomposition(const nlohmann::json& d, const std::string& at) const {
    RawDecomposition out{count(need(d, "r", at), at + "/r"), count(need(d, "dimB", at), at + "/dimB"),
                         count(need(d, "dimZ", at), at + "/dimZ"), {}, {}, {}};
    auto block = [&](const char* key, std::size_t arity, std::size_t len, std::vector<RawCoords>& into) {
      if (!d.contains(key)) return;
      const std::string bat = at + "/" + key;
      const auto& list = d.at(key);
      if (!list.is_array()) fail(bat, std::string(key) + " must be a list");
      static const char* names[] = {"i", "j", "k"};
      for (std::size_t n = 0; n < list.size(); ++n) {
        const std::string eat = bat + "/" + std::to_string(n);
        RawCoords c;
        std::tie(c.line, c.column) = line_column(text_, index_.offset(eat));
        for (std::size_t a = 0; a < arity; ++a) {
          c.idx.push_back(index(need(list[n], names[a], eat), eat + "/" + names[a], out.r));
        }
        c.coords = scalars(need(list[n], "coords", eat), eat + "/coords", len);
        into.push_back(std::move(c));
      }
    };
    block("e", 2, out.dim_b, out.e);
    block("zij", 2, out.dim_z, out.zij);
    block("zijk", 3, out.dim_z, out.zijk);
    return out;
  }

  std::string_view text_;
  PositionIndex index_;
};

}  // namespace detail

inline AlgebraDocument parse_document(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = detail::line_column(text, at);
    std::string what = e.what();
    if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    throw file_error(errc::parse_error, "malformed JSON: " + what, line, col);
  }
  detail::DocumentReader reader(text);
  return reader.read(root);
}

template <Field F>
struct AlgebraFile {
  Algebra<F> algebra;
  std::optional<DecompositionData<F>> decomposition;
  std::vector<Matrix<F>> generators;
};

namespace detail {

template <Field F>
Scalar<F> to_scalar(const F& field, const RawScalar& s) {
  try {
    return field.parse(s.text);
  } catch (const error& e) {
    std::string what = e.what();
    if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    throw file_error(e.code(), what, s.line, s.column);
  }
}

template <Field F>
Element<F> to_element(const F& field, const std::vector<RawScalar>& v) {
  Element<F> out;
  for (const auto& s : v) out.push_back(to_scalar(field, s));
  return out;
}

}  // namespace detail

// Types the document over `field`.
template <Field F>
AlgebraFile<F> instantiate(const AlgebraDocument& doc, const F& field) {
  std::vector<Product<F>> products;
  for (const auto& p : doc.products) {
    Product<F> q{p.left, p.right, {}};
    for (const auto& t : p.result) q.terms.push_back({t.k, detail::to_scalar(field, t.c)});
    products.push_back(std::move(q));
  }
  AlgebraFile<F> out{Algebra<F>::from_products(field, doc.dim, products,
                                               doc.anticommutative ? Convention::anticommutative : Convention::general,
                                               doc.labels),
                     std::nullopt,
                     {}};
  if (doc.decomposition) {
    const auto& rd = *doc.decomposition;
    DecompositionData<F> d(field, rd.r, rd.dim_b, rd.dim_z);
    auto located = [](const RawCoords& c, auto&& fn) {
      try {
        fn();
      } catch (const file_error&) {
        throw;
      } catch (const error& e) {
        std::string what = e.what();
        if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
        throw file_error(e.code(), what, c.line, c.column);
      }
    };
    for (const auto& c : rd.e) located(c, [&] { d.set_e(c.idx[0], c.idx[1], detail::to_element(field, c.coords)); });
    for (const auto& c : rd.zij) located(c, [&] { d.set_zij(c.idx[0], c.idx[1], detail::to_element(field, c.coords)); });
    for (const auto& c : rd.zijk) {
      located(c, [&] { d.set_zijk(c.idx[0], c.idx[1], c.idx[2], detail::to_element(field, c.coords)); });
    }
    out.decomposition = std::move(d);
  }
  for (const auto& m : doc.generators) {
    std::vector<Element<F>> rows;
    for (const auto& r : m) rows.push_back(detail::to_element(field, r));
    out.generators.push_back(Matrix<F>::from_rows(field, doc.dim, rows));
  }
  return out;
}

// The document's own field, or `override_field` when given.
inline FieldDescriptor document_field(const AlgebraDocument& doc,
                                      const std::optional<FieldDescriptor>& override_field = std::nullopt) {
  if (override_field) return *override_field;
  if (!doc.field) throw error(errc::invalid_field, "the file names no field and none was given");
  return *doc.field;
}

inline nlohmann::ordered_json field_json(const FieldDescriptor& d) {
  if (!d.is_finite()) return {{"type", "Q"}};
  return {{"type", "Fp"}, {"p", d.p}};
}

namespace detail {

template <Field F>
nlohmann::ordered_json scalar_list(const Element<F>& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

}  // namespace detail

// The algebra (and optional blocks) as an algebra file.
template <Field F>
nlohmann::ordered_json to_json(const Algebra<F>& a, const DecompositionData<F>* decomposition = nullptr,
                               const std::vector<Matrix<F>>& generators = {}) {
  const bool anti = a.convention() == Convention::anticommutative;
  nlohmann::ordered_json j;
  j["field"] = field_json(a.field().descriptor());
  j["dim"] = a.dim();
  if (a.labels() != default_labels(a.dim())) j["labels"] = a.labels();
  j["anticommutative"] = anti;
  auto products = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = anti ? i + 1 : 0; k < a.dim(); ++k) {
      const auto& v = a.product(i, k);
      if (is_zero(v)) continue;
      auto terms = nlohmann::ordered_json::array();
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (!v[t].is_zero()) terms.push_back({{"k", t + 1}, {"c", v[t].str()}});
      }
      products.push_back({{"left", i + 1}, {"right", k + 1}, {"result", std::move(terms)}});
    }
  j["products"] = std::move(products);
  if (decomposition) {
    const auto& d = *decomposition;
    nlohmann::ordered_json dj{{"r", d.r()}, {"dimB", d.dim_b()}, {"dimZ", d.dim_z()}};
    auto e = nlohmann::ordered_json::array(), zij = nlohmann::ordered_json::array();
    auto zijk = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < d.r(); ++p)
      for (std::size_t q = p + 1; q < d.r(); ++q) {
        if (!is_zero(d.e(p, q))) e.push_back({{"i", p + 1}, {"j", q + 1}, {"coords", detail::scalar_list<F>(d.e(p, q))}});
        if (!is_zero(d.zij(p, q))) {
          zij.push_back({{"i", p + 1}, {"j", q + 1}, {"coords", detail::scalar_list<F>(d.zij(p, q))}});
        }
        for (std::size_t s = q + 1; s < d.r(); ++s) {
          if (!is_zero(d.zijk(p, q, s))) {
            zijk.push_back({{"i", p + 1}, {"j", q + 1}, {"k", s + 1}, {"coords", detail::scalar_list<F>(d.zijk(p, q, s))}});
          }
        }
      }
    dj["e"] = std::move(e);
    dj["zij"] = std::move(zij);
    dj["zijk"] = std::move(zijk);
    j["decomposition"] = std::move(dj);
  }
  if (!generators.empty()) {
    auto gs = nlohmann::ordered_json::array();
    for (const auto& g : generators) {
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(detail::scalar_list<F>(g.row(r)));
      gs.push_back(std::move(rows));
    }
    j["generators"] = std::move(gs);
  }
  return j;
}

namespace detail {

// The top object and any object holding lists are opened, lists of structured
// items get one item per line, everything else stays on one line.
inline void layout(std::string& out, const nlohmann::ordered_json& v, std::size_t depth) {
  const std::string pad(2 * depth + 2, ' '), close(2 * depth, ' ');
  const bool open = v.is_object() && !v.empty() &&
                    (depth == 0 || std::any_of(v.begin(), v.end(), [](const auto& x) { return x.is_structured(); }));
  if (open) {
    out += "{\n";
    std::size_t n = 0;
    for (const auto& [k, x] : v.items()) {
      out += pad + nlohmann::ordered_json(k).dump() + ": ";
      layout(out, x, depth + 1);
      out += ++n < v.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (v.is_array() && !v.empty() && v.front().is_structured()) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) out += pad + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
    out += close + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace detail

template <Field F>
std::string render(const Algebra<F>& a, const DecompositionData<F>* decomposition = nullptr,
                   const std::vector<Matrix<F>>& generators = {}) {
  std::string out;
  detail::layout(out, to_json(a, decomposition, generators), 0);
  return out + "\n";
}

template <Field F>
std::string render(const AlgebraFile<F>& f) {
  return render(f.algebra, f.decomposition ? &*f.decomposition : nullptr, f.generators);
}

// Parses a file whose field is fixed at compile time; FieldMismatch if the
// file declares a different one.
template <Field F>
AlgebraFile<F> parse_algebra_file(std::string_view text, const F& field) {
  const auto doc = parse_document(text);
  if (doc.field && !(*doc.field == field.descriptor())) {
    throw error(errc::field_mismatch, "file declares " + doc.field->name() + ", expected " + field.descriptor().name());
  }
  return instantiate(doc, field);
}

}  // namespace cbalg
