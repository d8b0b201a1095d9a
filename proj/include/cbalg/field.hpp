#pragma once

// Exact scalar fields: the rationals (arbitrary precision) and prime fields F_p.
//
// A field is a small value object (RationalField, PrimeField) that hands out
// scalars; scalars carry their arithmetic through ordinary operators. The
// prime field stores p inside every Residue so that vectors of residues are
// self-contained.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbalg/error.hpp"

namespace cbalg {

enum class FieldKind { rationals, prime };

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;

  static FieldDescriptor rationals() { return {}; }

  static FieldDescriptor prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw error(errc::invalid_field, std::to_string(p) + " is not a supported prime");
    }
    return {FieldKind::prime, static_cast<std::uint32_t>(p)};
  }

  // Accepts "Q", "F5", "Fp:5" and "GF(5)".
  static FieldDescriptor parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    std::string_view digits;
    if (text.starts_with("Fp:")) {
      digits = text.substr(3);
    } else if (text.starts_with("GF(") && text.ends_with(")")) {
      digits = text.substr(3, text.size() - 4);
    } else if (text.starts_with("F")) {
      digits = text.substr(1);
    } else {
      throw error(errc::invalid_field, "unrecognised field '" + std::string(text) + "'");
    }
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw error(errc::invalid_field, "unrecognised field '" + std::string(text) + "'");
    }
    return prime(std::stoull(std::string(digits)));
  }

  std::uint32_t characteristic() const { return kind == FieldKind::rationals ? 0 : p; }
  bool is_finite() const { return kind == FieldKind::prime; }
  std::string name() const { return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p); }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

inline std::uint32_t characteristic(const FieldDescriptor& f) { return f.characteristic(); }

namespace detail {

using bigint = boost::multiprecision::cpp_int;

// Grammar: [+-]digits[/digits]. Returns (numerator, denominator) unreduced.
inline std::pair<bigint, bigint> parse_fraction(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  auto bad = [&] { return error(errc::bad_scalar, "cannot parse scalar '" + std::string(text) + "'"); };
  auto parse_unsigned = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    return bigint(std::string(s));
  };
  std::string_view body = whole;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  bigint num = parse_unsigned(body.substr(0, slash));
  bigint den = 1;
  if (slash != std::string_view::npos) den = parse_unsigned(body.substr(slash + 1));
  if (den == 0) throw error(errc::bad_scalar, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return {num, den};
}

}  // namespace detail

class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(value_type v) : v_(std::move(v)) {}

  static Rational parse(std::string_view text) {
    auto [num, den] = detail::parse_fraction(text);
    return Rational(value_type(num, den));
  }

  const value_type& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Rational inv() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    return Rational(1 / v_);
  }

  // "a/b" with b > 0, or "a" when b == 1.
  std::string str() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::string out = numerator(v_).str();
    if (denominator(v_) != 1) out += "/" + denominator(v_).str();
    return out;
  }

  Rational operator-() const { return Rational(value_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw error(errc::division_by_zero, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  value_type v_;
};

// Least nonnegative residue modulo a prime p.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint32_t p, std::uint64_t v) : p_(p), v_(static_cast<std::uint32_t>(v % p)) {}

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Residue inv() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero mod " + std::to_string(p_));
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return {p_, result};
  }

  std::string str() const { return std::to_string(v_); }

  Residue operator-() const { return {p_, v_ == 0 ? 0u : p_ - v_}; }
  Residue& operator+=(const Residue& o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  Residue& operator/=(const Residue& o) { return *this *= o.inv(); }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator<(const Residue& a, const Residue& b) { return a.v_ < b.v_; }

 private:
  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;
};

class RationalField {
 public:
  using scalar = Rational;
  static constexpr bool finite = false;

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }
  std::uint32_t characteristic() const { return 0; }
  scalar zero() const { return {}; }
  scalar one() const { return 1; }
  scalar from_int(long long v) const { return v; }
  scalar parse(std::string_view text) const { return Rational::parse(text); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using scalar = Residue;
  static constexpr bool finite = true;

  explicit PrimeField(std::uint32_t p) : p_(FieldDescriptor::prime(p).p) {}

  FieldDescriptor descriptor() const { return {FieldKind::prime, p_}; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t order() const { return p_; }
  scalar zero() const { return {p_, 0}; }
  scalar one() const { return {p_, 1}; }
  scalar element(std::uint64_t residue) const { return {p_, residue}; }
  scalar from_int(long long v) const {
    const long long m = v % static_cast<long long>(p_);
    return {p_, static_cast<std::uint64_t>(m < 0 ? m + p_ : m)};
  }
  scalar parse(std::string_view text) const {
    auto [num, den] = detail::parse_fraction(text);
    const detail::bigint p = p_;
    auto reduce = [&](const detail::bigint& v) {
      detail::bigint r = v % p;
      if (r < 0) r += p;
      return scalar(p_, r.convert_to<std::uint64_t>());
    };
    const scalar d = reduce(den);
    if (d.is_zero()) {
      throw error(errc::bad_scalar, "'" + std::string(text) + "' has a denominator divisible by " +
                                        std::to_string(p_));
    }
    return reduce(num) / d;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F& f, typename F::scalar a, long long v) {
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { f.zero() } -> std::same_as<typename F::scalar>;
  { f.one() } -> std::same_as<typename F::scalar>;
  { f.from_int(v) } -> std::same_as<typename F::scalar>;
  { f.parse(std::string_view{}) } -> std::same_as<typename F::scalar>;
  { a + a } -> std::same_as<typename F::scalar>;
  { a * a } -> std::same_as<typename F::scalar>;
  { -a } -> std::same_as<typename F::scalar>;
  { a.inv() } -> std::same_as<typename F::scalar>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { F::finite } -> std::convertible_to<bool>;
};

template <Field F>
using Scalar = typename F::scalar;

// Coordinate vector of an algebra element.
template <Field F>
using Element = std::vector<Scalar<F>>;

// Calls fn with the concrete field object named by the descriptor.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& d, Fn&& fn) {
  if (d.kind == FieldKind::rationals) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{d.p});
}

inline constexpr std::uint64_t default_cap = 100'000;

// Number of vectors in F_p^n; throws CapExceeded if it is above cap.
template <Field F>
std::uint64_t vector_count(const F& field, std::size_t n, std::uint64_t cap) {
  if constexpr (!F::finite) {
    (void)field, (void)n, (void)cap;
    throw error(errc::infinite_field, "cannot enumerate vectors over Q");
  } else {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
      count *= field.order();
      if (count > cap) {
        throw error(errc::cap_exceeded, std::to_string(field.order()) + "^" + std::to_string(n) +
                                            " exceeds cap " + std::to_string(cap));
      }
    }
    return count;
  }
}

// Visits every vector of F_p^n once, in lexicographic order of residues.
// Stops early when fn returns false.
template <Field F, class Fn>
void for_each_vector(const F& field, std::size_t n, std::uint64_t cap, Fn&& fn) {
  const std::uint64_t count = vector_count(field, n, cap);
  if constexpr (F::finite) {
    Element<F> v(n, field.zero());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (!fn(std::as_const(v))) return;
      for (std::size_t pos = n; pos-- > 0;) {
        v[pos] += field.one();
        if (!v[pos].is_zero()) break;
      }
    }
  }
}

// As for_each_vector, but only nonzero vectors whose first nonzero
// coordinate is 1 (one representative per line through the origin).
template <Field F, class Fn>
void for_each_line(const F& field, std::size_t n, std::uint64_t cap, Fn&& fn) {
  for_each_vector(field, n, cap, [&](const Element<F>& v) {
    for (const auto& c : v) {
      if (c.is_zero()) continue;
      if (c == field.one()) return static_cast<bool>(fn(v));
      return true;
    }
    return true;
  });
}

template <Field F>
std::vector<Element<F>> enumerate_vectors(const F& field, std::size_t n, std::uint64_t cap) {
  std::vector<Element<F>> out;
  for_each_vector(field, n, cap, [&](const Element<F>& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

inline std::vector<Element<PrimeField>> enumerate_vectors(const FieldDescriptor& d, std::size_t n,
                                                          std::uint64_t cap) {
  if (!d.is_finite()) throw error(errc::infinite_field, "cannot enumerate vectors over Q");
  return enumerate_vectors(PrimeField{d.p}, n, cap);
}

}  // namespace cbalg
