#pragma once

#include <stdexcept>
#include <string>

namespace cbalg {

enum class errc {
  invalid_field,
  infinite_field,
  cap_exceeded,
  dimension_mismatch,
  field_mismatch,
  division_by_zero,
  bad_scalar,
  not_an_ideal,
  not_closed,
  not_anti_commutative,
  verdict_mismatch,
  not_a_subspace,
  not_lie,
  not_leibniz,
  ill_defined,
  bad_dims,
  not_a_direct_sum,
  unknown_name,
  missing_epsilon,
  unexpected_epsilon,
  char_two,
  not_automorphism,
  parse_error,
  bad_index,
  diagonal_in_anticommutative,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::invalid_field: return "InvalidField";
    case errc::infinite_field: return "InfiniteField";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::bad_scalar: return "BadScalar";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_closed: return "NotClosed";
    case errc::not_anti_commutative: return "NotAntiCommutative";
    case errc::verdict_mismatch: return "VerdictMismatch";
    case errc::not_a_subspace: return "NotASubspace";
    case errc::not_lie: return "NotLie";
    case errc::not_leibniz: return "NotLeibniz";
    case errc::ill_defined: return "IllDefined";
    case errc::bad_dims: return "BadDims";
    case errc::not_a_direct_sum: return "NotADirectSum";
    case errc::unknown_name: return "UnknownName";
    case errc::missing_epsilon: return "MissingEpsilon";
    case errc::unexpected_epsilon: return "UnexpectedEpsilon";
    case errc::char_two: return "CharTwo";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::parse_error: return "ParseError";
    case errc::bad_index: return "BadIndex";
    case errc::diagonal_in_anticommutative: return "DiagonalInAnticommutative";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cbalg
