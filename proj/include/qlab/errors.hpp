#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Error codes double as machine-readable identifiers in CLI output.
enum class errc {
  parse_error,
  validation_error,
  non_homogeneous,
  unknown_vertex,
  not_quadratic,
  degree_cap_exceeded,
  non_quadratic_extension,
  not_properly_graded,
  window_too_small,
  not_a_source,
  not_a_sink,
  non_unit_constant_term,
  not_integer_multiplicity,
  non_orthonormal_table,
  parameter_zero,
  size_too_small,
  unsupported_family,
  not_loewy_bounded,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::non_homogeneous: return "NonHomogeneous";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::not_quadratic: return "NotQuadratic";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::non_quadratic_extension: return "NonQuadratic";
    case errc::not_properly_graded: return "NotProperlyGraded";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::not_a_source: return "NotASource";
    case errc::not_a_sink: return "NotASink";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::not_integer_multiplicity: return "NotIntegerMultiplicity";
    case errc::non_orthonormal_table: return "NonOrthonormalTable";
    case errc::parameter_zero: return "ParameterZero";
    case errc::size_too_small: return "SizeTooSmall";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::not_loewy_bounded: return "NotLoewyBounded";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

// Input/usage problems exit the CLI with 2, mathematical obstructions with 3.
inline bool is_user_error(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::validation_error:
    case errc::unknown_vertex:
    case errc::invalid_argument:
      return true;
    default:
      return false;
  }
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace qlab
