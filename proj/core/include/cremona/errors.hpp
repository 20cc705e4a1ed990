#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cremona {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

struct non_square : error {
  non_square() : error("matrix is not square") {}
};

struct dimension_mismatch : error {
  dimension_mismatch() : error("dimension mismatch") {}
};

struct precision_exhausted : error {
  explicit precision_exhausted(const std::string& what = "certification failed at maximal precision")
      : error(what) {}
};

struct ball_coefficients : error {
  ball_coefficients() : error("operation requires exact coefficients") {}
};

struct null_composition : error {
  null_composition() : error("all components of the composition vanish identically") {}
};

struct zero_jacobian : error {
  zero_jacobian() : error("jacobian determinant vanishes identically") {}
};

struct not_minus_two : error {
  not_minus_two() : error("vector does not have self-intersection -2") {}
};

struct too_small : error {
  explicit too_small(const std::string& what) : error(what) {}
};

struct infinite_order : error {
  infinite_order() : error("element has infinite order") {}
};

struct non_divisible : error {
  explicit non_divisible(const std::string& what = "exact division leaves a remainder") : error(what) {}
};

struct excluded_parameter : error {
  explicit excluded_parameter(const std::string& what) : error(what) {}
};

struct pole_at_base : error {
  pole_at_base() : error("chart denominator vanishes at the base point") {}
};

struct indeterminate_orbit : error {
  indeterminate_orbit() : error("orbit hits the indeterminacy set") {}
};

struct inconclusive : error {
  explicit inconclusive(const std::string& what) : error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace cremona

#endif
