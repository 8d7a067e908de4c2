#pragma once

#include <stdexcept>
#include <string>

namespace avslope {

enum class errc {
  // polygon construction and enumeration
  total_mass_odd,
  symmetry_violation,
  denominator_violation,
  slope_out_of_range,
  bad_multiplicity,
  bound_exceeded,
  wedge_degree_out_of_range,
  empty_multiset,
  // characteristic polynomials
  not_monic,
  odd_degree,
  degree_mismatch,
  functional_equation_failed,
  asymmetric_polygon,
  zero_constant_term,
  not_prime,
  // curves and scanning
  zero_discriminant,
  bad_prime,
  small_prime,
  even_prime,
  hasse_violation,
  non_integral_coefficient,
  // front end
  parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace avslope
