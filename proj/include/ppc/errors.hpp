#pragma once

#include <stdexcept>
#include <string>

namespace ppc {

enum class errc {
    not_prime,
    reducible_modulus,
    no_modulus_found,
    zero_element,
    division_by_zero_poly,
    field_mismatch,
    degrees_out_of_range,
    non_coprime_orders,
    fixed_point_base,
    degree_too_large,
    shape_mismatch,
    too_large_to_enumerate,
    window_out_of_range,
    internal_no_solution,
    unsupported_affine_map,
    dimension_bound_violated,
    subspace_too_large_to_enumerate,
    non_default_instantiation,
    inexact_division,
    multiplicity_exceeds_characteristic,
    too_many_errors,
    infeasible_rate,
    bad_input,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

}  // namespace ppc
