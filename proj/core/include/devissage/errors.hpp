#pragma once

#include <stdexcept>
#include <string>

namespace devissage {

// Error kinds mirror the failure modes of the public operations. The CLI
// maps them onto exit codes: budget overruns -> 3, invalid input -> 2,
// failed verification -> 1.
enum class Errc {
    not_prime_characteristic,
    not_associative,
    no_unit,
    not_two_sided,
    ideal_not_square_zero,
    not_submodule,
    not_killed_by_ideal,
    quotient_not_in_b,
    not_in_b,
    not_bimodule,
    condition_one_fails,
    condition_two_fails,
    invalid_c_object,
    enumeration_budget_exceeded,
    unrecognized_factor,
    parse_error,
    schema_violation,
    algebra_invalid,
    ideal_invalid,
    verification_failure,
    bad_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message);
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace devissage
