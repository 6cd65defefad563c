#include "devissage/errors.hpp"

namespace devissage {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_prime_characteristic: return "NotPrimeCharacteristic";
        case Errc::not_associative: return "NotAssociative";
        case Errc::no_unit: return "NoUnit";
        case Errc::not_two_sided: return "NotTwoSided";
        case Errc::ideal_not_square_zero: return "IdealNotSquareZero";
        case Errc::not_submodule: return "NotSubmodule";
        case Errc::not_killed_by_ideal: return "NotKilledByI";
        case Errc::quotient_not_in_b: return "QuotientNotInB";
        case Errc::not_in_b: return "NotInB";
        case Errc::not_bimodule: return "NotBimodule";
        case Errc::condition_one_fails: return "ConditionOneFails";
        case Errc::condition_two_fails: return "ConditionTwoFails";
        case Errc::invalid_c_object: return "InvalidCObject";
        case Errc::enumeration_budget_exceeded: return "EnumerationBudgetExceeded";
        case Errc::unrecognized_factor: return "UnrecognizedFactor";
        case Errc::parse_error: return "ParseError";
        case Errc::schema_violation: return "SchemaViolation";
        case Errc::algebra_invalid: return "AlgebraInvalid";
        case Errc::ideal_invalid: return "IdealInvalid";
        case Errc::verification_failure: return "VerificationFailure";
        case Errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace devissage
