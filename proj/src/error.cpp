#include <weierforge/error.hpp>

namespace weierforge
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::invalid_argument:
            return "InvalidArgument";
        case ErrorCode::parse_error:
            return "ParseError";
        case ErrorCode::not_prime:
            return "NotPrime";
        case ErrorCode::characteristic_mismatch:
            return "CharacteristicMismatch";
        case ErrorCode::division_by_zero:
            return "DivisionByZero";
        case ErrorCode::ragged_matrix:
            return "RaggedMatrix";
        case ErrorCode::size_mismatch:
            return "SizeMismatch";
        case ErrorCode::dependent_functions:
            return "DependentFunctions";
        case ErrorCode::truncation_exceeded:
            return "TruncationExceeded";
        case ErrorCode::not_cofinite:
            return "NotCofinite";
        case ErrorCode::not_symmetric:
            return "NotSymmetric";
        case ErrorCode::not_closed:
            return "NotClosed";
        case ErrorCode::not_gorenstein:
            return "NotGorenstein";
        case ErrorCode::not_conductor:
            return "NotConductor";
        case ErrorCode::singular_point:
            return "SingularPoint";
        case ErrorCode::solution_dimension_mismatch:
            return "SolutionDimensionMismatch";
        case ErrorCode::generator_not_found:
            return "GeneratorNotFound";
        case ErrorCode::elimination_stuck:
            return "EliminationStuck";
        case ErrorCode::total_mismatch:
            return "TotalMismatch";
        case ErrorCode::internal:
            return "InternalError";
    }
    return "Unknown";
}

} // namespace weierforge
