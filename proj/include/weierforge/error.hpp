#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weierforge
{

enum class ErrorCode {
    invalid_argument,
    parse_error,
    not_prime,
    characteristic_mismatch,
    division_by_zero,
    ragged_matrix,
    size_mismatch,
    dependent_functions,
    truncation_exceeded,
    not_cofinite,
    not_symmetric,
    not_closed,
    not_gorenstein,
    not_conductor,
    singular_point,
    solution_dimension_mismatch,
    generator_not_found,
    elimination_stuck,
    total_mismatch,
    internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Internal errors signal a broken invariant of the library itself rather
// than bad input; the CLI maps them to a distinct exit status.
constexpr bool is_internal(ErrorCode code) noexcept
{
    return code == ErrorCode::total_mismatch || code == ErrorCode::internal;
}

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what)
{
    throw Error(code, what);
}

inline void ensure(bool condition, ErrorCode code, const std::string &what)
{
    if (!condition) {
        fail(code, what);
    }
}

} // namespace weierforge
