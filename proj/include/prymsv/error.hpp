#ifndef PRYMSV_ERROR_HPP
#define PRYMSV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace prymsv
{

enum class ErrorKind {
    InvalidArgument,
    InvalidDiscriminant,
    SquareDiscriminant,
    OutOfRange,
    EmptyLocus,
    NotApplicable,
    DivisionByZero,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers
// (the CLI in particular) can report the precise exclusion reason.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept
    {
        return kind_;
    }

private:
    ErrorKind kind_;
};

} // namespace prymsv

#endif
