/* error.hpp -- error codes and exception type shared across the library. */

#ifndef NESTED_ERROR_HPP_
#define NESTED_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nested {

enum class Errc {
    DigitOutOfRange,
    MalformedLiteral,
    NotCanonicalizable,
    ClassBudgetExceeded,
    ScaleMismatch,
    SizeLimitExceeded,
    ConflictingRestriction,
    UnknownBuiltin,
    SyntaxError,
    InvalidSpace,
    AddressNotInSpace,
};

inline const char* errc_name(Errc code) {
    switch (code) {
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::MalformedLiteral: return "MalformedLiteral";
    case Errc::NotCanonicalizable: return "NotCanonicalizable";
    case Errc::ClassBudgetExceeded: return "ClassBudgetExceeded";
    case Errc::ScaleMismatch: return "ScaleMismatch";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::ConflictingRestriction: return "ConflictingRestriction";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidSpace: return "InvalidSpace";
    case Errc::AddressNotInSpace: return "AddressNotInSpace";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace nested

#endif // NESTED_ERROR_HPP_
