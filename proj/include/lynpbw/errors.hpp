#ifndef LYNPBW_ERRORS_HPP
#define LYNPBW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lynpbw {

enum class Errc {
    FieldMismatch,
    DivisionByZero,
    ZeroScalar,
    AlphabetMismatch,
    TooShort,
    ZeroPolynomial,
    Inhomogeneous,
    IndexOutOfRange,
    InhomogeneousRelation,
    DegreeOverBound,
    NotReduced,
    NotLyndon,
    NotClosed,
    NotLyndonIdeal,
    NotAntichain,
    NotAllLyndon,
    CounitViolation,
    DegreeMismatch,
    PreconditionViolated,
    SubalgebraNotVerified,
    BasisNotVerified,
    NontrivialBicharacter,
    FiniteHeightPresent,
    SyntaxError,
    ValidationError,
    UnknownCommand,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace lynpbw

#endif
