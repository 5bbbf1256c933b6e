#include "lynpbw/errors.hpp"

namespace lynpbw {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroScalar: return "ZeroScalar";
        case Errc::AlphabetMismatch: return "AlphabetMismatch";
        case Errc::TooShort: return "TooShort";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::Inhomogeneous: return "Inhomogeneous";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InhomogeneousRelation: return "InhomogeneousRelation";
        case Errc::DegreeOverBound: return "DegreeOverBound";
        case Errc::NotReduced: return "NotReduced";
        case Errc::NotLyndon: return "NotLyndon";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotLyndonIdeal: return "NotLyndonIdeal";
        case Errc::NotAntichain: return "NotAntichain";
        case Errc::NotAllLyndon: return "NotAllLyndon";
        case Errc::CounitViolation: return "CounitViolation";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::SubalgebraNotVerified: return "SubalgebraNotVerified";
        case Errc::BasisNotVerified: return "BasisNotVerified";
        case Errc::NontrivialBicharacter: return "NontrivialBicharacter";
        case Errc::FiniteHeightPresent: return "FiniteHeightPresent";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::UnknownCommand: return "UnknownCommand";
    }
    return "UnknownError";
}

} // namespace lynpbw
