#pragma once

#include <stdexcept>
#include <string>

namespace lax {

// Base class for every error raised by the library. Derived classes carry the
// condition name so reports and the CLI can print it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LAX_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

LAX_DEFINE_ERROR(NotAtomFactorable)
LAX_DEFINE_ERROR(DivisionByZero)
LAX_DEFINE_ERROR(PoleAtExpansionPoint)
LAX_DEFINE_ERROR(DivergesAtInfinity)
LAX_DEFINE_ERROR(DivergesAtZero)
LAX_DEFINE_ERROR(SignatureMismatch)
LAX_DEFINE_ERROR(NonIntegerShift)
LAX_DEFINE_ERROR(NotAdmissible)
LAX_DEFINE_ERROR(SizeMismatch)
LAX_DEFINE_ERROR(NotPolynomial)
LAX_DEFINE_ERROR(NotLinearCase)
LAX_DEFINE_ERROR(NotScalar)
LAX_DEFINE_ERROR(NegativeEpsPower)
LAX_DEFINE_ERROR(MismatchWithRational)
LAX_DEFINE_ERROR(SingularLeadingMode)
LAX_DEFINE_ERROR(BadDiagram)
LAX_DEFINE_ERROR(ParseError)
LAX_DEFINE_ERROR(PrecisionExhausted)

#undef LAX_DEFINE_ERROR

}  // namespace lax
