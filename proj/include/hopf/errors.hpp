#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define HOPF_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
       public:                                                    \
        explicit Name(const std::string& what) : Error(what) {}   \
    };

HOPF_DEFINE_ERROR(DivisionByZero)
HOPF_DEFINE_ERROR(FieldMismatch)
HOPF_DEFINE_ERROR(VariableMismatch)
HOPF_DEFINE_ERROR(ShapeMismatch)
HOPF_DEFINE_ERROR(NoAntipode)
HOPF_DEFINE_ERROR(DegenerateIntegral)
HOPF_DEFINE_ERROR(NotGroupLike)
HOPF_DEFINE_ERROR(AntipodeOrderOverflow)
HOPF_DEFINE_ERROR(BadDimension)
HOPF_DEFINE_ERROR(BadParams)
HOPF_DEFINE_ERROR(NotPrimitiveRoot)
HOPF_DEFINE_ERROR(BaseMismatch)
HOPF_DEFINE_ERROR(VerificationFailure)
HOPF_DEFINE_ERROR(ParseError)
HOPF_DEFINE_ERROR(SchemaVersionMismatch)

#undef HOPF_DEFINE_ERROR

}  // namespace hopf
