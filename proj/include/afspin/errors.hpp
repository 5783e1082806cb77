#pragma once

#include <stdexcept>
#include <string>

namespace afspin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define AFSPIN_ERROR(Name)                         \
    class Name : public Error {                    \
    public:                                        \
        explicit Name(const std::string& what)     \
            : Error(std::string(#Name ": ") + what) \
        {                                          \
        }                                          \
    }

AFSPIN_ERROR(DimensionError);
AFSPIN_ERROR(NonVectorError);
AFSPIN_ERROR(UnsupportedScalar);
AFSPIN_ERROR(DivisionByZero);
AFSPIN_ERROR(NotInSO);
AFSPIN_ERROR(NotSignedPerm);
AFSPIN_ERROR(NotInImage);
AFSPIN_ERROR(ClosureBoundExceeded);
AFSPIN_ERROR(UnknownGroup);
AFSPIN_ERROR(InconsistentRecord);
AFSPIN_ERROR(EnumerationBoundExceeded);
AFSPIN_ERROR(ParseError);
AFSPIN_ERROR(SchemaError);
AFSPIN_ERROR(NotFound);
AFSPIN_ERROR(NonOrientable);
AFSPIN_ERROR(IoError);
AFSPIN_ERROR(InvariantViolation);

#undef AFSPIN_ERROR

} // namespace afspin
