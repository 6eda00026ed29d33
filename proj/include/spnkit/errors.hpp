#pragma once

#include <stdexcept>

namespace spn {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SPN_ERROR_TYPE(Name)  \
    class Name : public Error \
    {                         \
    public:                   \
        using Error::Error;   \
    }

SPN_ERROR_TYPE(DecodeError);              // malformed or truncated file
SPN_ERROR_TYPE(ValidationError);          // inconsistent arguments or metadata
SPN_ERROR_TYPE(RangeError);               // window or index out of bounds
SPN_ERROR_TYPE(PhaseError);               // operation would break CFA phase
SPN_ERROR_TYPE(UnsupportedLayoutError);   // layout not handled by the operation
SPN_ERROR_TYPE(ShapeError);               // dimensions do not conform
SPN_ERROR_TYPE(DegenerateInputError);     // e.g. constant input to a correlation
SPN_ERROR_TYPE(CalibrationMismatchError); // calibration metadata disagrees
SPN_ERROR_TYPE(ProtocolError);            // dataset cannot satisfy the experiment protocol
SPN_ERROR_TYPE(GroupingError);            // empty or malformed statistics group
SPN_ERROR_TYPE(IngestionError);           // missing or unreadable input file

#undef SPN_ERROR_TYPE

} // namespace spn
