#include "msim/error.hpp"

namespace msim {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NullComparison: return "NullComparison";
        case ErrorKind::DimensionError: return "DimensionError";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::NullTemplate: return "NullTemplate";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace msim
