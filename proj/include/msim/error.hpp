#pragma once

#include <stdexcept>
#include <string>

namespace msim {

enum class ErrorKind {
    LengthMismatch,
    NullComparison,
    DimensionError,
    DomainError,
    OutOfBounds,
    NullTemplate,
    InvalidArgument,
    UnsupportedFormat,
    MalformedInput,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures caused by files or their contents rather than by values.
    bool is_io() const noexcept {
        return kind_ == ErrorKind::IoError || kind_ == ErrorKind::UnsupportedFormat ||
               kind_ == ErrorKind::MalformedInput;
    }

private:
    ErrorKind kind_;
};

}  // namespace msim
