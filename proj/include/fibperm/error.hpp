#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibperm {

enum class ErrorKind {
    invalid_input,
    not_in_class,
    invalid_maxima,
    precondition,
    bound_exceeded,
    non_invertible,
    insufficient_length,
    overflow,
    unbalanced,
    negative_prefix,
    empty_row,
    unsupported_row,
    empty_column,
    detached_column,
    run_shape,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::not_in_class: return "not_in_class";
        case ErrorKind::invalid_maxima: return "invalid_maxima";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::bound_exceeded: return "bound_exceeded";
        case ErrorKind::non_invertible: return "non_invertible";
        case ErrorKind::insufficient_length: return "insufficient_length";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::unbalanced: return "unbalanced";
        case ErrorKind::negative_prefix: return "negative_prefix";
        case ErrorKind::empty_row: return "empty_row";
        case ErrorKind::unsupported_row: return "unsupported_row";
        case ErrorKind::empty_column: return "empty_column";
        case ErrorKind::detached_column: return "detached_column";
        case ErrorKind::run_shape: return "run_shape";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fibperm
