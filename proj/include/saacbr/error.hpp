#pragma once

#include <stdexcept>
#include <string>

namespace saacbr {

// Error categories surfaced to callers and mapped to CLI exit codes.
enum class ErrorKind {
    InvalidArgument,
    KindMismatch,
    SupportCycle,
    MalformedJson,
    Schema,
    UnknownValue,
    ConfidenceRange,
    DuplicateImageId,
    EmptyInput,
    MissingClass,
    Clustering,
    Config,
    BundleVersion,
    BundleCorrupt,
    UnsatisfiableRule,
    Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace saacbr
