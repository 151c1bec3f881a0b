#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphring {

enum class ErrorKind {
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    InvalidParameter,
    InvalidSet,
    SizeCap,
    Parse,
    Eval,
    BudgetExceeded,
    FlatCountExceeded,
    InvalidRepresentation,
    DegenerateInput,
    Io,
};

inline auto to_string(ErrorKind kind) -> const char *
{
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidSet: return "InvalidSet";
        case ErrorKind::SizeCap: return "SizeCap";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Eval: return "EvalError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::FlatCountExceeded: return "FlatCountExceeded";
        case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

/// Every failure raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) :
        std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind)
    {
    }

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

/// Raised by the expression parser; carries the byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string & what) :
        Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + what),
        _position(position)
    {
    }

    [[nodiscard]] auto position() const noexcept -> std::size_t { return _position; }

private:
    std::size_t _position;
};

} // namespace graphring
