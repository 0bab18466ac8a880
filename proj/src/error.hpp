#pragma once

#include <stdexcept>
#include <string>

namespace rqa {

// Error classes map one-to-one onto the CLI exit codes and the C API
// status values, so they are fixed here and nowhere else.
enum class ErrorKind {
    Usage   = 1,  // bad invocation
    Parse   = 2,  // syntax, unknown name, arity conflict
    Safety  = 3,  // unsafe rule or query
    Data    = 4,  // catalog/CSV problems, runtime type errors
    Mapping = 5,  // essential predicate without a mapping
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Position in a source text, 1-based. line == 0 means "not tracked".
struct SourcePos {
    int line = 0;
    int column = 0;
};

class ParseError : public Error {
public:
    ParseError(std::string message, SourcePos pos)
        : Error(ErrorKind::Parse, pos.line > 0
                    ? std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                          ": " + message
                    : message),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// Non-fatal findings collected by validation passes.
enum class Severity { Note, Warning, Error };

struct Diagnostic {
    Severity severity;
    std::string message;
};

} // namespace rqa
