#pragma once

#include <stdexcept>
#include <string>

namespace bibd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed design or field-table text.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// A block family or table that violates the axioms it was asked to satisfy.
/// The message is the witness.
class AxiomError : public Error {
public:
    using Error::Error;
};

} // namespace bibd
