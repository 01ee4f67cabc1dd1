#ifndef SR3_ERRORS_HPP
#define SR3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sr3 {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range ids, wrong valuation mode, malformed inputs.
class InputError : public Error {
public:
    using Error::Error;
};

/// An enumeration or oracle call refused because the input exceeds its budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; carries the 1-based offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A decoded structure does not have the shape required by its contract.
class StructureError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; inputs violated a precondition the caller
/// promised to uphold. Never results in a silently wrong matching.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace sr3

#endif
