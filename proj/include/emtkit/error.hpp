#pragma once

#include <stdexcept>
#include <string>

namespace emtkit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on the mathematical input failed (wrong sizes, axiom violated, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An enumeration or construction would exceed a configured cap. Callers that
// verify properties must report this as "inconclusive", never as a pass.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Malformed textual input. `pointer` is a JSON pointer to the offending node.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string pointer = "")
        : Error(pointer.empty() ? message : pointer + ": " + message),
          pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

// Two independent routes to the same quantity disagreed. This is always a bug
// in the library (or a counterexample to a theorem) and is never caught internally.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace emtkit
