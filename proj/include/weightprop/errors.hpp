#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weightprop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Mathematically invalid request: inhomogeneous data, non-minimal maps, mismatched ranks.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace weightprop
