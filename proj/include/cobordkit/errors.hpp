#pragma once

#include <stdexcept>
#include <string>

namespace cobordkit {

// Invalid mathematical input: out-of-domain parameter or malformed
// combinatorial data.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Operands belong to incompatible structures (distinct rings, distinct ranks).
class MismatchError : public std::invalid_argument {
public:
    explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed external input (JSON documents, numeric strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A library postcondition failed its self-check. Never expected on valid data.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cobordkit
