#pragma once

#include <stdexcept>
#include <string>

namespace trv {

/// Bad input data: malformed tables, broken invariants, out-of-range indices.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configurable size cap was exceeded (closure too large, enumeration too big).
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read, parsed, or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace trv
