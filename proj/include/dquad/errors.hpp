#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dquad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class InhomogeneousError : public Error {
public:
    InhomogeneousError(int first, int second)
        : Error("inhomogeneous form: degrees " + std::to_string(first) + " and " +
                std::to_string(second)),
          first_(first), second_(second) {}
    int first_degree() const noexcept { return first_; }
    int second_degree() const noexcept { return second_; }

private:
    int first_;
    int second_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// A Groebner computation hit one of its configured caps.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class NotZeroDimensionalError : public Error {
public:
    using Error::Error;
};

/// The quadric is singular where smoothness is required.
class SmoothnessError : public Error {
public:
    using Error::Error;
};

class NonNodalError : public Error {
public:
    using Error::Error;
};

class DuplicatePointError : public Error {
public:
    using Error::Error;
};

/// A class triple needed by an expansion has no entry in the relation table.
class MissingRelationError : public Error {
public:
    using Error::Error;
};

/// The linear system for the relation table is inconsistent or leaves an entry free.
class RelationSystemError : public Error {
public:
    using Error::Error;
};

}  // namespace dquad
