#pragma once

#include <stdexcept>
#include <string>

namespace coeffkit {

/// Base class for all recoverable coeffkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is outside an operation's domain (bad power, row, degree, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A position falls outside the addressed triangle row.
class PositionError : public DomainError {
public:
    explicit PositionError(const std::string& what) : DomainError(what) {}
};

/// A checked 64-bit computation would wrap; no wrapped value is ever produced.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

} // namespace coeffkit
