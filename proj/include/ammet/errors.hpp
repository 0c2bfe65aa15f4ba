#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ammet {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative solver failed to meet its convergence criterion.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad flag, bad format token, or otherwise malformed request from a caller.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data. Line and column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(describe(line, column, what)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string describe(std::size_t line, std::size_t column, const std::string& what) {
        std::string s = "line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// A data row carries a different indicator code than the one requested.
class IndicatorMismatchError : public ParseError {
public:
    using ParseError::ParseError;
};

// Failures of the remote indicator client. Each variant is distinct so callers
// can tell a dead network from a server refusal from a garbled response.
class FetchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TransportError : public FetchError {
public:
    using FetchError::FetchError;
};

class HttpStatusError : public FetchError {
public:
    HttpStatusError(int status, const std::string& what) : FetchError(what), status_(status) {}
    int status() const noexcept { return status_; }

private:
    int status_;
};

class PayloadError : public FetchError {
public:
    using FetchError::FetchError;
};

}  // namespace ammet
