#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace algspec {

// Base of every error thrown by the library. `category()` is a short stable
// token used by the CLI for machine-parsable error lines.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* category() const noexcept { return "error"; }
};

// Malformed expression text or wrong call arity.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }
    const char* category() const noexcept override { return "parse"; }

private:
    std::size_t offset_;
};

// A value outside the domain an operation accepts (sinc(0), division by the
// zero rational function, non-uniform sampling for the DFT, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what,
                         std::optional<std::size_t> offset = std::nullopt)
        : Error(what), offset_(offset) {}
    std::optional<std::size_t> offset() const noexcept { return offset_; }
    const char* category() const noexcept override { return "domain"; }

private:
    std::optional<std::size_t> offset_;
};

// The input is well formed but outside what a pipeline handles.
class UnsupportedError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "unsupported"; }
};

// Iterative numerics failed (root iteration did not converge, ...).
class NumericalError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "numerical"; }
};

} // namespace algspec
