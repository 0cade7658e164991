#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lamw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of the requested operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Iteration failed to reach the requested tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// A constant violates a family/operation constraint (e.g. division by it).
class InvalidParamError : public Error {
public:
    explicit InvalidParamError(const std::string& msg) : Error(msg) {}
};

/// Result or intermediate exceeds the representable floating range.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

/// Text could not be parsed; carries a 1-based position and expectation set.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position,
               std::vector<std::string> expected = {})
        : Error(msg + " at position " + std::to_string(position)),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// No catalog family matches the expression; lists nearest misses.
class NoMatchError : public Error {
public:
    NoMatchError(const std::string& msg,
                 std::vector<std::string> near_misses = {})
        : Error(msg), near_misses_(std::move(near_misses)) {}

    const std::vector<std::string>& near_misses() const { return near_misses_; }

private:
    std::vector<std::string> near_misses_;
};

}  // namespace lamw
