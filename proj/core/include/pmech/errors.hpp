#pragma once

#include <stdexcept>
#include <string>

namespace pmech {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mathematical failures (poles, shape mismatches). The CLI maps these to exit code 3.
class MathError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
    using MathError::MathError;
};

class DimensionMismatch : public MathError {
public:
    using MathError::MathError;
};

/// A coefficient has a pole at h2 = 0, so no 1-jet exists there.
class PoleAtClassicalLimit : public MathError {
public:
    using MathError::MathError;
};

class PoleAtEvaluation : public MathError {
public:
    using MathError::MathError;
};

/// Classical-only operation received an observable whose coefficients mention h1 or h2.
class NotClassical : public MathError {
public:
    using MathError::MathError;
};

class NoPreimage : public MathError {
public:
    using MathError::MathError;
};

/// Input errors. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column, std::string expected)
        : InputError(what), line_(line), column_(column), expected_(std::move(expected)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

}  // namespace pmech
