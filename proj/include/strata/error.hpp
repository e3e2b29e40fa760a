#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Base of every error raised by the library. Negative outcomes that are part
/// of normal operation (a failed match, strategy failure `stk`) are values,
/// not exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

    /// Same error, relocated into an enclosing document.
    ParseError relocated(int line, int column_offset) const {
        return ParseError(message_, line, column_ + column_offset);
    }

private:
    std::string message_;
    int line_;
    int column_;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

class InvalidPosition : public Error {
public:
    using Error::Error;
};

class InvalidRule : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

class StepMismatch : public Error {
public:
    using Error::Error;
};

/// Sequential composition `p ; q` where the target of p differs from the
/// source of q.
class ComposeError : public Error {
public:
    ComposeError(const std::string& what, std::string left_target, std::string right_source)
        : Error(what), left_target_(std::move(left_target)), right_source_(std::move(right_source)) {}

    const std::string& left_target() const noexcept { return left_target_; }
    const std::string& right_source() const noexcept { return right_source_; }

private:
    std::string left_target_;
    std::string right_source_;
};

class AmbiguousIdent : public Error {
public:
    using Error::Error;
};

class UnboundSVar : public Error {
public:
    using Error::Error;
};

/// Evaluation or exploration ran out of its step budget. Never a synonym for
/// strategy failure.
class FuelExhausted : public Error {
public:
    using Error::Error;
};

class InvalidTrace : public Error {
public:
    using Error::Error;
};

} // namespace strata
