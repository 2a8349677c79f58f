#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cribga {

/// Input file content that cannot be interpreted (bad token, bad record).
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& what)
        : std::runtime_error(what)
    {
    }

    MalformedInput(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }

    std::optional<std::size_t> line() const { return line_; }

private:
    std::optional<std::size_t> line_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parameters outside their documented domain.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A required input file is missing or unreadable.
class InputNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cribga
