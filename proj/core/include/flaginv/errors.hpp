#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flaginv {

// Input that is mathematically outside an operation's domain: not semi-stable,
// not generic, degenerate, wrong shape or kind.  The CLI maps this family to
// exit code 1.  `code` is a short stable identifier suitable for machine
// consumption; `what()` is the human-readable message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Text or JSON that does not conform to the documented formats.  Exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message)
        : std::runtime_error(message) {}
};

} // namespace flaginv
