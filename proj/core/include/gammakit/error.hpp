#pragma once

#include <stdexcept>
#include <string>

namespace gammakit {

/// Thrown when a request exceeds a configured size or time guard.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& what, long requested, long limit)
        : std::runtime_error(what + ": requested " + std::to_string(requested) +
                             ", limit " + std::to_string(limit)),
          requested_(requested), limit_(limit) {}

    long requested() const noexcept { return requested_; }
    long limit() const noexcept { return limit_; }

private:
    long requested_;
    long limit_;
};

/// Thrown when text input (partitions, graphs, shapes) cannot be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void check_guard(const char* what, long requested, long limit) {
    if (requested > limit) throw GuardError(what, requested, limit);
}

}  // namespace gammakit
