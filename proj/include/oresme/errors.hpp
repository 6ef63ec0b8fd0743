#pragma once

#include <stdexcept>
#include <string>

namespace oresme {

// Evaluation at a point where a negative-exponent term (or a denominator)
// blows up, e.g. x = 0.
class ZeroPointError : public std::domain_error {
public:
    explicit ZeroPointError(const std::string& what) : std::domain_error(what) {}
};

// Real-branch requirement violated (x^2 <= 4 where the closed forms need
// x^2 - 4 > 0).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Exponent arithmetic left the machine-integer range.
class ExponentOverflowError : public std::overflow_error {
public:
    explicit ExponentOverflowError(const std::string& what) : std::overflow_error(what) {}
};

class UnknownIdentityError : public std::runtime_error {
public:
    explicit UnknownIdentityError(const std::string& id)
        : std::runtime_error("unknown identity: " + id) {}
};

class InvalidSweepError : public std::runtime_error {
public:
    explicit InvalidSweepError(const std::string& what) : std::runtime_error(what) {}
};

// Raised while evaluating a DSL expression, e.g. division by a side that is
// identically the zero polynomial for some assignment.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oresme
