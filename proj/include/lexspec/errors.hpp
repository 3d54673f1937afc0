#pragma once

#include <stdexcept>
#include <string>

namespace lexspec {

/// Malformed input text (edge lists, graph6 strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured size cap would be exceeded (oracle order, operator length,
/// polynomial degree, exact-arithmetic work bounds).
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: non-convergence, or a quantity that the theory
/// guarantees real/integral came out otherwise.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural identity that must hold by construction was violated.
/// Always indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace lexspec
