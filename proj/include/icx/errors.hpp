#ifndef ICX_ERRORS_HPP
#define ICX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icx {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed a configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Constrained linear system has no solution.
class NoSolution : public Error {
public:
    using Error::Error;
};

// Operation called on a problem outside its class precondition.
class WrongClass : public Error {
public:
    using Error::Error;
};

// Matrix fails the T*A = I or zero-pattern preconditions of S'(c).
class NotInSPrime : public Error {
public:
    using Error::Error;
};

// Receiver cannot recover its wanted message from code + side information.
class Undecodable : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace icx

#endif
