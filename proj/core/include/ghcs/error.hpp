#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace ghcs {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of a function (poles, x <= 0 where x > 0 is required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Series or state requested outside its convergence domain.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// An iterative procedure hit its cap before reaching the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Invalid parameter list, family/parameter mismatch, or violated precondition on parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Result not representable in double precision.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Compact "%.6g" rendering of a real for error messages (std::to_string
// prints 1e-12 as 0.000000).
inline std::string describe(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace ghcs
