#ifndef DEGEN_ERRORS_HPP
#define DEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degen
{

// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument lies outside the real-branch or convergence domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

class ZeroConstantTerm : public Error
{
public:
    ZeroConstantTerm() : Error("power series has a non-invertible constant term") {}
};

class ZeroDenominator : public Error
{
public:
    ZeroDenominator() : Error("denominator is zero") {}
};

// Operation only defined for lambda = 1/m with m a positive integer.
class NotTerminating : public DomainError
{
public:
    explicit NotTerminating(const std::string& what)
        : DomainError(what + ": lambda must be 1/m for a positive integer m")
    {
    }
};

class MaxTermsExceeded : public Error
{
public:
    using Error::Error;
};

class MaxDepthExceeded : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace degen

#endif
