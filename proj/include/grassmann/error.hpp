#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside an operation's domain.
class InvalidArgs : public Error {
public:
    using Error::Error;
};

class NotPrimePower : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

class TooLarge : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

class NotDivisor : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

class InvalidShape : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

class ParseError : public InvalidArgs {
public:
    using InvalidArgs::InvalidArgs;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public DimensionMismatch {
public:
    using DimensionMismatch::DimensionMismatch;
};

class NotSubspace : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class DegenerateBound : public Error {
public:
    using Error::Error;
};

} // namespace grassmann
