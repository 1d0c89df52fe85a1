#pragma once

#include <stdexcept>
#include <string>

namespace dgfree
{

/// Malformed or inconsistent user input (bad shapes, mixed fields, parse errors).
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was asked of an object outside its domain (e.g. a noncommutative
/// algebra handed to the truncated-polynomial recognizer).
class NotApplicableError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A broken internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace dgfree
