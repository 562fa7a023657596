#pragma once

#include <stdexcept>
#include <string>

namespace coolnum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input: out-of-range endpoint, self-loop, bad parameter.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    Disconnected() : Error("graph is not connected") {}
    explicit Disconnected(const std::string & what) : Error(what) {}
};

/// A source choice that is out of range or already cooled at its selection point.
class InvalidSequence : public Error {
public:
    InvalidSequence(const std::string & what, int round, int node) :
        Error(what), round_(round), node_(node)
    {
    }

    int round() const noexcept { return round_; }
    int node() const noexcept { return node_; }

private:
    int round_;
    int node_;
};

/// Input exceeds a solver cap, or the time budget ran out.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// A strategy was asked to run on a graph outside the family it is defined for.
class StrategyMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace coolnum
