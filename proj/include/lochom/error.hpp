#pragma once

#include <stdexcept>
#include <string>

namespace lochom {

/// Base class of everything the library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input could not be parsed or is structurally invalid (bad simplex, loop edge, bad JSON).
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// Input is well formed but violates an operation's precondition
/// (set not open, graph disconnected, simplex not in the complex, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotOpenError : public PreconditionError {
public:
    explicit NotOpenError(const std::string& what = "set is not open in the Alexandrov topology")
        : PreconditionError(what) {}
};

class NotClosedError : public PreconditionError {
public:
    explicit NotClosedError(const std::string& what = "set is not a subcomplex")
        : PreconditionError(what) {}
};

class UnknownSimplexError : public PreconditionError {
public:
    explicit UnknownSimplexError(const std::string& what = "simplex is not a face of the complex")
        : PreconditionError(what) {}
};

class DisconnectedGraphError : public PreconditionError {
public:
    explicit DisconnectedGraphError(const std::string& what = "graph is not connected")
        : PreconditionError(what) {}
};

}  // namespace lochom
