#pragma once

#include <stdexcept>
#include <string>

namespace scoper {

// Base class for every error surfaced to callers; the CLI maps subclasses
// to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class UndeclaredFluentError : public Error {
    using Error::Error;
};

class PreconditionViolatedError : public Error {
    using Error::Error;
};

class CnfBlowupError : public Error {
public:
    CnfBlowupError(std::size_t cap_, std::size_t reached_)
        : Error("CNF conversion exceeded clause cap " + std::to_string(cap_) +
                " (reached " + std::to_string(reached_) + " clauses)"),
          cap(cap_),
          reached(reached_) {}

    std::size_t cap;
    std::size_t reached;
};

class ParseError : public Error {
public:
    ParseError(const std::string& where, int line_, const std::string& message)
        : Error(where + ":" + std::to_string(line_) + ": " + message),
          location(where),
          line(line_) {}

    std::string location;
    int line;
};

class UnsupportedFeatureError : public Error {
public:
    explicit UnsupportedFeatureError(const std::string& feature_,
                                     const std::string& message = "")
        : Error("unsupported feature " + feature_ +
                (message.empty() ? "" : ": " + message)),
          feature(feature_) {}

    std::string feature;
};

class AxiomsUnsupportedError : public Error {
public:
    AxiomsUnsupportedError()
        : Error("SAS+ tasks with axioms are not supported") {}
};

class GroundingExplosionError : public Error {
public:
    GroundingExplosionError(long long count, long long cap)
        : Error("grounding would produce " + std::to_string(count) +
                " actions, which exceeds the cap of " + std::to_string(cap)) {}
};

class EmitInconsistencyError : public Error {
    using Error::Error;
};

class ReplayException : public Error {
public:
    ReplayException(int step_, const std::string& message)
        : Error("replay failed at step " + std::to_string(step_) + ": " + message),
          step(step_) {}

    int step;
};

class InvalidProblemError : public Error {
    using Error::Error;
};

}  // namespace scoper
