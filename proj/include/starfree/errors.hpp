#pragma once

#include <stdexcept>
#include <string>

namespace starfree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 / edge-list / config input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A parameter outside the documented range of an operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Input exceeds a solver or predicate size cap.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// A theorem check was requested on a graph that does not satisfy its hypotheses.
class HypothesisFailed : public Error {
public:
    HypothesisFailed(std::string theorem, std::string predicate)
        : Error("hypothesis-failed: " + theorem + " requires " + predicate),
          theorem_(std::move(theorem)), predicate_(std::move(predicate)) {}

    const std::string& theorem() const noexcept { return theorem_; }
    const std::string& predicate() const noexcept { return predicate_; }

private:
    std::string theorem_;
    std::string predicate_;
};

/// Ramsey lookup outside the shipped table.
class OutOfTable : public Error {
public:
    using Error::Error;
};

/// Random sampling gave up before producing an accepted graph.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, double acceptance_rate)
        : Error(what), acceptance_rate_(acceptance_rate) {}
    double acceptance_rate() const noexcept { return acceptance_rate_; }

private:
    double acceptance_rate_;
};

}  // namespace starfree
