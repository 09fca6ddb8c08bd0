#ifndef RIESZ_ERRORS_HPP
#define RIESZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyCarrier : Error {
    EmptyCarrier() : Error("carrier must contain at least one atom") {}
};

struct NonPositiveWeight : Error {
    std::size_t atom;
    double value;
    NonPositiveWeight(std::size_t a, double v)
        : Error("weight at atom " + std::to_string(a) + " is " + std::to_string(v) +
                ", must be strictly positive"),
          atom(a), value(v) {}
};

struct SpaceMismatch : Error {
    SpaceMismatch() : Error("operands live on different spaces") {}
};

struct NegativeTolerance : Error {
    explicit NegativeTolerance(double t)
        : Error("tolerance must be >= 0, got " + std::to_string(t)) {}
};

struct NotInvertible : Error {
    std::size_t atom;
    double value;
    NotInvertible(std::size_t a, double v)
        : Error("element not invertible: |value| at atom " + std::to_string(a) +
                " too small (" + std::to_string(v) + ")"),
          atom(a), value(v) {}
};

struct SeriesNotConverged : Error {
    int terms;
    SeriesNotConverged(int k, double increment, double threshold)
        : Error("series did not converge after " + std::to_string(k) +
                " terms (increment " + std::to_string(increment) + " > threshold " +
                std::to_string(threshold) + ")"),
          terms(k) {}
};

struct Overflow : Error {
    std::size_t atom;
    double value;
    Overflow(std::size_t a, double v)
        : Error("exponent at atom " + std::to_string(a) + " is " + std::to_string(v) +
                ", exceeds overflow bound 700"),
          atom(a), value(v) {}
};

struct NotPositiveInvertible : Error {
    std::size_t atom;
    double value;
    NotPositiveInvertible(std::size_t a, double v)
        : Error("element must be strictly positive: value at atom " + std::to_string(a) +
                " is " + std::to_string(v)),
          atom(a), value(v) {}
};

struct NotAPartition : Error {
    explicit NotAPartition(const std::string& why) : Error("not a partition: " + why) {}
};

struct NotInRange : Error {
    NotInRange() : Error("element is not in the range of the conditional expectation") {}
};

struct ProbabilityOutOfRange : Error {
    std::size_t atom;
    double value;
    ProbabilityOutOfRange(std::size_t a, double v)
        : Error("success probability at atom " + std::to_string(a) + " is " +
                std::to_string(v) + ", must lie strictly inside (0,1)"),
          atom(a), value(v) {}
};

struct ProductTooLarge : Error {
    ProductTooLarge(std::size_t base_atoms, int coins, std::size_t cap)
        : Error("product space " + std::to_string(base_atoms) + " * 2^" +
                std::to_string(coins) + " exceeds atom cap " + std::to_string(cap)) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct NonPositiveLambda : Error {
    explicit NonPositiveLambda(double l)
        : Error("lambda must be strictly positive, got " + std::to_string(l)) {}
};

struct ParameterDomain : Error {
    explicit ParameterDomain(const std::string& why) : Error("parameter domain: " + why) {}
};

struct HypothesisViolated : Error {
    std::size_t element_index;
    std::size_t atom;
    double value;
    HypothesisViolated(std::size_t i, std::size_t a, double v)
        : Error("hypothesis f <= u violated by element " + std::to_string(i) +
                " at atom " + std::to_string(a) + " (value " + std::to_string(v) + ")"),
          element_index(i), atom(a), value(v) {}
};

struct NotInBounds : Error {
    std::size_t atom;
    double value;
    NotInBounds(std::size_t a, double v, double lo, double hi)
        : Error("value " + std::to_string(v) + " at atom " + std::to_string(a) +
                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          atom(a), value(v) {}
};

struct NotSubGaussianOnGrid : Error {
    double lambda;
    double margin;
    NotSubGaussianOnGrid(double l, double m)
        : Error("sub-Gaussian bound fails at lambda = " + std::to_string(l) +
                " (margin " + std::to_string(m) + ")"),
          lambda(l), margin(m) {}
};

struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& why) : Error("invalid config: " + why) {}
};

struct IoError : Error {
    explicit IoError(const std::string& why) : Error("io error: " + why) {}
};

} // namespace riesz

#endif
