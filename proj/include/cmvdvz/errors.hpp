#ifndef CMVDVZ_ERRORS_HPP
#define CMVDVZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmvdvz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |alpha_n| >= 1 is not a Verblunsky coefficient.
struct CoefficientOutOfRange : Error {
    int index;
    double value;
    CoefficientOutOfRange(int n, double v)
        : Error("coefficient out of range at index " + std::to_string(n) +
                ": " + std::to_string(v)),
          index(n), value(v) {}
};

struct NonRealCoefficient : Error {
    explicit NonRealCoefficient(int n)
        : Error("coefficient at index " + std::to_string(n) +
                " carries an imaginary part") {}
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct DegreeExceedsSequence : Error {
    DegreeExceedsSequence(std::size_t degree, std::size_t available)
        : Error("degree " + std::to_string(degree) +
                " exceeds stored sequence length " + std::to_string(available)) {}
};

struct SizeExceedsSequence : Error {
    SizeExceedsSequence(std::size_t size, std::size_t available)
        : Error("truncation size " + std::to_string(size) +
                " exceeds stored sequence length " + std::to_string(available)) {}
};

struct ZeroLambda : Error {
    ZeroLambda() : Error("lambda must be nonzero") {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Jacobi input with too few rows to pin down the two circles.
struct DegenerateInput : Error {
    using Error::Error;
};

struct NonSymmetricMeasure : Error {
    using Error::Error;
};

struct MeasureNotNormalized : Error {
    using Error::Error;
};

struct NegativeWeight : Error {
    using Error::Error;
};

struct NonFiniteIntegrand : Error {
    using Error::Error;
};

struct LossOfPositivity : Error {
    explicit LossOfPositivity(std::size_t step)
        : Error("recurrence norm not positive at step " + std::to_string(step) +
                " (quadrature underresolved or measure has too few points)") {}
};

} // namespace cmvdvz

#endif
