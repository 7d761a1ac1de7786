#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightMismatch : Error {
    using Error::Error;
};

struct PartExceedsWidth : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct AllWidthsOne : Error {
    using Error::Error;
};

struct UnpairedM : Error {
    using Error::Error;
};

struct InvalidOverlap : Error {
    using Error::Error;
};

struct ZeroPart : Error {
    using Error::Error;
};

/// Base for errors raised while applying a middle convolution step.
struct ConvolutionError : Error {
    using Error::Error;
};

struct DegenerateKernel : ConvolutionError {
    using ConvolutionError::ConvolutionError;
};

struct NegativePart : ConvolutionError {
    using ConvolutionError::ConvolutionError;
};

struct InvalidConvolution : ConvolutionError {
    using ConvolutionError::ConvolutionError;
};

struct EigenvalueCollision : ConvolutionError {
    using ConvolutionError::ConvolutionError;
};

/// Raised by document deserialization; the message names the violated
/// invariant and the JSON path.
struct ParseError : Error {
    using Error::Error;
};

} // namespace charvar
