#pragma once

#include <stdexcept>
#include <string>

namespace minda {

/// Base class for every failure this library throws on purpose.  Catching
/// minda::Error separates domain problems (bad parameters, lost convergence)
/// from genuine bugs, which surface as assertions or std exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor or routine received a parameter outside its documented range.
struct ParameterOutOfRange : Error {
    using Error::Error;
};

/// Series division requires a nonzero constant term in the denominator.
struct DivisionByZeroConstantTerm : Error {
    using Error::Error;
};

/// exp/log/pow of a truncated series need a normalized constant term
/// (0 for exp, 1 for log and pow) up to a small tolerance.
struct BadConstantTerm : Error {
    using Error::Error;
};

/// An evaluation point landed on (or numerically indistinguishable from) a
/// pole or a branch cut of the requested map.
struct BranchCutHit : Error {
    using Error::Error;
};

/// Order doubling failed to stabilize a truncated-series value; the requested
/// radius is too close to the edge of reliable truncation.
struct TruncationNotConverged : Error {
    using Error::Error;
};

/// Adaptive quadrature hit its recursion cap before meeting the tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// A bracketing solve was called with endpoints that do not straddle a root
/// (or, for predicate bisection, do not straddle the true/false transition).
struct NoSignChange : Error {
    using Error::Error;
};

/// A predicate handed to radius bisection flipped more than once on the
/// validation scan; the bisected answer would be meaningless.
struct PredicateNotMonotone : Error {
    using Error::Error;
};

/// A function evaluation required dividing by a quantity that vanished on the
/// sample grid (for instance f(z)/z when f has an unexpected zero).
struct EvaluatorSingularity : Error {
    using Error::Error;
};

/// A sampled boundary curve remained too jagged after refinement: adjacent
/// samples still differ by more than the allowed gap at the subdivision cap.
struct GridTooCoarse : Error {
    using Error::Error;
};

}  // namespace minda
