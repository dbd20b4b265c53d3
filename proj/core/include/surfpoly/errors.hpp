#ifndef SURFPOLY_ERRORS_HPP
#define SURFPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surfpoly {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data (unparseable files, bad text grammar).
struct InputError : Error {
    using Error::Error;
};

/// Structurally valid input that violates a semantic precondition.
struct SemanticError : Error {
    using Error::Error;
};

// -- combinatorial maps -----------------------------------------------------

struct NotAPermutation : SemanticError {
    using SemanticError::SemanticError;
};
struct AlphaNotInvolution : SemanticError {
    using SemanticError::SemanticError;
};
struct AlphaHasFixedPoint : SemanticError {
    using SemanticError::SemanticError;
};
struct OddHalfEdgeCount : SemanticError {
    using SemanticError::SemanticError;
};
struct EdgeOutOfRange : SemanticError {
    using SemanticError::SemanticError;
};

// -- embedded graphs --------------------------------------------------------

struct HNotWithinMarked : SemanticError {
    using SemanticError::SemanticError;
};
struct EdgeNotMarked : SemanticError {
    using SemanticError::SemanticError;
};
struct NotCellular : SemanticError {
    using SemanticError::SemanticError;
};

// -- Laurent polynomials ----------------------------------------------------

struct VarSetMismatch : SemanticError {
    using SemanticError::SemanticError;
};
struct MissingAssignment : SemanticError {
    using SemanticError::SemanticError;
};
struct NonInvertibleSubstituentForNegativeExponent : SemanticError {
    using SemanticError::SemanticError;
};
struct ZeroAtNegativeExponent : SemanticError {
    using SemanticError::SemanticError;
};
struct NotDivisible : SemanticError {
    using SemanticError::SemanticError;
};
struct ExponentOverflow : SemanticError {
    using SemanticError::SemanticError;
};
struct SyntaxError : InputError {
    using InputError::InputError;
};
struct UnknownVariable : InputError {
    using InputError::InputError;
};

// -- matroids ---------------------------------------------------------------

struct GroundSetTooLarge : SemanticError {
    using SemanticError::SemanticError;
};
struct GroundSetMismatch : SemanticError {
    using SemanticError::SemanticError;
};
struct NotAMatroid : SemanticError {
    using SemanticError::SemanticError;
};
struct NotAPerspective : SemanticError {
    using SemanticError::SemanticError;
};

// -- enumeration ------------------------------------------------------------

struct TooLarge : SemanticError {
    using SemanticError::SemanticError;
};

}  // namespace surfpoly

#endif
