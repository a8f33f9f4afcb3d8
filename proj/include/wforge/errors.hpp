// Error hierarchy. Every failure mode that callers are expected to handle has
// its own type; all derive from wf::Error so a CLI can map them to exit codes.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parser failure; `offset` is the byte offset into the source text.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct UnknownIdentifier : ParseError {
    using ParseError::ParseError;
};

struct NonIntegerExponent : ParseError {
    using ParseError::ParseError;
};

// Evaluation hit a pole (denominator modulus below the pole threshold) or
// overflowed to a non-finite value.
struct PoleSignal : Error {
    using Error::Error;
    PoleSignal() : Error("pole encountered during evaluation") {}
};

// log(0) and friends.
struct DomainError : Error {
    using Error::Error;
};

// Wirtinger differentiation of an unsupported node (abs).
struct UnsupportedNode : Error {
    using Error::Error;
};

// Numeric order estimation did not converge to an integer.
struct InconclusiveOrder : Error {
    double confidence;
    explicit InconclusiveOrder(double conf)
        : Error("vanishing-order estimate inconclusive (confidence " +
                std::to_string(conf) + ")"),
          confidence(conf) {}
};

struct BothMuVanish : Error {
    BothMuVanish() : Error("omega_1 -/+ i*omega_2 both vanish; data is degenerate") {}
};

struct NonUnitInput : Error {
    NonUnitInput() : Error("input vector is not on the unit sphere") {}
};

struct MaxDepthExceeded : Error {
    MaxDepthExceeded() : Error("adaptive quadrature exceeded maximum refinement depth") {}
};

struct PathBlocked : Error {
    using Error::Error;
    PathBlocked() : Error("no admissible path around the punctures") {}
};

struct NotHolomorphic : Error {
    NotHolomorphic() : Error("operation requires holomorphic (mu,nu) data") {}
};

struct NotSimplyConnected : Error {
    NotSimplyConnected() : Error("chart contains a puncture, hence is not simply connected") {}
};

struct BranchAnchorInvalid : Error {
    BranchAnchorInvalid() : Error("square-root branch anchor sits on a zero of the data") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("2x2 action matrix is singular") {}
};

struct NotQuaternionic : Error {
    NotQuaternionic() : Error("matrix is not in the R+ x SU(2) subgroup") {}
};

struct EmptyGrid : Error {
    EmptyGrid() : Error("every grid cell was dropped; nothing to mesh") {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace wf
