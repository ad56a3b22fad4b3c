#pragma once

#include <stdexcept>
#include <string>

namespace tfpmis {

/// Base class for all contract violations reported by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// plane_graph
struct AsymmetricAdjacency : Error { using Error::Error; };
struct LoopOrParallelEdge : Error { using Error::Error; };
struct EulerViolation : Error { using Error::Error; };

// generators
struct BadParams : Error { using Error::Error; };

// cycles4
struct NotPlanarOrder : Error { using Error::Error; };

// treewidth
struct NotTriangleFree : Error { using Error::Error; };
struct WidthBudgetExceeded : Error { using Error::Error; };
struct JoinNotClique : Error { using Error::Error; };
struct JoinNotInBag : Error { using Error::Error; };

// augment / scatter
struct DegreeCapViolated : Error { using Error::Error; };

// coloring
struct ImproperCycleColoring : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct CertificateInvalid : Error { using Error::Error; };

// oracle
struct BudgetExceeded : Error { using Error::Error; };

// file formats / CLI input
struct ParseError : Error { using Error::Error; };

/// Raised when an internal invariant that the algorithms guarantee fails at
/// runtime; seeing this is a bug, not a usage error.
struct InternalInvariantViolation : Error { using Error::Error; };

} // namespace tfpmis
