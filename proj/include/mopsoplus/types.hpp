#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mopsoplus {

/// Objective vector of the two-objective design problem: resilience is
/// maximised, cost (reported in millions of currency units) is minimised.
struct ObjectivePair {
    double resilience = 0.0;
    double cost = 0.0;

    friend bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
};

/// Constraint record attached to every evaluated solution. `deficit` is the
/// summed shortfall below the required minimum (meters of head for network
/// problems); zero iff the solution is feasible.
struct Feasibility {
    bool feasible = true;
    double deficit = 0.0;

    static Feasibility ok() { return {true, 0.0}; }
    static Feasibility violated(double deficit) { return {false, deficit}; }
    /// Sentinel for evaluations that could not be completed (e.g. a
    /// non-converging hydraulic solve): worst possible finite deficit.
    static Feasibility failed() { return {false, std::numeric_limits<double>::max()}; }

    friend bool operator==(const Feasibility&, const Feasibility&) = default;
};

using Decision = std::vector<std::int32_t>;

/// An evaluated point: integer decision vector (1-based value indices, one
/// per variable) plus its objectives and constraint record.
struct Solution {
    Decision decision;
    ObjectivePair objectives;
    Feasibility feasibility;
};

struct Evaluation {
    ObjectivePair objectives;
    Feasibility feasibility;
};

// -- error types ------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct DisconnectedNetwork : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct InputNotND : Error {
    using Error::Error;
};

struct EmptyArchive : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace mopsoplus
