#pragma once

#include <stdexcept>
#include <string>

namespace dqc {

// Contract violations on inputs (CLI exit code 1).
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonHermitianHamiltonian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NegativeRate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ModelTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyDataset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingleClassDataset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failures detected at run time (CLI exit code 2).
struct NoSteadyState : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateSteadyState : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RouteMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonFiniteObjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dqc
