#pragma once

#include <stdexcept>
#include <string>

namespace sge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// elliptic_core
struct ModulusSingular : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct PhaseJump : Error { using Error::Error; };

// jacobi_fn
struct PoleProximity : Error { using Error::Error; };
struct StripViolation : Error { using Error::Error; };

// transforms
struct BadCase : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// sge_solutions
struct EnergyRange : Error { using Error::Error; };
struct SuperluminalVelocity : Error { using Error::Error; };
struct BranchJump : Error { using Error::Error; };

// bridge_verify
struct BranchInconsistent : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

} // namespace sge
