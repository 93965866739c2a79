#pragma once

#include <cstdint>

#include "edm/cbba.hpp"

namespace edm {

/// Deterministic random CBBA for property testing.
///
/// Draws 1..min(2^n − 1, 12) distinct focal sets and Dirichlet(1) real parts
/// summing to 1. Each focal element independently becomes complex with
/// probability complex_fraction; across the complex ones an imaginary part and a
/// real perturbation are drawn and centred to sum to zero, so the complex total
/// stays 1+0i while real parts may turn negative. Draws with any modulus above 1
/// are rejected and redrawn; GenerationFailed after 1000 rounds.
///
/// complex_fraction = 0 yields classical (non-negative, real) BBAs.
Cbba random_cbba(const Frame& frame, std::uint64_t seed, double complex_fraction);

}  // namespace edm
