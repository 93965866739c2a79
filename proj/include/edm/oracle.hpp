#pragma once

#include "edm/distance.hpp"

namespace edm {

inline constexpr int kOracleMaxFrameSize = 10;

/// Reference evaluation of the evidential distance: materializes all 2^n − 1
/// non-empty subsets, a dense Jaccard matrix, and the full double sum. Shares
/// no code with edm_distance beyond Complex arithmetic. FrameTooLarge above
/// n = 10.
double brute_force_distance(const Cbba& m1, const Cbba& m2, DistanceForm form = DistanceForm::Sesquilinear);

}  // namespace edm
