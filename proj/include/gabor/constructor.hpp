#pragma once

#include <cstdint>
#include <utility>

#include "gabor/signal.hpp"

namespace gabor {

/// Parseval system on ℓ²(ℤ) for N ≤ LM: windows (1/√M)·χ over consecutive
/// blocks of length M tiling {0, …, N−1} (the last block may be shorter);
/// windows beyond the tiling are zero. Throws DensityViolation if N > LM.
GaborSystem construct_parseval(std::int64_t L, std::int64_t M, std::int64_t N);

/// Orthonormal basis on ℓ²(ℤ) for N = LM: L blocks of length M, scaled by 1/√M.
/// Throws ShapeViolation if N ≠ LM.
GaborSystem construct_orthonormal(std::int64_t L, std::int64_t M, std::int64_t N);

/// Number of auxiliary windows appended by dual_completion: ⌈N/M⌉.
std::int64_t completion_window_count(std::int64_t M, std::int64_t N);

/// Completes two finitely supported (hence Bessel) systems on ℓ²(ℤ) to a dual pair.
///
/// Appends K = ⌈N/M⌉ windows to each: the g-side gets a Parseval auxiliary g'
/// from construct_parseval(K, M, N), the h-side gets g' − U_h U_g* g', computed by
/// exact finite enumeration. The result satisfies U_H U_G* = I.
std::pair<GaborSystem, GaborSystem> dual_completion(const GaborSystem& sys_g,
                                                    const GaborSystem& sys_h);

}  // namespace gabor
