#pragma once

namespace opcalc::tol {

// Minimum magnitude a series constant term needs before inversion.
inline constexpr double kUnit = 1e-12;

// Relative threshold below which a series coefficient counts as zero.
inline constexpr double kZero = 1e-12;

// Relative threshold for dropping trailing Chebyshev coefficients.
inline constexpr double kTrim = 1e-14;

// Relative tail bound when a series acts through repeated integration.
inline constexpr double kTail = 1e-14;

// Uniform tolerance for ratio equality of Mikusinski functions.
inline constexpr double kEqual = 1e-9;

// Relative threshold on |body(0)| for reducing the order of a representative.
inline constexpr double kReduce = 1e-10;

// Relative threshold for the polynomial-class membership test.
inline constexpr double kMembership = 1e-8;

// Residual tolerance for verifying ODE solutions.
inline constexpr double kResidual = 1e-8;

// Default truncation length for series created from polynomial data.
inline constexpr int kDefaultOrder = 64;

// Largest Chebyshev degree converted to the power basis; the change of
// basis is exponentially ill-conditioned past this point.
inline constexpr int kMembershipDegreeCap = 30;

// Size cap for adaptive Chebyshev interpolation.
inline constexpr int kMaxInterpPoints = 1 << 14;

}  // namespace opcalc::tol
