#pragma once

// Pass/fail limits shared by the CLI reports and the acceptance suite
// (tests/acceptance). Each constant names the acceptance check it enforces.
// Bump kThresholdsVersion whenever a value changes.

namespace salpeter::thresholds {

inline constexpr int kThresholdsVersion = 1;

// Checks 1, 2: four-vector residual of Scalar and SpinHalf currents.
inline constexpr double kCovariance = 1e-10;

// Check 3: the Born kernel must fail the cross-ratio condition and the
// four-vector test by at least these margins at the witness configuration.
inline constexpr double kBornConstraintMin = 1e-3;
inline constexpr double kBornFourVectorMin = 1e-2;
// CLI covariance report: Born witness row must exceed this.
inline constexpr double kBornWitnessReport = 1e-6;

// Check 4: gamma(p1, p2) = D+D+ + D-D- with signed D-.
inline constexpr double kSeparationIdentity = 1e-12;

// Check 5: densities may dip below zero by rounding only.
inline constexpr double kPositivityFloor = -1e-10;

// Check 6: relative sup deviation from |psi|^2 in the non-relativistic limit.
inline constexpr double kNonRelativisticDeviation = 1e-2;

// Check 7: box-state regimes.
inline constexpr double kFigure1Coincidence = 0.02;
inline constexpr double kFigure1Flatness = 0.1;

// Check 8: pairwise separation of the three curves, relative to the peak.
inline constexpr double kFigure2Separation = 1e-3;
// Unit-area normalization tolerance on emitted columns.
inline constexpr double kUnitArea = 1e-6;

// Check 9: Dirac correspondence.
inline constexpr double kDiracPlaneWave = 1e-12;
inline constexpr double kDiracBox = 1e-8;

// Check 10: second-order decay of the continuity residual per dt halving.
inline constexpr double kContinuityRatioMin = 3.5;
inline constexpr double kContinuityRatioMax = 4.5;
// Box state under free evolution, SpinHalf, dt = 1e-4, 4096 points.
inline constexpr double kBoxContinuity = 1e-6;

// Check 11: separated fast paths vs the generic double sum.
inline constexpr double kOracleEquivalence = 1e-10;

// Check 12: truncated series (k_max = 20) vs spectral Hamiltonian.
inline constexpr double kSeriesGap = 1e-8;

}  // namespace salpeter::thresholds
