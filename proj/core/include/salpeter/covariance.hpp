#pragma once

#include <span>
#include <vector>

#include "salpeter/kernels.hpp"
#include "salpeter/states.hpp"

namespace salpeter {

/// Pure 1+1-D Lorentz boost to a frame moving with velocity v, |v| < 1.
class Boost {
 public:
  explicit Boost(double velocity);

  double velocity() const noexcept { return v_; }
  double gamma() const noexcept { return gamma_; }
  double rapidity() const noexcept;

 private:
  double v_;
  double gamma_;
};

struct Event {
  double t = 0.0;
  double x = 0.0;
};

/// Relativistic velocity addition.
Boost compose_boosts(const Boost& first, const Boost& second);

/// p' = gamma_v (p - v E(p)). The result stays on the mass shell.
double boost_momentum(double p, const Boost& b) noexcept;

/// (t', x') = (gamma_v (t - v x), gamma_v (x - v t)).
Event boost_event(const Event& e, const Boost& b) noexcept;

/// Lambda applied to a contravariant vector (j0, j1).
std::pair<double, double> boost_vector(double j0, double j1, const Boost& b) noexcept;

/// Boosts every momentum and rescales magnitudes so that
///   |A'_i|^2 = (F_ii / F'_ii) (gamma'_ii / gamma_ii) |A_i|^2,
/// keeping arg A'_i = arg A_i. Throws DomainError on kernel singularities.
PlaneWaveSuperposition transform_amplitudes(const PlaneWaveSuperposition& s, const Boost& b,
                                            const KernelKind& kind);

struct ConstraintReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Cross-ratio condition a kernel must meet for its current to be a four-vector:
///   lhs = [F'_ij^2 / (F'_ii F'_jj)] [F_ii F_jj / F_ij^2]
///   rhs = the same expression with F replaced by gamma.
/// Throws InvalidArgument for coincident momenta.
ConstraintReport constraint_report(const KernelKind& kind, double p_i, double p_j, const Boost& b);

/// 3x3 lattice of events spanning one Compton time and length around the origin.
std::vector<Event> default_events();

/// max over events and components of |J'(Lambda e) - Lambda J(e)| where J' is
/// evaluated on `primed`, the superposition as seen from the boosted frame.
double fourvector_residual(const PlaneWaveSuperposition& s, const PlaneWaveSuperposition& primed,
                           const KernelKind& kind, const Boost& b, std::span<const Event> events);

/// fourvector_residual with `primed` = transform_amplitudes(s, b, kind).
double covariance_residual(const PlaneWaveSuperposition& s, const KernelKind& kind, const Boost& b,
                           std::span<const Event> events);

/// Smallest covariance residual found when the transformed magnitudes of a
/// two-term superposition are further multiplied by factors (f_1, f_2) on a
/// steps x steps geometric lattice over [lo, hi]^2 (odd `steps` with
/// lo * hi = 1 puts the unscaled point at the center).
double min_residual_over_rescaling(const PlaneWaveSuperposition& s, const KernelKind& kind,
                                   const Boost& b, std::span<const Event> events, double lo,
                                   double hi, int steps);

}  // namespace salpeter
