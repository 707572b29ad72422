#pragma once

#include <functional>
#include <vector>

#include "salpeter/grid.hpp"
#include "salpeter/kernels.hpp"
#include "salpeter/states.hpp"

namespace salpeter {

/// Real field on a grid. The tag keeps densities and currents apart.
template <class Tag>
struct GridField {
  Grid1D grid;
  std::vector<double> values;

  double integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * grid.dx();
  }
};

using DensityField = GridField<struct DensityTag>;
using CurrentField = GridField<struct CurrentTag>;

/// Which evaluation route to use. `fast` uses the separated operator forms
/// where a kernel admits one; `generic` always evaluates the full double sum
/// over momentum pairs (O(N^2) per point) and serves as the reference.
enum class EvalPath { fast, generic };

/// Exact plane-wave decomposition of a sampled field:
///   psi(x_j) = sum_m amplitude_m exp(i momentum_m x_j).
/// The Nyquist bin is split evenly between +p_N and -p_N, so there are n + 1
/// modes and every odd/even symbol acts on it the same way as
/// apply_multiplier does.
struct ModeExpansion {
  std::vector<double> momenta;
  std::vector<cplx> amplitudes;
  std::vector<long> frequencies;  // integer wavenumber on the grid
};

ModeExpansion mode_expansion(const WaveFunction& psi);

/// Generic bilinear form  sum_{m,n} K(p_m, p_n) conj(b_m) b_n  at every grid
/// point, with b_m = amplitude_m exp(i p_m x_j). K must be real and symmetric.
std::vector<double> generic_bilinear(const WaveFunction& psi,
                                     const std::function<double(double, double)>& kernel);

/// Probability density of psi under the given kernel.
///   Born     -> |psi|^2
///   Scalar   -> |D+ psi|^2 + |D-_signed psi|^2
///   SpinHalf -> |psi|^2 + |D psi|^2
/// LiteralHalfInteger always uses the generic path and propagates its
/// singularities as DomainError.
DensityField density(const WaveFunction& psi, const KernelKind& kind,
                     EvalPath path = EvalPath::fast);

/// Probability current. SpinHalf: 2 Re(psi* D psi). Scalar:
/// 2 Re(conj(D+ psi) D-_signed psi), which equals the gamma*u kernel through
/// the rapidity split gamma*u = D+_1 D-_2 + D-_1 D+_2. Born and literal
/// kernels only have the generic path.
CurrentField current(const WaveFunction& psi, const KernelKind& kind,
                     EvalPath path = EvalPath::fast);

/// Density with the unsigned second factor, |D+ psi|^2 + |D-_unsigned psi|^2.
/// Differs from the Scalar density whenever psi mixes momentum signs.
DensityField unsigned_separated_density(const WaveFunction& psi);

struct FourCurrentSample {
  double j0 = 0.0;
  double j1 = 0.0;
  // Magnitudes of the discarded imaginary parts; zero up to rounding.
  double imag0 = 0.0;
  double imag1 = 0.0;
};

/// Closed-form (j0, j1) of a plane-wave superposition at event (t, x):
///   sum_{i,j} F_ij (1, u_ij) conj(A_i) A_j exp(i [(p_j - p_i) x - (E_j - E_i) t]).
FourCurrentSample fourcurrent_planewaves(const PlaneWaveSuperposition& s, const KernelKind& kind,
                                         double t, double x);

/// sup_x | (rho(t + dt) - rho(t - dt)) / (2 dt) + dJ/dx (t) |, with psi taken
/// as the state at t, free evolution, and a spectral x-derivative.
double continuity_residual(const WaveFunction& psi, const KernelKind& kind, double dt);

/// Rescales psi so that the integral of density(psi, kind) is one.
WaveFunction normalize_for_kernel(const WaveFunction& psi, const KernelKind& kind);

}  // namespace salpeter
