#pragma once

#include <vector>

#include "salpeter/currents.hpp"
#include "salpeter/grid.hpp"

namespace salpeter {

/// Two-component spinor on a grid, representation alpha = sigma_x, beta = sigma_z.
class DiracField {
 public:
  DiracField(Grid1D grid, std::vector<cplx> upper, std::vector<cplx> lower);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const cplx> upper() const noexcept { return upper_; }
  std::span<const cplx> lower() const noexcept { return lower_; }

  /// sum_j (|upper_j|^2 + |lower_j|^2) dx
  double norm_squared() const;

 private:
  Grid1D grid_;
  std::vector<cplx> upper_;
  std::vector<cplx> lower_;
};

/// psi -> (psi, D psi), D = p / (1 + E(p)).
DiracField lift(const WaveFunction& psi);

struct DiracCurrents {
  DensityField density;  // Psi^dagger Psi
  CurrentField current;  // Psi^dagger alpha Psi = 2 Re(conj(upper) lower)
};

DiracCurrents dirac_current(const DiracField& field);

/// Exact free evolution under H_D = alpha p + beta, mode by mode:
///   exp(-i t H_D(p)) = cos(E t) I - i sin(E t) / E (alpha p + beta).
/// The Nyquist mode has no odd part, so it evolves under E(p_N) beta, which
/// keeps its eigenvalues at +-E(p_N).
DiracField dirac_evolve(const DiracField& field, double t);

/// Spectral mass along the negative-energy eigenvectors of H_D(p), in the
/// same units as norm_squared().
double negative_energy_mass(const DiracField& field);

struct EquivalenceResiduals {
  double current = 0.0;    // sup |J_D[lift psi] - J_{1/2}[psi]| over both components
  double evolution = 0.0;  // sup |dirac_evolve(lift psi, t) - lift(evolve_free(psi, t))|
};

EquivalenceResiduals equivalence_residuals(const WaveFunction& psi, double t);

}  // namespace salpeter
