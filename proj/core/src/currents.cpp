#include "salpeter/currents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "salpeter/error.hpp"
#include "salpeter/fourier.hpp"
#include "salpeter/hamiltonian.hpp"
#include "salpeter/parallel.hpp"

namespace salpeter {

namespace {

template <class Field>
Field make_field(const Grid1D& grid, std::vector<double> values) {
  return Field{grid, std::move(values)};
}

std::vector<double> abs2(const WaveFunction& psi) {
  std::vector<double> out(psi.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::norm(psi[j]);
  return out;
}

// 2 Re(conj(a) b), pointwise.
std::vector<double> cross(const WaveFunction& a, const WaveFunction& b) {
  std::vector<double> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = 2.0 * std::real(std::conj(a[j]) * b[j]);
  return out;
}

// Scaled FFT coefficients c_m with psi_j = sum_m c_m exp(2 pi i q_m j / n);
// the Nyquist bin is split into two half-weight modes at q = -n/2 and +n/2.
struct GridModes {
  std::vector<double> momenta;
  std::vector<long> frequencies;
  std::vector<cplx> coefficients;
};

GridModes grid_modes(const WaveFunction& psi) {
  const Grid1D& g = psi.grid();
  const std::size_t n = g.size();
  std::vector<cplx> work(psi.values().begin(), psi.values().end());
  detail::fft_inplace(work, -1);
  const double inv_n = 1.0 / static_cast<double>(n);
  GridModes modes;
  modes.momenta.reserve(n + 1);
  modes.frequencies.reserve(n + 1);
  modes.coefficients.reserve(n + 1);
  // Ascending momentum order: -n/2 .. n/2.
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t k = (c + n / 2) % n;
    const long q = detail::fft_frequency(k, n);
    const double weight = (k == n / 2) ? 0.5 : 1.0;
    modes.momenta.push_back(static_cast<double>(q) * g.dp());
    modes.frequencies.push_back(q);
    modes.coefficients.push_back(weight * inv_n * work[k]);
  }
  const long half = static_cast<long>(n / 2);
  modes.momenta.push_back(g.nyquist());
  modes.frequencies.push_back(half);
  modes.coefficients.push_back(0.5 * inv_n * work[n / 2]);
  return modes;
}

}  // namespace

ModeExpansion mode_expansion(const WaveFunction& psi) {
  GridModes modes = grid_modes(psi);
  const double x0 = psi.grid().x_min();
  ModeExpansion out;
  out.momenta = modes.momenta;
  out.frequencies = modes.frequencies;
  out.amplitudes.resize(modes.coefficients.size());
  for (std::size_t m = 0; m < modes.coefficients.size(); ++m) {
    out.amplitudes[m] = modes.coefficients[m] * std::polar(1.0, -modes.momenta[m] * x0);
  }
  return out;
}

std::vector<double> generic_bilinear(const WaveFunction& psi,
                                     const std::function<double(double, double)>& kernel) {
  const GridModes modes = grid_modes(psi);
  const std::size_t n = psi.size();
  const std::size_t m_count = modes.momenta.size();

  std::vector<double> k_matrix(m_count * m_count);
  for (std::size_t a = 0; a < m_count; ++a) {
    for (std::size_t b = a; b < m_count; ++b) {
      const double v = kernel(modes.momenta[a], modes.momenta[b]);
      k_matrix[a * m_count + b] = v;
      k_matrix[b * m_count + a] = v;
    }
  }

  std::vector<cplx> roots(n);
  for (std::size_t r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                   static_cast<double>(n));
  }

  const long ln = static_cast<long>(n);
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t j) {
    std::vector<cplx> b(m_count);
    const long lj = static_cast<long>(j);
    for (std::size_t m = 0; m < m_count; ++m) {
      long r = (modes.frequencies[m] * lj) % ln;
      if (r < 0) r += ln;
      b[m] = modes.coefficients[m] * roots[static_cast<std::size_t>(r)];
    }
    double acc = 0.0;
    for (std::size_t a = 0; a < m_count; ++a) {
      const double* row = &k_matrix[a * m_count];
      cplx inner = 0.0;
      for (std::size_t c = 0; c < m_count; ++c) inner += row[c] * b[c];
      acc += std::real(std::conj(b[a]) * inner);
    }
    out[j] = acc;
  });
  return out;
}

DensityField density(const WaveFunction& psi, const KernelKind& kind, EvalPath path) {
  const Grid1D& g = psi.grid();
  const bool literal = std::holds_alternative<LiteralHalfInteger>(kind);
  if (path == EvalPath::generic || literal) {
    return make_field<DensityField>(
        g, generic_bilinear(psi, [&](double a, double b) { return kernel_value(kind, a, b); }));
  }
  if (std::holds_alternative<Born>(kind)) return make_field<DensityField>(g, abs2(psi));
  if (std::holds_alternative<Scalar>(kind)) {
    auto plus = abs2(apply_d_operator(psi, DOperator::plus));
    const auto minus = abs2(apply_d_operator(psi, DOperator::minus_signed));
    for (std::size_t j = 0; j < plus.size(); ++j) plus[j] += minus[j];
    return make_field<DensityField>(g, std::move(plus));
  }
  auto rho = abs2(psi);
  const auto lower = abs2(apply_d_operator(psi, DOperator::vel));
  for (std::size_t j = 0; j < rho.size(); ++j) rho[j] += lower[j];
  return make_field<DensityField>(g, std::move(rho));
}

CurrentField current(const WaveFunction& psi, const KernelKind& kind, EvalPath path) {
  const Grid1D& g = psi.grid();
  const bool separable = std::holds_alternative<Scalar>(kind) || std::holds_alternative<SpinHalf>(kind);
  if (path == EvalPath::generic || !separable) {
    return make_field<CurrentField>(g, generic_bilinear(psi, [&](double a, double b) {
                                      return current_kernel_value(kind, a, b);
                                    }));
  }
  if (std::holds_alternative<Scalar>(kind)) {
    return make_field<CurrentField>(g, cross(apply_d_operator(psi, DOperator::plus),
                                             apply_d_operator(psi, DOperator::minus_signed)));
  }
  return make_field<CurrentField>(g, cross(psi, apply_d_operator(psi, DOperator::vel)));
}

DensityField unsigned_separated_density(const WaveFunction& psi) {
  auto plus = abs2(apply_d_operator(psi, DOperator::plus));
  const auto minus = abs2(apply_d_operator(psi, DOperator::minus_unsigned));
  for (std::size_t j = 0; j < plus.size(); ++j) plus[j] += minus[j];
  return make_field<DensityField>(psi.grid(), std::move(plus));
}

FourCurrentSample fourcurrent_planewaves(const PlaneWaveSuperposition& s, const KernelKind& kind,
                                         double t, double x) {
  using lcplx = std::complex<long double>;
  const std::size_t n = s.size();
  std::vector<lcplx> waves(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& term = s[i];
    const long double phase =
        static_cast<long double>(term.momentum) * x - static_cast<long double>(energy(term.momentum)) * t;
    waves[i] = lcplx(term.amplitude.real(), term.amplitude.imag()) *
               lcplx(std::cos(phase), std::sin(phase));
  }
  lcplx j0 = 0.0L;
  lcplx j1 = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double pi = s[i].momentum;
      const double pj = s[j].momentum;
      const lcplx w = std::conj(waves[i]) * waves[j] * static_cast<long double>(kernel_value(kind, pi, pj));
      j0 += w;
      j1 += w * static_cast<long double>(u_pair(pi, pj));
    }
  }
  return FourCurrentSample{static_cast<double>(j0.real()), static_cast<double>(j1.real()),
                           static_cast<double>(std::abs(j0.imag())),
                           static_cast<double>(std::abs(j1.imag()))};
}

double continuity_residual(const WaveFunction& psi, const KernelKind& kind, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("continuity_residual: dt must be positive");
  const auto rho_plus = density(evolve_free(psi, dt), kind);
  const auto rho_minus = density(evolve_free(psi, -dt), kind);
  const auto j = current(psi, kind);
  const auto dj = spectral_derivative(psi.grid(), j.values);
  double worst = 0.0;
  for (std::size_t i = 0; i < dj.size(); ++i) {
    const double r = (rho_plus.values[i] - rho_minus.values[i]) / (2.0 * dt) + dj[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

WaveFunction normalize_for_kernel(const WaveFunction& psi, const KernelKind& kind) {
  const double total = density(psi, kind).integral();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw InvalidArgument("normalize_for_kernel: total probability must be positive");
  }
  const double scale = 1.0 / std::sqrt(total);
  std::vector<cplx> values(psi.values().begin(), psi.values().end());
  for (auto& v : values) v *= scale;
  return WaveFunction(psi.grid(), std::move(values));
}

}  // namespace salpeter
