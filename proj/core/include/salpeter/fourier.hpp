#pragma once

#include <functional>
#include <span>

#include "salpeter/grid.hpp"

namespace salpeter {

/// A pseudo-differential symbol: a function of momentum.
using Symbol = std::function<cplx(double)>;

// Transform pair, discretized with dx / dp weights:
//   phi(p) = (2 pi)^{-1/2} sum_j psi(x_j) exp(-i p x_j) dx
//   psi(x) = (2 pi)^{-1/2} sum_c phi(p_c) exp(+i p_c x) dp
// With these weights Parseval holds exactly: sum |phi|^2 dp = sum |psi|^2 dx.

MomentumSpectrum to_momentum(const WaveFunction& psi);
WaveFunction to_position(const MomentumSpectrum& phi);

/// Pointwise product phi(p_c) * symbol(p_c) on the centered lattice.
/// Throws DomainError naming p_c if the symbol is not finite there.
MomentumSpectrum spectral_multiplier(const MomentumSpectrum& phi, const Symbol& symbol);

/// Applies symbol(-i d/dx) to psi: transform, multiply, transform back.
///
/// The Nyquist mode is shared between +p_N and -p_N, so it is multiplied by
/// the even part (symbol(p_N) + symbol(-p_N)) / 2. Odd symbols therefore
/// annihilate it and map real fields to purely imaginary ones.
WaveFunction apply_multiplier(const WaveFunction& psi, const Symbol& symbol);

/// Same as apply_multiplier for a real sampled field; returns the real part.
std::vector<double> apply_multiplier_real(const Grid1D& grid, std::span<const double> f,
                                          const Symbol& symbol);

/// Spectral derivative d/dx of a real periodic field.
std::vector<double> spectral_derivative(const Grid1D& grid, std::span<const double> f);

namespace detail {

/// Unnormalized in-place DFT, sign = -1 forward, +1 backward, natural
/// (0..n-1) frequency ordering. Thread-safe.
void fft_inplace(std::span<cplx> data, int sign);

/// Signed integer frequency of FFT bin k in [0, n): k for k < n/2, k - n otherwise.
inline long fft_frequency(std::size_t k, std::size_t n) {
  return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

}  // namespace detail

}  // namespace salpeter
