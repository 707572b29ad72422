#include "salpeter/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "salpeter/error.hpp"

namespace salpeter {

namespace detail {

namespace {

// FFTW planning is not thread-safe; executing an existing plan on new arrays
// is. Plans are created once per (size, direction) under a lock.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* scratch = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void fft_inplace(std::span<cplx> data, int sign) {
  if (data.empty()) return;
  fftw_plan plan = plan_cache().get(data.size(), sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace detail

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Natural FFT bin for centered lattice index c.
std::size_t bin_of(std::size_t c, std::size_t n) { return (c + n / 2) % n; }

cplx checked(const Symbol& symbol, double p) {
  const cplx s = symbol(p);
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "symbol is not finite at p = " << p;
    throw DomainError(msg.str());
  }
  return s;
}

}  // namespace

MomentumSpectrum to_momentum(const WaveFunction& psi) {
  const Grid1D& g = psi.grid();
  const std::size_t n = g.size();
  std::vector<cplx> work(psi.values().begin(), psi.values().end());
  detail::fft_inplace(work, -1);
  std::vector<cplx> phi(n);
  const double scale = g.dx() * kInvSqrt2Pi;
  for (std::size_t c = 0; c < n; ++c) {
    const double p = g.p(c);
    phi[c] = scale * std::polar(1.0, -p * g.x_min()) * work[bin_of(c, n)];
  }
  return MomentumSpectrum(g, std::move(phi));
}

WaveFunction to_position(const MomentumSpectrum& phi) {
  const Grid1D& g = phi.grid();
  const std::size_t n = g.size();
  std::vector<cplx> work(n);
  for (std::size_t c = 0; c < n; ++c) {
    work[bin_of(c, n)] = phi[c] * std::polar(1.0, g.p(c) * g.x_min());
  }
  detail::fft_inplace(work, +1);
  const double scale = g.dp() * kInvSqrt2Pi;
  for (auto& v : work) v *= scale;
  return WaveFunction(g, std::move(work));
}

MomentumSpectrum spectral_multiplier(const MomentumSpectrum& phi, const Symbol& symbol) {
  const Grid1D& g = phi.grid();
  std::vector<cplx> out(phi.values().begin(), phi.values().end());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] *= checked(symbol, g.p(c));
  return MomentumSpectrum(g, std::move(out));
}

namespace {

void multiply_bins(const Grid1D& g, std::span<cplx> bins, const Symbol& symbol) {
  const std::size_t n = g.size();
  const double dp = g.dp();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == n / 2) {
      const double pn = g.nyquist();
      bins[k] *= 0.5 * (checked(symbol, pn) + checked(symbol, -pn));
    } else {
      bins[k] *= checked(symbol, static_cast<double>(detail::fft_frequency(k, n)) * dp);
    }
  }
}

}  // namespace

WaveFunction apply_multiplier(const WaveFunction& psi, const Symbol& symbol) {
  const Grid1D& g = psi.grid();
  std::vector<cplx> work(psi.values().begin(), psi.values().end());
  detail::fft_inplace(work, -1);
  multiply_bins(g, work, symbol);
  detail::fft_inplace(work, +1);
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (auto& v : work) v *= inv_n;
  return WaveFunction(g, std::move(work));
}

std::vector<double> apply_multiplier_real(const Grid1D& grid, std::span<const double> f,
                                          const Symbol& symbol) {
  if (f.size() != grid.size()) {
    throw InvalidArgument("apply_multiplier_real: field size does not match grid");
  }
  std::vector<cplx> values(f.begin(), f.end());
  const WaveFunction out = apply_multiplier(WaveFunction(grid, std::move(values)), symbol);
  std::vector<double> re(f.size());
  for (std::size_t j = 0; j < re.size(); ++j) re[j] = out[j].real();
  return re;
}

std::vector<double> spectral_derivative(const Grid1D& grid, std::span<const double> f) {
  return apply_multiplier_real(grid, f, [](double p) { return cplx(0.0, p); });
}

}  // namespace salpeter
