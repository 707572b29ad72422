#include "salpeter/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "salpeter/currents.hpp"
#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {

Boost::Boost(double velocity) : v_(velocity), gamma_(1.0) {
  if (!std::isfinite(velocity) || !(std::abs(velocity) < 1.0)) {
    throw InvalidArgument("boost: |velocity| must be < 1");
  }
  gamma_ = 1.0 / std::sqrt((1.0 - v_) * (1.0 + v_));
}

double Boost::rapidity() const noexcept { return std::atanh(v_); }

Boost compose_boosts(const Boost& first, const Boost& second) {
  const double v1 = first.velocity();
  const double v2 = second.velocity();
  return Boost((v1 + v2) / (1.0 + v1 * v2));
}

double boost_momentum(double p, const Boost& b) noexcept {
  return b.gamma() * (p - b.velocity() * energy(p));
}

Event boost_event(const Event& e, const Boost& b) noexcept {
  return Event{b.gamma() * (e.t - b.velocity() * e.x), b.gamma() * (e.x - b.velocity() * e.t)};
}

std::pair<double, double> boost_vector(double j0, double j1, const Boost& b) noexcept {
  return {b.gamma() * (j0 - b.velocity() * j1), b.gamma() * (j1 - b.velocity() * j0)};
}

PlaneWaveSuperposition transform_amplitudes(const PlaneWaveSuperposition& s, const Boost& b,
                                            const KernelKind& kind) {
  std::vector<PlaneWave> out;
  out.reserve(s.size());
  for (const auto& term : s.terms()) {
    const double p = term.momentum;
    const double pp = boost_momentum(p, b);
    const double ratio = kernel_value(kind, p, p) / kernel_value(kind, pp, pp) *
                         (gamma_pair(pp, pp) / gamma_pair(p, p));
    out.push_back(PlaneWave{term.amplitude * std::sqrt(ratio), pp});
  }
  return PlaneWaveSuperposition(std::move(out));
}

ConstraintReport constraint_report(const KernelKind& kind, double p_i, double p_j, const Boost& b) {
  if (std::abs(p_i - p_j) <= PlaneWaveSuperposition::kDistinctTolerance) {
    throw InvalidArgument("constraint_report: momenta must be distinct");
  }
  const double q_i = boost_momentum(p_i, b);
  const double q_j = boost_momentum(p_j, b);
  using ld = long double;
  auto cross_ratio = [](ld ii, ld jj, ld ij) { return ij * ij / (ii * jj); };
  auto ratio_of = [&](auto&& f) {
    const ld primed = cross_ratio(f(q_i, q_i), f(q_j, q_j), f(q_i, q_j));
    const ld original = cross_ratio(f(p_i, p_i), f(p_j, p_j), f(p_i, p_j));
    return primed / original;
  };
  const ld lhs = ratio_of([&](double a, double c) -> ld { return kernel_value(kind, a, c); });
  const ld rhs = ratio_of([](double a, double c) -> ld { return gamma_pair(a, c); });
  return ConstraintReport{static_cast<double>(lhs), static_cast<double>(rhs),
                          static_cast<double>(std::abs(lhs - rhs))};
}

std::vector<Event> default_events() {
  std::vector<Event> events;
  for (double t : {-0.5, 0.0, 0.5}) {
    for (double x : {-0.5, 0.0, 0.5}) events.push_back(Event{t, x});
  }
  return events;
}

double fourvector_residual(const PlaneWaveSuperposition& s, const PlaneWaveSuperposition& primed,
                           const KernelKind& kind, const Boost& b, std::span<const Event> events) {
  if (events.empty()) throw InvalidArgument("covariance: at least one event is required");
  double worst = 0.0;
  for (const auto& e : events) {
    const auto j = fourcurrent_planewaves(s, kind, e.t, e.x);
    const auto [expected0, expected1] = boost_vector(j.j0, j.j1, b);
    const Event ep = boost_event(e, b);
    const auto jp = fourcurrent_planewaves(primed, kind, ep.t, ep.x);
    worst = std::max({worst, std::abs(jp.j0 - expected0), std::abs(jp.j1 - expected1)});
  }
  return worst;
}

double covariance_residual(const PlaneWaveSuperposition& s, const KernelKind& kind, const Boost& b,
                           std::span<const Event> events) {
  return fourvector_residual(s, transform_amplitudes(s, b, kind), kind, b, events);
}

double min_residual_over_rescaling(const PlaneWaveSuperposition& s, const KernelKind& kind,
                                   const Boost& b, std::span<const Event> events, double lo,
                                   double hi, int steps) {
  if (s.size() != 2) throw InvalidArgument("rescaling scan: expects a two-term superposition");
  if (steps < 2 || !(hi > lo) || !(lo > 0.0)) {
    throw InvalidArgument("rescaling scan: need steps >= 2 and 0 < lo < hi");
  }
  const PlaneWaveSuperposition base = transform_amplitudes(s, b, kind);
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < steps; ++a) {
    const double f1 = lo * std::pow(hi / lo, static_cast<double>(a) / (steps - 1));
    for (int c = 0; c < steps; ++c) {
      const double f2 = lo * std::pow(hi / lo, static_cast<double>(c) / (steps - 1));
      const PlaneWaveSuperposition scaled({{base[0].amplitude * f1, base[0].momentum},
                                           {base[1].amplitude * f2, base[1].momentum}});
      best = std::min(best, fourvector_residual(s, scaled, kind, b, events));
    }
  }
  return best;
}

}  // namespace salpeter
