#include "salpeter/kernels.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "salpeter/error.hpp"
#include "salpeter/hamiltonian.hpp"

namespace salpeter {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 2 (1 + E1 E2 - p1 p2) = (E1 + E2)^2 - (p1 + p2)^2 > 0.
double pair_mass_squared(double p1, double p2) noexcept {
  const double e1 = energy(p1);
  const double e2 = energy(p2);
  return 2.0 * (1.0 + e1 * e2 - p1 * p2);
}

}  // namespace

KernelKind parse_kernel(std::string_view text) {
  if (text == "born") return Born{};
  if (text == "scalar") return Scalar{};
  if (text == "spinhalf") return SpinHalf{};
  constexpr std::string_view prefix = "literal:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    int n = -1;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 0) {
      return LiteralHalfInteger{n};
    }
  }
  throw InvalidArgument("kernel: expected born|scalar|spinhalf|literal:<n>, got '" +
                        std::string(text) + "'");
}

std::string to_string(const KernelKind& kind) {
  return std::visit(overloaded{
                        [](Born) -> std::string { return "born"; },
                        [](Scalar) -> std::string { return "scalar"; },
                        [](SpinHalf) -> std::string { return "spinhalf"; },
                        [](LiteralHalfInteger k) { return "literal:" + std::to_string(k.n); },
                    },
                    kind);
}

double u_pair(double p1, double p2) noexcept {
  return (p1 + p2) / (energy(p1) + energy(p2));
}

double gamma_pair(double p1, double p2) noexcept {
  return (energy(p1) + energy(p2)) / std::sqrt(pair_mass_squared(p1, p2));
}

double gamma_pair_minus_one(double p1, double p2) noexcept {
  // gamma^2 - 1 = (p1 + p2)^2 / m2, and gamma - 1 = (gamma^2 - 1) / (gamma + 1).
  const double s = p1 + p2;
  return s * s / pair_mass_squared(p1, p2) / (gamma_pair(p1, p2) + 1.0);
}

double kernel_value(const KernelKind& kind, double p1, double p2) {
  return std::visit(
      overloaded{
          [](Born) { return 1.0; },
          [&](Scalar) { return gamma_pair(p1, p2); },
          [&](SpinHalf) { return 1.0 + d_vel(p1) * d_vel(p2); },
          [&](LiteralHalfInteger k) {
            const double g = gamma_pair(p1, p2);
            if (k.n == 0) return g;
            const double gm1 = gamma_pair_minus_one(p1, p2);
            if (gm1 == 0.0) {
              std::ostringstream msg;
              msg.precision(17);
              msg << "literal:" << k.n << " kernel is singular (gamma = 1) at p1 = " << p1
                  << ", p2 = " << p2;
              throw DomainError(msg.str());
            }
            return g / std::pow(gm1, k.n);
          },
      },
      kind);
}

double current_kernel_value(const KernelKind& kind, double p1, double p2) {
  return kernel_value(kind, p1, p2) * u_pair(p1, p2);
}

}  // namespace salpeter
