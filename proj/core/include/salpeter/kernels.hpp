#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace salpeter {

// Kernel F(p1, p2) defining a density/current pair through
//   (j0, j1)(x) = (1 / 2 pi) sum F(p1, p2) (1, u(p1, p2)) phi*(p1) phi(p2) e^{i (p2 - p1) x}.

/// F = 1: the ordinary Born density |psi|^2 and its velocity-weighted current.
struct Born {};
/// F = gamma(p1, p2): the covariant current for a scalar wave function.
struct Scalar {};
/// F = 1 + D(p1) D(p2) with D(p) = p / (1 + E(p)).
struct SpinHalf {};
/// F = gamma / [(gamma - 1)(gamma - 1)]^{n/2} = gamma / (gamma - 1)^n, taken
/// literally. Singular wherever gamma = 1 (p1 = -p2) when n >= 1.
struct LiteralHalfInteger {
  int n = 0;
};

using KernelKind = std::variant<Born, Scalar, SpinHalf, LiteralHalfInteger>;

/// "born", "scalar", "spinhalf" or "literal:<n>". Throws InvalidArgument.
KernelKind parse_kernel(std::string_view text);
std::string to_string(const KernelKind& kind);

/// Pair velocity u = (p1 + p2) / (E1 + E2), always in (-1, 1).
double u_pair(double p1, double p2) noexcept;

/// Lorentz factor of u_pair, evaluated as (E1 + E2) / sqrt(2 (1 + E1 E2 - p1 p2)).
double gamma_pair(double p1, double p2) noexcept;

/// gamma_pair - 1 without cancellation; exactly zero when p1 == -p2.
double gamma_pair_minus_one(double p1, double p2) noexcept;

/// F(p1, p2). Throws DomainError where the literal family is singular.
double kernel_value(const KernelKind& kind, double p1, double p2);

/// F(p1, p2) * u(p1, p2), the current kernel.
double current_kernel_value(const KernelKind& kind, double p1, double p2);

}  // namespace salpeter
