#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scarf/qhj_spectrum.hpp"

namespace scarf {

// Polynomial factor P_n(y) of an eigenfunction, real coefficients in
// ascending powers of y, monic. It solves
//
//     (y^2 + 1) P'' + alpha y P' + beta P = 0,
//     alpha = 2 (1 - lambda),  beta = lambda^2 - lambda + 1/4 - s^2,
//
// which for lambda = n + 1/2 +- s reduces to alpha = 1 - 2n -+ 2s and
// beta = n (n +- 2s).
struct PolySpec {
    int n = 0;
    std::vector<double> coeffs;
    double lambda = 0.0;
    double s = 0.0;
    Edge edge = Edge::NotApplicable;

    double alpha() const noexcept { return 2.0 * (1.0 - lambda); }
    double beta() const noexcept { return lambda * lambda - lambda + 0.25 - s * s; }
};

// Value and first two derivatives.
template <typename T>
struct PolyValue {
    T p{};
    T dp{};
    T d2p{};
};

// Edge::NotApplicable selects the bound-state branch (s > 1/2); Lower and
// Upper select band edges (0 < s <= 1/2). Throws DomainError for other
// combinations and ConstructionError when the downward recurrence hits a
// zero pivot.
PolySpec build_poly(double s, int n, Edge edge);

PolyValue<double> evaluate(const PolySpec& poly, double y);
PolyValue<std::complex<double>> evaluate(const PolySpec& poly, std::complex<double> y);

// Left-hand side of the polynomial ODE at y.
double ode_residual(const PolySpec& poly, double y);

// Symmetric Jacobi parameters of the polynomial factor: -n - s - 1/2 for
// bound states and upper band edges, -n + s - 1/2 for lower band edges.
std::pair<double, double> jacobi_parameters(double s, int n, Regime regime, Edge edge);

// P_n^{(alpha, beta)}(t) by the three-term recurrence in degree. Returns
// nullopt when the recurrence degenerates (vanishing leading factor), which
// can happen for exceptional negative parameters.
std::optional<std::complex<double>> jacobi_eval(int n, double alpha, double beta,
                                                std::complex<double> t);

// Leading coefficient (n + alpha + beta + 1)_n / (2^n n!) of P_n^{(alpha, beta)}.
double jacobi_leading_coefficient(int n, double alpha, double beta);

// Max relative deviation of i^n P_n^{(nu, nu)}(-i y) / lead from the monic
// P_n(y) over the sample points. nullopt when the Jacobi route degenerates.
std::optional<double> jacobi_cross_check(const PolySpec& poly, std::span<const double> ys);

// Real roots with multiplicity, ascending. Companion-matrix eigenvalues
// followed by one Newton step; throws NumericError if a polished root
// leaves a residual above 1e-8 of the evaluation scale.
std::vector<double> real_roots(const PolySpec& poly);

}  // namespace scarf
