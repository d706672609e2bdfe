#include "scarf/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

double branch_lambda(double s, int n, Edge edge) {
    if (n < 0) throw DomainError("polynomial degree must be non-negative");
    const Regime regime = classify_regime(s);
    switch (edge) {
        case Edge::NotApplicable:
            if (regime != Regime::BoundStates) {
                throw DomainError("bound-state polynomial requires s > 1/2");
            }
            return n + 0.5 + s;
        case Edge::Upper:
        case Edge::Lower:
            if (regime != Regime::Bands && regime != Regime::FreeParticle) {
                throw DomainError("band-edge polynomial requires 0 < s <= 1/2");
            }
            break;
    }
    const double lambda = edge == Edge::Upper ? n + 0.5 + s : n + 0.5 - s;
    if (!(lambda > 0.0)) throw DomainError("edge has non-positive lambda");
    return lambda;
}

template <typename T>
PolyValue<T> horner(std::span<const double> c, T y) {
    PolyValue<T> v;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v.d2p = v.d2p * y + 2.0 * v.dp;
        v.dp = v.dp * y + v.p;
        v.p = v.p * y + *it;
    }
    return v;
}

}  // namespace

PolySpec build_poly(double s, int n, Edge edge) {
    PolySpec poly;
    poly.n = n;
    poly.s = s;
    poly.edge = edge;
    poly.lambda = branch_lambda(s, n, edge);
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    poly.coeffs[n] = 1.0;

    // Coefficient of y^k: [k(k-1) + alpha k + beta] c_k + (k+2)(k+1) c_{k+2} = 0.
    // The k = n bracket vanishes identically, which is the eigenvalue condition.
    const double alpha = poly.alpha();
    const double beta = poly.beta();
    for (int k = n - 2; k >= 0; k -= 2) {
        const double pivot = k * (k - 1.0) + alpha * k + beta;
        const double scale = k * k + std::abs(alpha) * k + std::abs(beta) + 1.0;
        if (std::abs(pivot) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
            throw ConstructionError("polynomial recurrence breakdown at k = " + std::to_string(k) +
                                    " (s = " + std::to_string(s) + ", n = " + std::to_string(n) +
                                    ")");
        }
        poly.coeffs[k] = -(k + 2.0) * (k + 1.0) * poly.coeffs[k + 2] / pivot;
    }
    return poly;
}

PolyValue<double> evaluate(const PolySpec& poly, double y) {
    return horner<double>(poly.coeffs, y);
}

PolyValue<std::complex<double>> evaluate(const PolySpec& poly, std::complex<double> y) {
    return horner<std::complex<double>>(poly.coeffs, y);
}

double ode_residual(const PolySpec& poly, double y) {
    const auto v = evaluate(poly, y);
    return (y * y + 1.0) * v.d2p + poly.alpha() * y * v.dp + poly.beta() * v.p;
}

std::pair<double, double> jacobi_parameters(double s, int n, Regime regime, Edge edge) {
    const double sign = (regime == Regime::BoundStates || edge == Edge::Upper) ? 1.0 : -1.0;
    const double nu = -n - sign * s - 0.5;
    return {nu, nu};
}

std::optional<std::complex<double>> jacobi_eval(int n, double alpha, double beta,
                                                std::complex<double> t) {
    if (n < 0) throw DomainError("Jacobi degree must be non-negative");
    using C = std::complex<double>;
    const C p0{1.0, 0.0};
    if (n == 0) return p0;
    C p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (t - 1.0) / 2.0;
    C prev = p0;
    const double ab = alpha + beta;
    const double eps = 64.0 * std::numeric_limits<double>::epsilon();
    for (int k = 2; k <= n; ++k) {
        const double two_k_ab = 2.0 * k + ab;
        const double a1 = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
        const double a2 = (two_k_ab - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (two_k_ab - 2.0) * (two_k_ab - 1.0) * two_k_ab;
        const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * two_k_ab;
        const double scale = 2.0 * k * (k + std::abs(ab)) * (std::abs(two_k_ab) + 2.0);
        if (std::abs(a1) <= eps * scale) return std::nullopt;
        const C next = ((a2 + a3 * t) * p1 - a4 * prev) / a1;
        prev = p1;
        p1 = next;
    }
    if (std::abs(jacobi_leading_coefficient(n, alpha, beta)) <= eps) return std::nullopt;
    return p1;
}

double jacobi_leading_coefficient(int n, double alpha, double beta) {
    double lead = 1.0;
    for (int j = 0; j < n; ++j) {
        lead *= (n + alpha + beta + 1.0 + j) / (2.0 * (j + 1.0));
    }
    return lead;
}

std::optional<double> jacobi_cross_check(const PolySpec& poly, std::span<const double> ys) {
    const double nu = jacobi_parameters(poly.s, poly.n, classify_regime(poly.s), poly.edge).first;
    const double lead = jacobi_leading_coefficient(poly.n, nu, nu);
    if (std::abs(lead) <= 64.0 * std::numeric_limits<double>::epsilon()) return std::nullopt;
    std::complex<double> phase{1.0, 0.0};
    for (int k = 0; k < poly.n; ++k) phase *= std::complex<double>(0.0, 1.0);

    double worst = 0.0;
    for (double y : ys) {
        const auto jac = jacobi_eval(poly.n, nu, nu, std::complex<double>(0.0, -y));
        if (!jac) return std::nullopt;
        const std::complex<double> via_jacobi = phase * *jac / lead;
        const double direct = evaluate(poly, y).p;
        const double scale = std::max(std::abs(direct), std::pow(std::abs(y), poly.n)) + 1e-300;
        worst = std::max(worst, std::abs(via_jacobi - direct) / scale);
    }
    return worst;
}

std::vector<double> real_roots(const PolySpec& poly) {
    const int n = poly.n;
    if (n == 0) return {};
    const double lead = poly.coeffs.back();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -poly.coeffs[i] / lead;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericError("companion eigenvalue iteration did not converge");
    }

    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
        double r = z.real();
        const auto v = evaluate(poly, r);
        if (v.dp != 0.0) r -= v.p / v.dp;

        double scale = 0.0;
        for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
            scale = scale * std::abs(r) + std::abs(*it);
        }
        const double residual = std::abs(evaluate(poly, r).p);
        if (residual > 1e-8 * scale) {
            throw NumericError("root polish left residual " + std::to_string(residual) +
                               " at y = " + std::to_string(r));
        }
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace scarf
