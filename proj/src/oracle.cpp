#include "scarf/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "scarf/errors.hpp"

namespace scarf::oracle {

namespace {

using State = std::array<double, 2>;

// Taylor coefficients of (z / sin z)^2 in powers of z^2, by squaring and
// inverting the series of sin z / z.
std::vector<double> inverse_sinc_squared_series(int terms) {
    std::vector<double> sinc(terms);
    double factorial = 1.0;
    for (int j = 0; j < terms; ++j) {
        if (j > 0) factorial *= (2.0 * j) * (2.0 * j + 1.0);
        sinc[j] = (j % 2 == 0 ? 1.0 : -1.0) / factorial;
    }
    std::vector<double> squared(terms, 0.0);
    for (int i = 0; i < terms; ++i) {
        for (int j = 0; i + j < terms; ++j) squared[i + j] += sinc[i] * sinc[j];
    }
    std::vector<double> inverse(terms, 0.0);
    inverse[0] = 1.0 / squared[0];
    for (int k = 1; k < terms; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += squared[j] * inverse[k - j];
        inverse[k] = -acc / squared[0];
    }
    return inverse;
}

double exponent_value(double s, Exponent e) { return e == Exponent::Plus ? 0.5 + s : 0.5 - s; }

void check_regime(const PotentialParams& params, Exponent e) {
    switch (params.regime()) {
        case Regime::BoundStates:
            if (e == Exponent::Minus) {
                throw RegimeError("s > 1/2 admits only the x^(1/2 + s) wall behaviour");
            }
            return;
        case Regime::Bands:
        case Regime::FreeParticle: return;
        case Regime::Unsupported: break;
    }
    throw RegimeError("unsupported coupling s");
}

std::vector<Family> families_for(Regime regime) {
    std::vector<Family> out{{Exponent::Plus, MatchKind::ValueAtMid},
                            {Exponent::Plus, MatchKind::SlopeAtMid}};
    if (regime != Regime::BoundStates) {
        out.push_back({Exponent::Minus, MatchKind::ValueAtMid});
        out.push_back({Exponent::Minus, MatchKind::SlopeAtMid});
    }
    return out;
}

struct Bracketed {
    double energy;
    double residual;
    std::pair<double, double> bracket;
};

Bracketed solve_root(const PotentialParams& params, std::pair<double, double> bracket,
                     const ShootingConfig& cfg) {
    double lo = bracket.first;
    double hi = bracket.second;
    double f_lo = shoot(params, lo, cfg);
    double f_hi = shoot(params, hi, cfg);
    if (f_lo == 0.0) return {lo, 0.0, bracket};
    if (f_hi == 0.0) return {hi, 0.0, bracket};
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw BracketError("matching function has no sign change on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    }

    const double unit = params.energy_unit();
    auto tolerance = [&](double e) {
        return cfg.energy_tolerance * std::max(std::abs(e), 1e-12 * unit);
    };

    // Bisection down to a narrow bracket, then Illinois false position.
    while (hi - lo > 1e-4 * std::max(std::abs(hi), unit)) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = shoot(params, mid, cfg);
        if (f_mid == 0.0) return {mid, 0.0, bracket};
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    int side = 0;
    double root = 0.5 * (lo + hi);
    double f_root = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        root = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (!(root > lo && root < hi)) root = 0.5 * (lo + hi);
        f_root = shoot(params, root, cfg);
        if (f_root == 0.0) break;
        if ((f_root > 0.0) == (f_lo > 0.0)) {
            lo = root;
            f_lo = f_root;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            hi = root;
            f_hi = f_root;
            if (side == 1) f_lo *= 0.5;
            side = 1;
        }
        if (hi - lo <= tolerance(root)) break;
        if (iter == 199) throw NumericError("root polish did not converge");
    }
    return {root, f_root, bracket};
}

// Re-solves with a perturbed configuration. The root can sit on a bracket
// end, so search outward from the previous root before falling back to the
// original bracket.
std::optional<double> resolve_near(const PotentialParams& params, double previous,
                                   std::pair<double, double> bracket, const ShootingConfig& cfg) {
    const double width = bracket.second - bracket.first;
    double w = 1e-8 * std::max(std::abs(previous), 1e-6 * params.energy_unit());
    while (w < width) {
        const double lo = previous - w;
        const double hi = previous + w;
        const double f_lo = shoot(params, lo, cfg);
        const double f_hi = shoot(params, hi, cfg);
        if ((f_lo > 0.0) != (f_hi > 0.0) || f_lo == 0.0 || f_hi == 0.0) {
            return solve_root(params, {lo, hi}, cfg).energy;
        }
        w *= 8.0;
    }
    try {
        return solve_root(params, bracket, cfg).energy;
    } catch (const BracketError&) {
        return std::nullopt;
    }
}

std::optional<Classification> classify(const OracleResult& r,
                                       const std::vector<SpectrumLine>& closed_form,
                                       double energy_unit) {
    const SpectrumLine* best = nullptr;
    for (const auto& line : closed_form) {
        const double window = std::max(1e-6 * line.energy, 1e-9 * energy_unit);
        if (std::abs(line.energy - r.energy) > window) continue;
        // Degenerate levels (s = 1/2) are told apart by family.
        const bool family_match = predicted_family(line) == r.family;
        if (best == nullptr || (family_match && !(predicted_family(*best) == r.family)) ||
            (family_match == (predicted_family(*best) == r.family) &&
             std::abs(line.energy - r.energy) < std::abs(best->energy - r.energy))) {
            best = &line;
        }
    }
    if (best == nullptr) return std::nullopt;
    return Classification{best->n, best->edge};
}

struct FamilyScan {
    std::vector<OracleResult> levels;
    std::vector<std::string> errors;
};

FamilyScan scan_family(const PotentialParams& params, double e_max, ShootingConfig cfg,
                       Family family) {
    cfg.exponent = family.exponent;
    cfg.match = family.match;
    FamilyScan out;
    const double step = 0.05 * params.energy_unit();
    const int count = static_cast<int>(std::ceil(e_max / step));

    try {
        double e_prev = 0.0;
        double f_prev = shoot(params, e_prev, cfg);
        for (int i = 1; i <= count; ++i) {
            const double e = std::min(i * step, e_max);
            const double f = shoot(params, e, cfg);
            const bool crossing = (f_prev < 0.0 && f > 0.0) || (f_prev > 0.0 && f < 0.0) ||
                                  (f == 0.0 && f_prev != 0.0);
            if (crossing) {
                try {
                    auto result = find_eigen(params, {e_prev, e}, cfg);
                    if (result.energy > 0.0) out.levels.push_back(std::move(result));
                } catch (const Error& err) {
                    out.errors.push_back(std::string(to_string(family.exponent)) + "/" +
                                         std::string(to_string(family.match)) + ": " +
                                         err.what());
                }
            }
            e_prev = e;
            f_prev = f;
        }
    } catch (const Error& err) {
        out.errors.push_back(std::string(to_string(family.exponent)) + "/" +
                             std::string(to_string(family.match)) + ": " + err.what());
    }
    return out;
}

}  // namespace

std::string_view to_string(Exponent e) { return e == Exponent::Plus ? "plus" : "minus"; }

std::string_view to_string(MatchKind k) {
    return k == MatchKind::ValueAtMid ? "value_at_mid" : "slope_at_mid";
}

std::string_view to_string(Method m) {
    return m == Method::Shooting ? "shooting" : "finite_difference";
}

void ShootingConfig::validate() const {
    if (!(delta_fraction > 0.0 && delta_fraction < 0.01)) {
        throw DomainError("shooting start offset must satisfy 0 < delta < a/100");
    }
    if (!(integrator_tolerance > 0.0) || !(energy_tolerance > 0.0)) {
        throw DomainError("shooting tolerances must be positive");
    }
    if (max_steps <= 0) throw DomainError("max_steps must be positive");
    if (series_order < 0) throw DomainError("series_order must be non-negative");
}

Family predicted_family(const SpectrumLine& line) {
    return {line.edge == Edge::Lower ? Exponent::Minus : Exponent::Plus,
            line.n % 2 == 0 ? MatchKind::SlopeAtMid : MatchKind::ValueAtMid};
}

std::vector<double> frobenius_coefficients(const PotentialParams& params, double energy,
                                           Exponent exponent, int order) {
    // psi'' = [q(x) / x^2 - 2 m E] psi with q(x) = (s^2 - 1/4) (z / sin z)^2,
    // z = pi x / a. Matching x^(mu + k - 2) gives
    //     k (2 mu + k - 1) c_k = sum_{j>=1} q_j c_{k-2j} - 2 m E c_{k-2}.
    const double s = params.s();
    const double mu = exponent_value(s, exponent);
    const double z_scale = pi / params.a();
    const int half = order / 2;
    const std::vector<double> w = inverse_sinc_squared_series(half + 1);
    std::vector<double> q(half + 1);
    for (int j = 0; j <= half; ++j) q[j] = (s * s - 0.25) * w[j] * std::pow(z_scale, 2 * j);

    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = 1.0;
    const double two_m_e = 2.0 * params.m() * energy;
    for (int k = 2; k <= order; k += 2) {
        double rhs = -two_m_e * c[k - 2];
        for (int j = 1; 2 * j <= k; ++j) rhs += q[j] * c[k - 2 * j];
        const double pivot = k * (2.0 * mu + k - 1.0);
        if (pivot == 0.0) throw NumericError("Frobenius recurrence has a resonant exponent");
        c[k] = rhs / pivot;
    }
    return c;
}

double shoot(const PotentialParams& params, double energy, const ShootingConfig& cfg) {
    namespace ode = boost::numeric::odeint;
    cfg.validate();
    check_regime(params, cfg.exponent);

    const double a = params.a();
    const double delta = cfg.delta_fraction * a;
    const double mu = exponent_value(params.s(), cfg.exponent);
    const double two_m = 2.0 * params.m();

    // Start values divided by delta^mu; the equation is linear.
    const auto c = frobenius_coefficients(params, energy, cfg.exponent, cfg.series_order);
    State state{0.0, 0.0};
    double power = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        state[0] += c[k] * power;
        state[1] += c[k] * (mu + static_cast<double>(k)) * power / delta;
        power *= delta;
    }

    auto rhs = [&](const State& y, State& dydx, double x) {
        dydx[0] = y[1];
        dydx[1] = two_m * (evaluate_potential(params, x) - energy) * y[0];
    };

    double running_max = std::abs(state[0]);
    int steps = 0;
    auto observer = [&](const State& y, double) {
        running_max = std::max(running_max, std::abs(y[0]));
        if (++steps > cfg.max_steps) throw NumericError("shooting exceeded max_steps");
    };

    const double tol = cfg.integrator_tolerance;
    try {
        auto stepper =
            ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(1e-12 * tol, tol);
        ode::integrate_adaptive(stepper, rhs, state, delta, 0.5 * a, 1e-2 * delta, observer);
    } catch (const ode::step_adjustment_error& e) {
        throw NumericError(std::string("shooting step underflow: ") + e.what());
    } catch (const ode::no_progress_error& e) {
        throw NumericError(std::string("shooting made no progress: ") + e.what());
    }
    if (!std::isfinite(state[0]) || !std::isfinite(state[1]) || !(running_max > 0.0)) {
        throw NumericError("shooting produced a non-finite state");
    }

    if (cfg.match == MatchKind::ValueAtMid) return state[0] / running_max;
    return state[1] / ((pi / a) * running_max);
}

OracleResult find_eigen(const PotentialParams& params, std::pair<double, double> bracket,
                        const ShootingConfig& cfg) {
    cfg.validate();
    if (!(bracket.first < bracket.second)) throw BracketError("bracket must satisfy lo < hi");
    const Bracketed root = solve_root(params, bracket, cfg);

    OracleResult result;
    result.energy = root.energy;
    result.bracket = root.bracket;
    result.residual = root.residual;
    result.method = Method::Shooting;
    result.family = {cfg.exponent, cfg.match};

    ShootingConfig halved = cfg;
    halved.delta_fraction *= 0.5;
    const auto check = resolve_near(params, root.energy, bracket, halved);
    result.delta_sensitivity =
        check ? std::abs(*check - root.energy) : std::numeric_limits<double>::infinity();

    const double limit = 10.0 * cfg.energy_tolerance * std::max(std::abs(root.energy),
                                                                1e-12 * params.energy_unit());
    if (result.delta_sensitivity > limit) {
        result.flagged = true;
        result.note = "energy moves by " + std::to_string(result.delta_sensitivity) +
                      " when the start offset is halved";
    }
    return result;
}

ScanResult scan_spectrum(const PotentialParams& params, double e_max,
                         const ShootingConfig& cfg_base, bool parallel) {
    if (!(e_max > 0.0) || !std::isfinite(e_max)) throw DomainError("E_max must be positive");
    cfg_base.validate();
    const std::vector<Family> families = families_for(params.regime());
    if (params.regime() == Regime::Unsupported) throw RegimeError("unsupported coupling s");

    std::vector<FamilyScan> scans;
    if (parallel) {
        std::vector<std::future<FamilyScan>> jobs;
        for (const auto& f : families) {
            jobs.push_back(std::async(std::launch::async, scan_family, std::cref(params), e_max,
                                      cfg_base, f));
        }
        for (auto& j : jobs) scans.push_back(j.get());
    } else {
        for (const auto& f : families) scans.push_back(scan_family(params, e_max, cfg_base, f));
    }

    ScanResult out;
    for (auto& scan : scans) {
        // Duplicates only arise inside one family, from a root on a grid point.
        std::vector<OracleResult> unique;
        for (auto& r : scan.levels) {
            const bool dup = std::any_of(unique.begin(), unique.end(), [&](const OracleResult& u) {
                return std::abs(u.energy - r.energy) <= 1e-8 * std::abs(r.energy);
            });
            if (!dup) unique.push_back(std::move(r));
        }
        for (auto& r : unique) out.levels.push_back(std::move(r));
        for (auto& e : scan.errors) out.errors.push_back(std::move(e));
    }

    // Enough closed-form levels to cover e_max.
    const double lambda_max = std::sqrt(e_max / params.energy_unit());
    const int n_max = static_cast<int>(std::ceil(lambda_max)) + 1;
    const auto closed_form = closed_form_spectrum(params, n_max);
    for (auto& r : out.levels) r.classification = classify(r, closed_form, params.energy_unit());

    std::stable_sort(out.levels.begin(), out.levels.end(),
                     [](const OracleResult& l, const OracleResult& r) {
                         if (l.energy != r.energy) return l.energy < r.energy;
                         if (l.family.exponent != r.family.exponent) {
                             return l.family.exponent < r.family.exponent;
                         }
                         return l.family.match < r.family.match;
                     });
    return out;
}

std::vector<double> fd_eigenvalues(const PotentialParams& params, int grid_points, int k_levels) {
    if (grid_points < 2) throw DomainError("finite-difference grid needs at least 2 intervals");
    const int interior = grid_points - 1;
    if (k_levels < 1 || k_levels > interior) {
        throw DomainError("k_levels must be between 1 and the number of interior points");
    }
    const double a = params.a();
    const double h = a / grid_points;
    const double kinetic = 1.0 / (2.0 * params.m() * h * h);

    std::vector<double> diag(interior);
    std::vector<double> off(interior > 1 ? interior - 1 : 1, -kinetic);
    for (int i = 0; i < interior; ++i) {
        diag[i] = 2.0 * kinetic + evaluate_potential(params, (i + 1) * h);
    }

    lapack_int found = 0;
    lapack_int nsplit = 0;
    std::vector<double> w(interior);
    std::vector<lapack_int> iblock(interior);
    std::vector<lapack_int> isplit(interior);
    const lapack_int info =
        LAPACKE_dstebz('I', 'E', interior, 0.0, 0.0, 1, k_levels,
                       2.0 * std::numeric_limits<double>::min(), diag.data(), off.data(),
                       &found, &nsplit, w.data(), iblock.data(), isplit.data());
    if (info != 0 || found != k_levels) {
        throw NumericError("tridiagonal bisection failed (info = " + std::to_string(info) + ")");
    }
    w.resize(k_levels);
    return w;
}

std::vector<double> fd_bound_spectrum(const PotentialParams& params, int grid_points, int k_levels) {
    if (params.regime() != Regime::BoundStates) {
        throw RegimeError("finite-difference oracle needs hard walls (s > 1/2)");
    }
    if (grid_points < 200) throw DomainError("finite-difference oracle needs N >= 200");
    if (k_levels < 1 || k_levels > grid_points / 10) {
        throw DomainError("k_levels too large for the grid");
    }
    const auto coarse = fd_eigenvalues(params, grid_points, k_levels);
    const auto fine = fd_eigenvalues(params, 2 * grid_points, k_levels);
    std::vector<double> out(k_levels);
    for (int i = 0; i < k_levels; ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

}  // namespace scarf::oracle
