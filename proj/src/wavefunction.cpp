#include "scarf/wavefunction.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

// Unnormalised psi at a reduced position r in (0, a), through sin and cos so
// that nothing overflows near the walls:
//     |S|^lambda P(C/S) = S^(lambda - n) * sum_j c_j C^j S^(n - j).
double raw_psi(const PolySpec& poly, double r, double a) {
    const bool right_half = r > 0.5 * a;
    const double u = right_half ? a - r : r;
    const double sn = std::sin(pi * u / a);
    const double cs = right_half ? -std::cos(pi * u / a) : std::cos(pi * u / a);

    double h = 0.0;
    double s_pow = 1.0;
    std::vector<double> s_powers(poly.coeffs.size());
    for (auto& p : s_powers) {
        p = s_pow;
        s_pow *= sn;
    }
    for (int j = poly.n; j >= 0; --j) h = h * cs + poly.coeffs[j] * s_powers[poly.n - j];
    return std::pow(sn, poly.lambda - poly.n) * h;
}

Edge poly_edge(const SpectrumLine& line) {
    return line.regime == Regime::BoundStates ? Edge::NotApplicable : line.edge;
}

double closed_form_lambda(const PotentialParams& params, const SpectrumLine& line) {
    switch (params.regime()) {
        case Regime::BoundStates: return bound_energy(params, line.n).lambda;
        case Regime::Bands: {
            const auto edges = band_edge_energies(params, line.n);
            return line.edge == Edge::Lower ? edges.lower.lambda : edges.upper.lambda;
        }
        case Regime::FreeParticle: {
            const auto edges = free_particle_edges(params, line.n);
            if (line.edge == Edge::Lower) {
                if (!edges.lower) throw ConstructionError("free particle has no n = 0 lower edge");
                return edges.lower->lambda;
            }
            return edges.upper.lambda;
        }
        case Regime::Unsupported: break;
    }
    throw ConstructionError("unsupported regime");
}

// Position in the open cell, or DomainError for a bound state outside it.
double position_in_cell(const WavefunctionSpec& spec, double x) {
    const double a = spec.params.a();
    if (spec.line.regime == Regime::BoundStates) {
        const double lo = static_cast<double>(spec.cell_index) * a;
        if (x < lo || x > lo + a) {
            throw DomainError("bound state evaluated outside its cell: x = " + std::to_string(x));
        }
    }
    return reduce_to_cell(x, a);
}

double cell_origin(const WavefunctionSpec& spec) {
    return static_cast<double>(spec.cell_index) * spec.params.a();
}

std::vector<double> midpoint_samples(const WavefunctionSpec& spec, int samples) {
    const double a = spec.params.a();
    const double x0 = cell_origin(spec);
    std::vector<double> values(samples);
    for (int i = 0; i < samples; ++i) values[i] = eval_psi(spec, x0 + (i + 0.5) * a / samples);
    return values;
}

struct SignRun {
    std::vector<int> signs;      // per sample: -1, 0 (unresolved), +1
    double max_abs = 0.0;
};

SignRun resolve_signs(const std::vector<double>& values) {
    SignRun run;
    for (double v : values) run.max_abs = std::max(run.max_abs, std::abs(v));
    const double floor = 1e-13 * run.max_abs;
    run.signs.reserve(values.size());
    for (double v : values) run.signs.push_back(std::abs(v) <= floor ? 0 : (v > 0 ? 1 : -1));

    // Unresolved samples are allowed only in the runs touching the walls.
    const auto first = std::find_if(run.signs.begin(), run.signs.end(), [](int s) { return s != 0; });
    const auto last = std::find_if(run.signs.rbegin(), run.signs.rend(), [](int s) { return s != 0; });
    if (first == run.signs.end()) throw NumericError("wavefunction vanishes on the whole grid");
    if (std::find(first, last.base(), 0) != last.base()) {
        throw NumericError("sign of psi unresolved below 1e-13 of max: increase resolution");
    }
    return run;
}

}  // namespace

WavefunctionSpec build_wavefunction(const PotentialParams& params, const SpectrumLine& line,
                                    long cell_index) {
    if (line.regime != params.regime()) {
        throw ConstructionError("spectrum line regime does not match the potential");
    }
    const double expected = closed_form_lambda(params, line);
    if (std::abs(line.lambda - expected) > 1e-12 * expected) {
        throw ConstructionError("spectrum line lambda " + std::to_string(line.lambda) +
                                " does not match the potential (expected " +
                                std::to_string(expected) + ")");
    }

    WavefunctionSpec spec{params, line, build_poly(params.s(), line.n, poly_edge(line)),
                          0.5 * (1.0 - line.lambda), 1.0, cell_index};
    const double integral = norm_integral(spec);
    if (!(integral > 0.0) || !std::isfinite(integral)) {
        throw ConstructionError("wavefunction norm integral is not positive");
    }
    spec.norm = 1.0 / std::sqrt(integral);
    return spec;
}

PsiEvaluation eval_psi_checked(const WavefunctionSpec& spec, double x) {
    if (!std::isfinite(x)) throw DomainError("eval_psi: non-finite x");
    const double r = position_in_cell(spec, x);
    if (on_lattice(x, spec.params.a())) return {0.0, true};
    return {spec.norm * raw_psi(spec.poly, r, spec.params.a()), false};
}

double eval_psi(const WavefunctionSpec& spec, double x) { return eval_psi_checked(spec, x).value; }

PsiDerivatives eval_psi_derivatives(const WavefunctionSpec& spec, double x) {
    const double a = spec.params.a();
    const double r = position_in_cell(spec, x);
    const double y = cot_map(x, a);
    const double u = r > 0.5 * a ? a - r : r;
    const double k = pi / a;
    const double lam = spec.line.lambda;
    const double envelope = spec.norm * std::pow(std::sin(pi * u / a), lam);
    const auto p = evaluate(spec.poly, y);
    const double w = 1.0 + y * y;

    const double g = lam * y * p.p - w * p.dp;
    const double dg = lam * p.p + (lam - 2.0) * y * p.dp - w * p.d2p;
    return {envelope * p.p, k * envelope * g, k * k * envelope * (lam * y * g - w * dg)};
}

double schrodinger_residual(const WavefunctionSpec& spec, double x) {
    const auto d = eval_psi_derivatives(spec, x);
    const double v = evaluate_potential(spec.params, x);
    return -d.d2psi / (2.0 * spec.params.m()) + (v - spec.line.energy) * d.psi;
}

double max_schrodinger_residual(const WavefunctionSpec& spec, int points, double margin) {
    const double a = spec.params.a();
    const double lo = cell_origin(spec) + margin * a;
    const double width = a * (1.0 - 2.0 * margin);
    double worst = 0.0;
    double peak = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + width * (i + 0.5) / points;
        worst = std::max(worst, std::abs(schrodinger_residual(spec, x)));
        peak = std::max(peak, std::abs(eval_psi(spec, x)));
    }
    return worst / (std::abs(spec.line.energy) * peak);
}

double norm_integral(const WavefunctionSpec& spec) {
    using boost::math::quadrature::gauss_kronrod;
    const double a = spec.params.a();
    auto f = [&](double r) {
        const double v = spec.norm * raw_psi(spec.poly, r, a);
        return v * v;
    };

    // Geometric grading toward both walls resolves the x^(2 mu) endpoint behaviour.
    constexpr int levels = 50;
    std::vector<double> cuts;
    for (int k = levels; k >= 1; --k) cuts.push_back(a * std::ldexp(1.0, -k));
    for (int k = 2; k <= levels; ++k) cuts.push_back(a - a * std::ldexp(1.0, -k));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double err = 0.0;
        total += gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 6, 1e-13, &err);
    }
    return total;
}

int count_nodes(const WavefunctionSpec& spec, int samples) {
    if (samples < 64) throw DomainError("count_nodes needs at least 64 samples");
    const SignRun run = resolve_signs(midpoint_samples(spec, samples));
    int nodes = 0;
    int previous = 0;
    for (int s : run.signs) {
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++nodes;
        previous = s;
    }
    return nodes;
}

std::vector<double> node_positions(const WavefunctionSpec& spec, int samples) {
    if (samples < 64) throw DomainError("node_positions needs at least 64 samples");
    const double a = spec.params.a();
    const double x0 = cell_origin(spec);
    const std::vector<double> values = midpoint_samples(spec, samples);
    const SignRun run = resolve_signs(values);

    std::vector<double> nodes;
    int prev_index = -1;
    for (int i = 0; i < samples; ++i) {
        if (run.signs[i] == 0) continue;
        if (prev_index >= 0 && run.signs[i] != run.signs[prev_index]) {
            double lo = x0 + (prev_index + 0.5) * a / samples;
            double hi = x0 + (i + 0.5) * a / samples;
            double f_lo = values[prev_index];
            while (hi - lo > 1e-15 * a) {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = eval_psi(spec, mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((f_mid > 0) == (f_lo > 0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        prev_index = i;
    }
    return nodes;
}

double boundary_exponent(const WavefunctionSpec& spec) {
    const double a = spec.params.a();
    const double x0 = cell_origin(spec);
    constexpr int points = 41;
    double lo = 1e-5;
    const double hi = 1e-3;
    while (lo < hi) {
        std::vector<double> lx;
        std::vector<double> lp;
        bool usable = true;
        for (int i = 0; i < points; ++i) {
            const double t = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1);
            const double psi = std::abs(eval_psi(spec, x0 + a * std::exp(t)));
            if (!(psi > 0.0) || !std::isfinite(std::log(psi))) {
                usable = false;
                break;
            }
            lx.push_back(t);
            lp.push_back(std::log(psi));
        }
        if (usable) {
            double mx = 0.0;
            double mp = 0.0;
            for (int i = 0; i < points; ++i) {
                mx += lx[i];
                mp += lp[i];
            }
            mx /= points;
            mp /= points;
            double sxx = 0.0;
            double sxp = 0.0;
            for (int i = 0; i < points; ++i) {
                sxx += (lx[i] - mx) * (lx[i] - mx);
                sxp += (lx[i] - mx) * (lp[i] - mp);
            }
            return sxp / sxx;
        }
        lo *= 10.0;
    }
    throw NumericError("psi underflows across the boundary fit window");
}

double expected_boundary_exponent(const WavefunctionSpec& spec) {
    return spec.line.lambda - spec.line.n;
}

ParityReport parity(const WavefunctionSpec& spec) {
    const double a = spec.params.a();
    const double mid = cell_origin(spec) + 0.5 * a;
    constexpr int points = 256;
    double even = 0.0;
    double odd = 0.0;
    double peak = 0.0;
    for (int i = 0; i < points; ++i) {
        const double u = 0.5 * a * (i + 0.5) / points;
        const double right = eval_psi(spec, mid + u);
        const double left = eval_psi(spec, mid - u);
        even = std::max(even, std::abs(right - left));
        odd = std::max(odd, std::abs(right + left));
        peak = std::max({peak, std::abs(right), std::abs(left)});
    }
    if (even <= odd) return {Parity::Even, even / peak};
    return {Parity::Odd, odd / peak};
}

std::vector<WavefunctionSample> sample_wavefunction(const WavefunctionSpec& spec, int samples) {
    if (samples < 2) throw DomainError("need at least two samples");
    const double a = spec.params.a();
    const double offset = a / (10.0 * samples);
    const double x0 = cell_origin(spec) + offset;
    const double step = (a - 2.0 * offset) / (samples - 1);
    std::vector<WavefunctionSample> rows;
    rows.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double x = i + 1 == samples ? cell_origin(spec) + a - offset : x0 + i * step;
        const double psi = eval_psi(spec, x);
        rows.push_back({x, evaluate_potential(spec.params, x), psi, psi * psi});
    }
    return rows;
}

}  // namespace scarf
