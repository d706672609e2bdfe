#include "scarf/qhj_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

void require_level(int n) {
    if (n < 0) throw DomainError("level index n must be non-negative");
}

SpectrumLine make_line(const PotentialParams& params, int n, Regime regime, Edge edge,
                       double lambda, double d1) {
    SpectrumLine line;
    line.n = n;
    line.regime = regime;
    line.edge = edge;
    line.lambda = lambda;
    line.energy = energy_of_lambda(params, lambda);
    // Symmetric Jacobi parameters -n -+ s - 1/2, i.e. -lambda on every branch.
    line.nu1 = line.nu2 = -lambda;
    line.b1 = 0.5 * (1.0 - lambda);
    line.d1 = d1;
    return line;
}

}  // namespace

std::string_view to_string(Edge e) {
    switch (e) {
        case Edge::Lower: return "lower";
        case Edge::Upper: return "upper";
        case Edge::NotApplicable: return "none";
    }
    return "none";
}

std::pair<double, double> fixed_pole_residue_candidates(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw DomainError("lambda must be positive and real");
    }
    return {0.5 * (1.0 - lambda), 0.5 * (1.0 + lambda)};
}

std::pair<double, double> infinity_residue_candidates(double s) {
    return {0.5 * (1.0 - 2.0 * s), 0.5 * (1.0 + 2.0 * s)};
}

std::vector<double> admissible_d1(double s) {
    switch (classify_regime(s)) {
        case Regime::Bands: {
            auto [minus, plus] = infinity_residue_candidates(s);
            return {minus, plus};
        }
        case Regime::BoundStates: return {infinity_residue_candidates(s).first};
        case Regime::FreeParticle:
            throw RegimeError("s = 1/2: residues at infinity degenerate to {0, 1}");
        case Regime::Unsupported: break;
    }
    throw RegimeError("unsupported coupling s");
}

std::vector<ResidueSet> enumerate_residue_sets(double s, double lambda) {
    const auto [b_minus, b_plus] = fixed_pole_residue_candidates(lambda);
    const auto [d_minus, d_plus] = infinity_residue_candidates(s);
    const std::vector<double> d1s = admissible_d1(s);

    std::vector<ResidueSet> sets;
    for (double b1 : {b_minus, b_plus}) {
        for (double d1 : d1s) {
            ResidueSet rs;
            rs.set_id = 1 + (b1 == b_plus ? 2 : 0) + (d1 == d_plus ? 1 : 0);
            rs.b1 = b1;
            rs.b1_prime = b1;
            rs.d1 = d1;
            rs.n_value = d1 - rs.b1 - rs.b1_prime;
            const double nearest = std::round(rs.n_value);
            if (rs.n_value < -integrality_tolerance) {
                rs.rejection_reason = "n < 0";
            } else if (std::abs(rs.n_value - nearest) > integrality_tolerance) {
                rs.rejection_reason = "n not an integer";
            } else {
                rs.valid = true;
            }
            sets.push_back(std::move(rs));
        }
    }
    return sets;
}

std::optional<double> lambda_for_residue_set(int set_id, double s, int n) {
    require_level(n);
    if (set_id < 1 || set_id > 4) throw DomainError("residue set id must be 1..4");
    // From 2 b1 + n = d1 with b1 = (1 -+ lambda)/2 and d1 = (1 -+ 2s)/2.
    const double sign_b = set_id >= 3 ? -1.0 : 1.0;
    const double sign_d = set_id % 2 == 0 ? 1.0 : -1.0;
    const double lambda = sign_b * (n + 0.5 - sign_d * s);
    if (!(lambda > 0.0)) return std::nullopt;
    return lambda;
}

BandEdges band_edge_energies(const PotentialParams& params, int n) {
    require_level(n);
    if (params.regime() != Regime::Bands) {
        throw RegimeError("band_edge_energies requires 0 < s < 1/2");
    }
    const double s = params.s();
    const auto [d_minus, d_plus] = infinity_residue_candidates(s);
    return {make_line(params, n, Regime::Bands, Edge::Lower, n + 0.5 - s, d_plus),
            make_line(params, n, Regime::Bands, Edge::Upper, n + 0.5 + s, d_minus)};
}

SpectrumLine bound_energy(const PotentialParams& params, int n) {
    require_level(n);
    if (params.regime() != Regime::BoundStates) {
        throw RegimeError("bound_energy requires s > 1/2");
    }
    const double s = params.s();
    return make_line(params, n, Regime::BoundStates, Edge::NotApplicable, n + 0.5 + s,
                     infinity_residue_candidates(s).first);
}

double bound_energy_from_v0(const PotentialParams& params, int n) {
    require_level(n);
    const double root = params.coupling_from_v0();
    const double lam = 0.5 + n + root;
    return params.energy_unit() * lam * lam;
}

FreeParticleEdges free_particle_edges(const PotentialParams& params, int n) {
    require_level(n);
    if (params.regime() != Regime::FreeParticle) {
        throw RegimeError("free_particle_edges requires s = 1/2");
    }
    FreeParticleEdges edges{std::nullopt,
                            make_line(params, n, Regime::FreeParticle, Edge::Upper, n + 1.0, 0.0)};
    if (n > 0) {
        edges.lower = make_line(params, n, Regime::FreeParticle, Edge::Lower, n, 1.0);
    }
    return edges;
}

double lambda_of_energy(const PotentialParams& params, double energy) {
    if (!std::isfinite(energy) || energy <= 0.0) {
        throw DomainError("energy must be positive: lambda would be imaginary");
    }
    return std::sqrt(2.0 * params.m() * energy) * params.a() / pi;
}

double energy_of_lambda(const PotentialParams& params, double lambda) {
    return params.energy_unit() * lambda * lambda;
}

std::vector<SpectrumLine> closed_form_spectrum(const PotentialParams& params, int n_max) {
    require_level(n_max);
    std::vector<SpectrumLine> lines;
    for (int n = 0; n <= n_max; ++n) {
        switch (params.regime()) {
            case Regime::BoundStates: lines.push_back(bound_energy(params, n)); break;
            case Regime::Bands: {
                auto edges = band_edge_energies(params, n);
                lines.push_back(edges.lower);
                lines.push_back(edges.upper);
                break;
            }
            case Regime::FreeParticle: {
                auto edges = free_particle_edges(params, n);
                if (edges.lower) lines.push_back(*edges.lower);
                lines.push_back(edges.upper);
                break;
            }
            case Regime::Unsupported: throw RegimeError("unsupported coupling s");
        }
    }
    std::stable_sort(lines.begin(), lines.end(),
                     [](const SpectrumLine& l, const SpectrumLine& r) { return l.energy < r.energy; });
    return lines;
}

}  // namespace scarf
