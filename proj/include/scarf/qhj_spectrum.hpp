#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scarf/potential.hpp"

namespace scarf {

enum class Edge { Lower, Upper, NotApplicable };

std::string_view to_string(Edge e);

// The analytic part of the momentum function (the constant C, and the
// leading Laurent coefficient d0 at infinity). Parity of the eigenstates
// forces both to vanish.
inline constexpr double analytic_part = 0.0;

// One combination of residues: b1 at y = +i, b1' at y = -i, d1 at infinity,
// and the polynomial degree they imply through 2 b1 + n = d1.
struct ResidueSet {
    int set_id = 0;
    double b1 = 0.0;
    double b1_prime = 0.0;
    double d1 = 0.0;
    double n_value = 0.0;
    bool valid = false;
    std::optional<std::string> rejection_reason;
};

struct SpectrumLine {
    int n = 0;
    Regime regime = Regime::Unsupported;
    Edge edge = Edge::NotApplicable;
    double lambda = 0.0;
    double energy = 0.0;
    double nu1 = 0.0;
    double nu2 = 0.0;
    double b1 = 0.0;
    double d1 = 0.0;
};

struct BandEdges {
    SpectrumLine lower;
    SpectrumLine upper;
};

// |n - round(n)| below this counts as integral.
inline constexpr double integrality_tolerance = 1e-9;

// {(1 - lambda)/2, (1 + lambda)/2}; the same pair applies at y = -i.
std::pair<double, double> fixed_pole_residue_candidates(double lambda);

// {(1 - 2s)/2, (1 + 2s)/2}, the roots of d^2 - d + (1/4 - s^2) = 0.
std::pair<double, double> infinity_residue_candidates(double s);

// Residues at infinity compatible with a wavefunction that stays finite at
// the lattice points: both roots for 0 < s < 1/2, only (1 - 2s)/2 above.
std::vector<double> admissible_d1(double s);

// Every (b1 = b1') x (admissible d1) combination. Set ids follow the
// table ordering: 1 + 2*[b1 = (1+lambda)/2] + [d1 = (1+2s)/2].
std::vector<ResidueSet> enumerate_residue_sets(double s, double lambda);

// Inverse use of a residue set: the lambda for which set_id yields degree n,
// or nullopt when that lambda would not be positive.
std::optional<double> lambda_for_residue_set(int set_id, double s, int n);

BandEdges band_edge_energies(const PotentialParams& params, int n);

SpectrumLine bound_energy(const PotentialParams& params, int n);

// Same level evaluated through the well-depth form
// (pi^2 / 2ma^2) (1/2 + n + sqrt(1/4 - 2 m v0 a^2 / pi^2))^2.
double bound_energy_from_v0(const PotentialParams& params, int n);

// s = 1/2 limit: edges (pi^2 / 2ma^2) {n^2, (n+1)^2}. The n = 0 lower edge
// is the lambda = 0 constant state and is not returned.
struct FreeParticleEdges {
    std::optional<SpectrumLine> lower;
    SpectrumLine upper;
};
FreeParticleEdges free_particle_edges(const PotentialParams& params, int n);

double lambda_of_energy(const PotentialParams& params, double energy);
double energy_of_lambda(const PotentialParams& params, double lambda);

// All closed-form levels for n = 0..n_max in the regime of params, ordered
// by energy. Bands and the free particle contribute both edges per n.
std::vector<SpectrumLine> closed_form_spectrum(const PotentialParams& params, int n_max);

}  // namespace scarf
