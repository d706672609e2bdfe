#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scarf/potential.hpp"
#include "scarf/qhj_spectrum.hpp"

// Direct x-space eigensolvers for the Schroedinger equation with the
// inverse-sine-squared potential. Nothing in here uses the cot substitution
// or the residue algebra; the closed forms only enter when a finished
// result is labelled with its nearest level.
namespace scarf::oracle {

// Frobenius exponent at the wall: psi ~ x^(1/2 + s) or x^(1/2 - s).
enum class Exponent { Plus, Minus };

// Condition imposed at the cell midpoint: odd states have psi(a/2) = 0,
// even states psi'(a/2) = 0.
enum class MatchKind { ValueAtMid, SlopeAtMid };

enum class Method { Shooting, FiniteDifference };

std::string_view to_string(Exponent e);
std::string_view to_string(MatchKind k);
std::string_view to_string(Method m);

struct Family {
    Exponent exponent = Exponent::Plus;
    MatchKind match = MatchKind::SlopeAtMid;
    friend bool operator==(const Family&, const Family&) = default;
};

struct ShootingConfig {
    double delta_fraction = 1e-4;     // start offset in units of a, < 1/100
    Exponent exponent = Exponent::Plus;
    MatchKind match = MatchKind::SlopeAtMid;
    double integrator_tolerance = 1e-14;
    double energy_tolerance = 1e-10;  // relative, for the root polish
    int max_steps = 200000;
    int series_order = 12;            // highest power kept in the Frobenius start

    // Throws DomainError when an invariant is violated.
    void validate() const;
};

struct Classification {
    int n = 0;
    Edge edge = Edge::NotApplicable;
};

struct OracleResult {
    double energy = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double residual = 0.0;
    Method method = Method::Shooting;
    Family family;
    std::optional<Classification> classification;
    double delta_sensitivity = 0.0;
    bool flagged = false;
    std::string note;
};

struct ScanResult {
    std::vector<OracleResult> levels;
    std::vector<std::string> errors;
};

// The family in which a closed-form level must appear.
Family predicted_family(const SpectrumLine& line);

// Coefficients c_0 = 1, c_2, c_4, ... of psi = x^mu sum_k c_k x^k near the
// wall, for energy E. Index k holds the coefficient of x^k (odd entries 0).
std::vector<double> frobenius_coefficients(const PotentialParams& params, double energy,
                                           Exponent exponent, int order);

// Integrates from x = delta to a/2 and returns psi(a/2) or psi'(a/2) / (pi/a),
// divided by the running maximum of |psi|.
double shoot(const PotentialParams& params, double energy, const ShootingConfig& cfg);

// Bisection followed by a bracketed secant polish. Throws BracketError when
// the matching function does not change sign on the bracket.
OracleResult find_eigen(const PotentialParams& params, std::pair<double, double> bracket,
                        const ShootingConfig& cfg);

// Scans [0, e_max] on a grid of step 0.05 pi^2 / (2 m a^2) in every admissible
// family, solves each sign change, and labels results with the nearest
// closed-form level within 1e-6 relative (or 1e-9 pi^2 / (2 m a^2) absolute). Deterministic whether or not the
// families run concurrently.
ScanResult scan_spectrum(const PotentialParams& params, double e_max,
                         const ShootingConfig& cfg_base = {}, bool parallel = false);

// Lowest k eigenvalues of the three-point discretisation on (0, a) with
// Dirichlet ends and N intervals.
std::vector<double> fd_eigenvalues(const PotentialParams& params, int grid_points, int k_levels);

// Richardson extrapolation (4 E_{2N} - E_N) / 3 of fd_eigenvalues. Bound
// states only; grid_points >= 200.
std::vector<double> fd_bound_spectrum(const PotentialParams& params, int grid_points, int k_levels);

}  // namespace scarf::oracle
