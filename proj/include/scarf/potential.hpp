#pragma once

#include <numbers>
#include <string_view>

namespace scarf {

inline constexpr double pi = std::numbers::pi;

enum class Regime { BoundStates, Bands, FreeParticle, Unsupported };

std::string_view to_string(Regime r);

// Total classification of the coupling: s > 1/2 isolated wells, 0 < s < 1/2
// periodic lattice, s = 1/2 vanishing potential. Non-finite or s <= 0 is
// Unsupported.
Regime classify_regime(double s);

// Physical configuration of the periodic inverse-sine-squared potential
//
//     V(x) = -(1/4 - s^2) pi^2 / (2 m a^2 sin^2(pi x / a))
//
// with hbar = 1. The well-depth coefficient v0 = (1/4 - s^2) pi^2 / (2 m a^2)
// is stored alongside, so that V(x) = -v0 / sin^2(pi x / a).
class PotentialParams {
public:
    // Throws DomainError unless s, a, m are finite and positive.
    static PotentialParams create(double s, double a = 1.0, double m = 1.0);

    double s() const noexcept { return s_; }
    double a() const noexcept { return a_; }
    double m() const noexcept { return m_; }
    double v0() const noexcept { return v0_; }
    Regime regime() const noexcept { return classify_regime(s_); }

    // pi^2 / (2 m a^2): the natural energy unit, E = unit * lambda^2.
    double energy_unit() const noexcept { return pi * pi / (2.0 * m_ * a_ * a_); }

    // sqrt(1/4 - 2 m v0 a^2 / pi^2), which reconstructs s from the stored
    // well depth.
    double coupling_from_v0() const;

    friend bool operator==(const PotentialParams&, const PotentialParams&) = default;

private:
    PotentialParams(double s, double a, double m);

    double s_;
    double a_;
    double m_;
    double v0_;
};

// Position reduced into [0, a).
double reduce_to_cell(double x, double a);

// True when x lies within 1e-12 * a of a lattice point k * a.
bool on_lattice(double x, double a);

// Throws SingularityError on lattice points.
double evaluate_potential(const PotentialParams& params, double x);

// y = cot(pi x / a). Throws SingularityError on lattice points.
double cot_map(double x, double a);

// Unique x in (k a, (k + 1) a) with cot(pi x / a) = y.
double inverse_cot_map(double y, long cell_index, double a);

}  // namespace scarf
