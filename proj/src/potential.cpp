#include "scarf/potential.hpp"

#include <cmath>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

constexpr double lattice_tolerance = 1e-12;

// Distance of a reduced position to the nearest wall, in [0, a/2].
double folded(double r, double a) { return r <= 0.5 * a ? r : a - r; }

void throw_on_lattice(double x, double a, const char* what) {
    if (on_lattice(x, a)) {
        throw SingularityError(std::string(what) + ": x = " + std::to_string(x) +
                               " is a lattice point");
    }
}

}  // namespace

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::BoundStates: return "bound_states";
        case Regime::Bands: return "bands";
        case Regime::FreeParticle: return "free_particle";
        case Regime::Unsupported: return "unsupported";
    }
    return "unsupported";
}

Regime classify_regime(double s) {
    if (!std::isfinite(s) || s <= 0.0) return Regime::Unsupported;
    if (s > 0.5) return Regime::BoundStates;
    if (s < 0.5) return Regime::Bands;
    return Regime::FreeParticle;
}

PotentialParams::PotentialParams(double s, double a, double m)
    : s_(s), a_(a), m_(m), v0_((0.25 - s * s) * pi * pi / (2.0 * m * a * a)) {}

PotentialParams PotentialParams::create(double s, double a, double m) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(s)) throw DomainError("coupling s must be finite and positive");
    if (!positive(a)) throw DomainError("period a must be finite and positive");
    if (!positive(m)) throw DomainError("mass m must be finite and positive");
    return PotentialParams(s, a, m);
}

double PotentialParams::coupling_from_v0() const {
    return std::sqrt(0.25 - 2.0 * m_ * v0_ * a_ * a_ / (pi * pi));
}

double reduce_to_cell(double x, double a) {
    double r = std::fmod(x, a);
    if (r < 0.0) r += a;
    if (r >= a) r = 0.0;
    return r;
}

bool on_lattice(double x, double a) {
    return folded(reduce_to_cell(x, a), a) <= lattice_tolerance * a;
}

double evaluate_potential(const PotentialParams& params, double x) {
    if (!std::isfinite(x)) throw DomainError("evaluate_potential: non-finite x");
    const double a = params.a();
    throw_on_lattice(x, a, "evaluate_potential");
    const double sn = std::sin(pi * folded(reduce_to_cell(x, a), a) / a);
    return -params.v0() / (sn * sn);
}

double cot_map(double x, double a) {
    if (!std::isfinite(x)) throw DomainError("cot_map: non-finite x");
    throw_on_lattice(x, a, "cot_map");
    const double r = reduce_to_cell(x, a);
    const double t = pi * folded(r, a) / a;
    const double c = std::cos(t) / std::sin(t);
    return r <= 0.5 * a ? c : -c;
}

double inverse_cot_map(double y, long cell_index, double a) {
    if (!std::isfinite(y)) throw DomainError("inverse_cot_map: non-finite y");
    // atan2(1, y) is arccot with range (0, pi).
    return static_cast<double>(cell_index) * a + a * std::atan2(1.0, y) / pi;
}

}  // namespace scarf
