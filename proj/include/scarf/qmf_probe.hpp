#pragma once

#include <complex>
#include <span>
#include <vector>

#include "scarf/polynomial.hpp"
#include "scarf/wavefunction.hpp"

namespace scarf {

// Quantum momentum function in the cot variable,
//
//     chi(y) = d/dy ln[(y^2 + 1)^b1 P_n(y)] = 2 b1 y / (y^2 + 1) + P_n'(y) / P_n(y),
//
// with fixed poles at y = +-i and moving poles at the real roots of P_n.
class ChiFunction {
public:
    ChiFunction(PolySpec poly, double b1);
    explicit ChiFunction(const WavefunctionSpec& spec);

    std::complex<double> value(std::complex<double> y) const;
    std::complex<double> derivative(std::complex<double> y) const;
    double value(double y) const;
    double derivative(double y) const;

    const PolySpec& poly() const noexcept { return poly_; }
    double b1() const noexcept { return b1_; }
    const std::vector<double>& moving_poles() const noexcept { return roots_; }
    // +i, -i, then the moving poles.
    std::vector<std::complex<double>> poles() const;

private:
    PolySpec poly_;
    double b1_;
    std::vector<double> roots_;
};

struct InfinityResidue {
    std::complex<double> d1;
    std::complex<double> d0;
};

struct ResidueReport {
    std::complex<double> b1_measured;
    std::complex<double> b1_prime_measured;
    std::complex<double> d1_measured;
    std::complex<double> d0_measured;
    int moving_pole_count = 0;
    double sum_rule_defect = 0.0;
    double riccati_residual = 0.0;
    double parity_defect = 0.0;
};

// (1 / 2 pi i) times the integral of chi around |y - center| = radius, by
// the trapezoidal rule. Throws ContourError when another pole sits within
// 1.5 radius of the center or the target pole is too close to the circle.
std::complex<double> contour_residue(const ChiFunction& chi, std::complex<double> center,
                                     double radius, int samples = 256);

// Residue at infinity d1 from a circle enclosing every pole, confirmed by
// doubling the radius; d0 is the circle average and must vanish.
InfinityResidue residue_at_infinity(const ChiFunction& chi, double radius, int samples = 256);

// Argument principle on P_n over the rectangle [-half_width, half_width] x
// [-1/2, 1/2], composite Gauss-Legendre on each side.
int count_moving_poles(const ChiFunction& chi, double half_width, int samples_per_side = 256);

// max |chi^2 + chi' + (lambda^2 - 1)/(y^2 + 1)^2 + (1/4 - s^2)/(y^2 + 1)| on
// the grid. Throws DomainError if a grid point lies within 0.05 of a pole.
double verify_riccati(const ChiFunction& chi, std::span<const double> grid, double lambda,
                      double s);

// `count` equally spaced points in [lo, hi] that keep a 0.05 margin from the
// moving poles.
std::vector<double> riccati_grid(const ChiFunction& chi, int count = 64, double lo = -5.0,
                                 double hi = 5.0);

// max |chi(-y) + chi(y)| / max |chi| on the grid.
double chi_parity_defect(const ChiFunction& chi, std::span<const double> grid);

// Every residue-side check for one constructed state.
ResidueReport probe_residues(const WavefunctionSpec& spec);

}  // namespace scarf
