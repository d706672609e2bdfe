#pragma once

#include <vector>

#include "scarf/polynomial.hpp"
#include "scarf/potential.hpp"
#include "scarf/qhj_spectrum.hpp"

namespace scarf {

// Closed-form eigenfunction
//
//     psi(x) = norm * (y^2 + 1)^(b1 - 1/2) P_n(y),   y = cot(pi x / a),
//
// with b1 = (1 - lambda)/2, so that (y^2 + 1)^(b1 - 1/2) = |sin(pi x / a)|^lambda.
// Values carry no i^n phase.
struct WavefunctionSpec {
    PotentialParams params;
    SpectrumLine line;
    PolySpec poly;
    double b1 = 0.0;
    double norm = 1.0;
    long cell_index = 0;
};

enum class Parity { Even, Odd };

struct ParityReport {
    Parity parity = Parity::Even;
    // max |psi(a/2 + u) -+ psi(a/2 - u)| / max |psi| for the reported parity.
    double defect = 0.0;
};

struct PsiEvaluation {
    double value = 0.0;
    bool on_boundary = false;
};

struct PsiDerivatives {
    double psi = 0.0;
    double dpsi = 0.0;
    double d2psi = 0.0;
};

struct WavefunctionSample {
    double x = 0.0;
    double potential = 0.0;
    double psi = 0.0;
    double psi_squared = 0.0;
};

// Throws ConstructionError when line does not belong to params.
WavefunctionSpec build_wavefunction(const PotentialParams& params, const SpectrumLine& line,
                                    long cell_index = 0);

// Normalised psi(x). Band-edge and free-particle states are a-periodic;
// bound states live in their own cell and throw DomainError elsewhere.
// Lattice points return 0 with on_boundary set.
PsiEvaluation eval_psi_checked(const WavefunctionSpec& spec, double x);
double eval_psi(const WavefunctionSpec& spec, double x);

// Analytic first and second x-derivatives. Throws SingularityError on the
// lattice.
PsiDerivatives eval_psi_derivatives(const WavefunctionSpec& spec, double x);

// -psi''/(2m) + V psi - E psi at x.
double schrodinger_residual(const WavefunctionSpec& spec, double x);

// max |residual| / (|E| max |psi|) over `points` interior points of the cell
// staying `margin` (in units of a) away from each wall.
double max_schrodinger_residual(const WavefunctionSpec& spec, int points = 200,
                                double margin = 1e-3);

// Integral of psi^2 over one period by graded adaptive Gauss-Kronrod.
double norm_integral(const WavefunctionSpec& spec);

// Sign changes of psi on a uniform midpoint grid of the cell. Throws
// NumericError when an interior sample is too small to resolve its sign.
int count_nodes(const WavefunctionSpec& spec, int samples = 1024);

// Node locations refined by bisection.
std::vector<double> node_positions(const WavefunctionSpec& spec, int samples = 1024);

// Least-squares slope of log|psi| against log x on [1e-5 a, 1e-3 a] from the
// left wall of the cell.
double boundary_exponent(const WavefunctionSpec& spec);

// lambda - n, i.e. 1/2 + s for bound states and upper edges, 1/2 - s for
// lower edges.
double expected_boundary_exponent(const WavefunctionSpec& spec);

ParityReport parity(const WavefunctionSpec& spec);

// `samples` rows across the cell, inset by a / (10 samples) from each wall.
std::vector<WavefunctionSample> sample_wavefunction(const WavefunctionSpec& spec, int samples);

}  // namespace scarf
