#include "scarf/qmf_probe.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

cplx circle_integral(const ChiFunction& chi, cplx center, double radius, int samples,
                     cplx* average = nullptr) {
    cplx sum{0.0, 0.0};
    cplx mean{0.0, 0.0};
    for (int j = 0; j < samples; ++j) {
        const cplx e = std::polar(1.0, 2.0 * pi * j / samples);
        const cplx f = chi.value(center + radius * e);
        sum += f * e;
        mean += f;
    }
    if (average != nullptr) *average = mean / static_cast<double>(samples);
    return radius * sum / static_cast<double>(samples);
}

double max_abs_root(const ChiFunction& chi) {
    double m = 0.0;
    for (double r : chi.moving_poles()) m = std::max(m, std::abs(r));
    return m;
}

}  // namespace

ChiFunction::ChiFunction(PolySpec poly, double b1)
    : poly_(std::move(poly)), b1_(b1), roots_(real_roots(poly_)) {}

ChiFunction::ChiFunction(const WavefunctionSpec& spec) : ChiFunction(spec.poly, spec.b1) {}

cplx ChiFunction::value(cplx y) const {
    const auto p = evaluate(poly_, y);
    return 2.0 * b1_ * y / (y * y + 1.0) + p.dp / p.p;
}

cplx ChiFunction::derivative(cplx y) const {
    const auto p = evaluate(poly_, y);
    const cplx w = y * y + 1.0;
    return 2.0 * b1_ * (1.0 - y * y) / (w * w) + (p.d2p * p.p - p.dp * p.dp) / (p.p * p.p);
}

double ChiFunction::value(double y) const {
    const auto p = evaluate(poly_, y);
    return 2.0 * b1_ * y / (y * y + 1.0) + p.dp / p.p;
}

double ChiFunction::derivative(double y) const {
    const auto p = evaluate(poly_, y);
    const double w = y * y + 1.0;
    return 2.0 * b1_ * (1.0 - y * y) / (w * w) + (p.d2p * p.p - p.dp * p.dp) / (p.p * p.p);
}

std::vector<cplx> ChiFunction::poles() const {
    std::vector<cplx> out{I, -I};
    for (double r : roots_) out.emplace_back(r, 0.0);
    return out;
}

cplx contour_residue(const ChiFunction& chi, cplx center, double radius, int samples) {
    if (!(radius > 0.0)) throw ContourError("contour radius must be positive");
    if (samples < 64 || !power_of_two(samples)) {
        throw ContourError("contour samples must be a power of two >= 64");
    }
    int near = 0;
    for (const cplx& p : chi.poles()) {
        const double d = std::abs(p - center);
        if (d >= 1.5 * radius) continue;
        if (d > 0.5 * radius) {
            throw ContourError("a pole lies within 1.5 radius of the center but not at it");
        }
        ++near;
    }
    if (near > 1) throw ContourError("more than one pole inside the contour");
    return circle_integral(chi, center, radius, samples);
}

InfinityResidue residue_at_infinity(const ChiFunction& chi, double radius, int samples) {
    if (radius < 10.0 * (1.0 + max_abs_root(chi))) {
        throw ContourError("contour at infinity must have radius >= 10 (1 + max |root|)");
    }
    if (samples < 64 || !power_of_two(samples)) {
        throw ContourError("contour samples must be a power of two >= 64");
    }
    cplx d0{};
    cplx d0_wide{};
    const cplx d1 = circle_integral(chi, 0.0, radius, samples, &d0);
    const cplx d1_wide = circle_integral(chi, 0.0, 2.0 * radius, samples, &d0_wide);
    if (std::abs(d1 - d1_wide) > 1e-10 * (1.0 + std::abs(d1))) {
        throw NumericError("residue at infinity changes when the radius doubles");
    }
    if (std::abs(d0) > 1e-10) {
        throw NumericError("analytic part d0 = " + std::to_string(std::abs(d0)) +
                           " does not vanish");
    }
    return {d1, d0};
}

int count_moving_poles(const ChiFunction& chi, double half_width, int samples_per_side) {
    if (half_width <= 2.0 * (1.0 + max_abs_root(chi))) {
        throw ContourError("rectangle half-width must exceed 2 (1 + max |root|)");
    }
    using rule = boost::math::quadrature::gauss<double, 20>;
    const int panels = std::max(1, samples_per_side / 20);
    constexpr double h = 0.5;
    const cplx corners[4] = {{-half_width, -h}, {half_width, -h}, {half_width, h}, {-half_width, h}};

    auto log_derivative = [&](cplx y) {
        const auto p = evaluate(chi.poly(), y);
        return p.dp / p.p;
    };

    cplx total{0.0, 0.0};
    for (int side = 0; side < 4; ++side) {
        const cplx from = corners[side];
        const cplx to = corners[(side + 1) % 4];
        const cplx step = (to - from) / static_cast<double>(panels);
        for (int k = 0; k < panels; ++k) {
            const cplx mid = from + (k + 0.5) * step;
            const cplx half = 0.5 * step;
            const auto& x = rule::abscissa();
            const auto& w = rule::weights();
            for (std::size_t i = 0; i < x.size(); ++i) {
                total += w[i] * half * (log_derivative(mid + x[i] * half) +
                                        log_derivative(mid - x[i] * half));
            }
        }
    }
    const cplx winding = total / (2.0 * pi * I);
    const double count = std::round(winding.real());
    if (std::abs(winding - cplx(count, 0.0)) > 1e-6) {
        throw ContourError("argument principle gave non-integer count " +
                           std::to_string(winding.real()));
    }
    return static_cast<int>(count);
}

double verify_riccati(const ChiFunction& chi, std::span<const double> grid, double lambda,
                      double s) {
    double worst = 0.0;
    for (double y : grid) {
        for (double r : chi.moving_poles()) {
            if (std::abs(y - r) < 0.05) {
                throw DomainError("Riccati grid point within 0.05 of a moving pole");
            }
        }
        const double w = y * y + 1.0;
        const double c = chi.value(y);
        const double lhs =
            c * c + chi.derivative(y) + (lambda * lambda - 1.0) / (w * w) + (0.25 - s * s) / w;
        worst = std::max(worst, std::abs(lhs));
    }
    return worst;
}

std::vector<double> riccati_grid(const ChiFunction& chi, int count, double lo, double hi) {
    std::vector<double> grid;
    for (int i = 0; i < count; ++i) {
        const double y = lo + (hi - lo) * (i + 0.5) / count;
        const bool clear = std::none_of(chi.moving_poles().begin(), chi.moving_poles().end(),
                                        [&](double r) { return std::abs(y - r) < 0.05; });
        if (clear) grid.push_back(y);
    }
    return grid;
}

double chi_parity_defect(const ChiFunction& chi, std::span<const double> grid) {
    double worst = 0.0;
    double scale = 0.0;
    for (double y : grid) {
        const double plus = chi.value(y);
        worst = std::max(worst, std::abs(chi.value(-y) + plus));
        scale = std::max(scale, std::abs(plus));
    }
    return scale > 0.0 ? worst / scale : worst;
}

ResidueReport probe_residues(const WavefunctionSpec& spec) {
    const ChiFunction chi(spec);
    ResidueReport report;

    // Real roots are at least 1 from +-i, and the two fixed poles are 2 apart.
    report.b1_measured = contour_residue(chi, I, 0.4);
    report.b1_prime_measured = contour_residue(chi, -I, 0.4);

    const double extent = 1.0 + max_abs_root(chi);
    const auto inf = residue_at_infinity(chi, 10.0 * extent);
    report.d1_measured = inf.d1;
    report.d0_measured = inf.d0;
    report.moving_pole_count = count_moving_poles(chi, 2.5 * extent);
    report.sum_rule_defect = std::abs(report.b1_measured + report.b1_prime_measured +
                                      static_cast<double>(report.moving_pole_count) -
                                      report.d1_measured);

    const auto grid = riccati_grid(chi);
    report.riccati_residual = verify_riccati(chi, grid, spec.line.lambda, spec.params.s());
    report.parity_defect = chi_parity_defect(chi, grid);
    return report;
}

}  // namespace scarf
