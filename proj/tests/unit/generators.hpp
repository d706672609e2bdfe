#pragma once

#include <random>
#include <vector>

// Fixed-seed samplers for the property tests.
namespace gen {

inline std::vector<double> uniform(double lo, double hi, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(count);
    for (auto& v : out) v = dist(rng);
    return out;
}

// Couplings for each regime, kept away from the boundaries.
inline std::vector<double> bound_couplings(int count = 12, unsigned seed = 11) {
    auto s = uniform(0.55, 4.0, count, seed);
    s.push_back(2.0);
    s.push_back(0.9);
    return s;
}

inline std::vector<double> band_couplings(int count = 12, unsigned seed = 17) {
    auto s = uniform(0.05, 0.45, count, seed);
    s.push_back(0.4);
    s.push_back(0.1);
    s.push_back(0.25);
    return s;
}

}  // namespace gen
