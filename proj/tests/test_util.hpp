#pragma once

// Shared helpers for the test suites: an independent finite-difference oracle
// for the potential gradient, and a deterministic sampler of balanced
// configurations built from the n <= 4 families.

#include <cmath>
#include <random>
#include <vector>

#include "sitnikov/config.hpp"

namespace sitnikov::testutil {

/// U evaluated from raw arrays, independent of PlanarConfiguration.
inline double potential_raw(const std::vector<double>& m, const std::vector<Vec2>& q) {
    double u = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const double dx = q[i].x - q[j].x;
            const double dy = q[i].y - q[j].y;
            u += m[i] * m[j] / std::sqrt(dx * dx + dy * dy);
        }
    return u;
}

/// Fourth-order central finite differences of U with respect to body j.
inline Vec2 fd_gradient(const std::vector<double>& m, std::vector<Vec2> q,
                        std::size_t j, double h = 1e-4) {
    const auto stencil = [&](double Vec2::*comp) {
        const double orig = q[j].*comp;
        q[j].*comp = orig + 2.0 * h;
        const double up2 = potential_raw(m, q);
        q[j].*comp = orig + h;
        const double up1 = potential_raw(m, q);
        q[j].*comp = orig - h;
        const double dn1 = potential_raw(m, q);
        q[j].*comp = orig - 2.0 * h;
        const double dn2 = potential_raw(m, q);
        q[j].*comp = orig;
        return (-up2 + 8.0 * up1 - 8.0 * dn1 + dn2) / (12.0 * h);
    };
    return {stencil(&Vec2::x), stencil(&Vec2::y)};
}

/// Deterministic sample of balanced central configurations with n <= 4,
/// drawn from the polygon, rhombus and collinear families plus random
/// scalings and rotations.
inline std::vector<PlanarConfiguration> sample_balanced_configs(std::size_t count,
                                                                unsigned seed = 42) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<PlanarConfiguration> out;
    while (out.size() < count) {
        const int family = static_cast<int>(rng() % 3);
        PlanarConfiguration base = [&] {
            switch (family) {
                case 0:
                    return make_polygon(2 + static_cast<int>(rng() % 3), 1.0, 1.0);
                case 1:
                    return make_rhombus_cc(1.0 + 0.2 + 3.0 * unit(rng), 1.0);
                default:
                    return make_collinear_cc(0.05 + 0.9 * unit(rng));
            }
        }();
        const double r = std::exp(std::log(0.5) + std::log(4.0) * unit(rng));
        const double mu = std::exp(std::log(0.5) + std::log(4.0) * unit(rng));
        out.push_back(rotate_config(scale_config(base, r, mu), 2.0 * M_PI * unit(rng)));
    }
    return out;
}

}  // namespace sitnikov::testutil
