#include "sitnikov/period.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sitnikov/dynamics.hpp"

namespace sitnikov {

double t_min(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] / (s[i] * s[i] * s[i]);
    return 2.0 * M_PI / std::sqrt(acc);
}

namespace {

// Regularized integrand f(z, z_E) of the period integral; bounded and smooth
// through the turning point.
double regularized_integrand(const PlanarConfiguration& config, double z, double z_e) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double a = s[i] * s[i] + z * z;
        const double b = s[i] * s[i] + z_e * z_e;
        const double sa = std::sqrt(a);
        const double sb = std::sqrt(b);
        acc += m[i] / (sa * sb * (sa + sb));
    }
    return 1.0 / std::sqrt(acc);
}

// T0 via Gauss-Chebyshev (first kind) on the even integrand: the N positive
// nodes of the 2N-point rule over (-1,1) folded onto [0,1].
double chebyshev_period(const PlanarConfiguration& config, double z_e, int nodes) {
    double sum = 0.0;
    for (int k = 1; k <= nodes; ++k) {
        const double u = std::cos((2.0 * k - 1.0) * M_PI / (4.0 * nodes));
        sum += regularized_integrand(config, z_e * u, z_e);
    }
    const double integral = M_PI / (2.0 * nodes) * sum;
    return std::pow(2.0, 1.5) * integral;
}

}  // namespace

PeriodResult period_of_energy(const PlanarConfiguration& config, double E, int nodes) {
    const double e_min = energy_min(config);
    if (!(E > e_min) || !(E < 0.0))
        throw std::domain_error("period_of_energy: E must lie strictly in (E_min, 0)");
    if (nodes < 2) throw std::invalid_argument("period_of_energy: nodes >= 2");

    PeriodResult result;
    result.E = E;
    result.quadrature_nodes = nodes;
    result.z_E = turning_point(config, E);

    if (result.z_E < 1e-8) {
        // amplitude below cancellation range: integrand is the constant limit
        // (sum m_i/(2 s_i^3))^{-1/2}, whose integral is exactly t_min
        result.T0 = t_min(config);
        result.est_error = 0.0;
        return result;
    }

    result.T0 = chebyshev_period(config, result.z_E, nodes);
    result.est_error = std::abs(chebyshev_period(config, result.z_E, 2 * nodes) -
                                result.T0);
    return result;
}

double energy_of_period(const PlanarConfiguration& config, double T0_target) {
    const double floor = t_min(config);
    if (!(T0_target > floor)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "energy_of_period: axial periods fill the open interval (T_min, inf); "
               "target " << T0_target << " does not exceed T_min = " << floor;
        throw std::domain_error(msg.str());
    }

    const double e_min = energy_min(config);
    double lo = e_min * (1.0 - 1e-12);       // T0 near T_min
    double hi = -std::abs(e_min) * 1e-14;    // T0 arbitrarily large
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double T0 = period_of_energy(config, mid).T0;
        if (std::abs(T0 - T0_target) <= 1e-10 * T0_target) return mid;
        (T0 < T0_target ? lo : hi) = mid;
        if (hi - lo <= 1e-17 * std::abs(e_min)) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<CatalogEntry> periodic_solution_catalog(
    const PlanarConfiguration& config, const std::vector<std::pair<long, long>>& ratios,
    double T) {
    if (!(T > 0.0)) throw std::invalid_argument("catalog: T must be positive");
    const double floor = t_min(config);

    std::vector<CatalogEntry> entries;
    for (const auto& [l, m] : ratios) {
        if (l <= 0 || m <= 0)
            throw std::invalid_argument("catalog: rationals must be positive");
        const double axial = T * static_cast<double>(l) / static_cast<double>(m);
        if (axial <= floor) continue;
        CatalogEntry entry;
        entry.l = l;
        entry.m = m;
        entry.axial_period = axial;
        entry.E = energy_of_period(config, axial);
        entry.system_period = static_cast<double>(l) * T;
        entries.push_back(entry);
    }
    return entries;
}

}  // namespace sitnikov
