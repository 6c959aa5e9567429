#pragma once

#include <utility>
#include <vector>

#include "sitnikov/config.hpp"

namespace sitnikov {

struct PeriodResult {
    double T0 = 0.0;
    double E = 0.0;
    double z_E = 0.0;
    int quadrature_nodes = 0;
    double est_error = 0.0;  ///< node-doubling difference
};

/// Infimum of axial periods, 2*pi*(sum_i m_i/s_i^3)^{-1/2}; also the
/// linearized oscillation period at the equilibrium.
double t_min(const PlanarConfiguration& config);

/// Exact axial period by Gauss-Chebyshev quadrature of the regularized
/// turning-point integral; E strictly inside (E_min, 0).
PeriodResult period_of_energy(const PlanarConfiguration& config, double E,
                              int nodes = 128);

/// Inversion T0 -> E by bisection on the strictly increasing period map;
/// throws std::domain_error when target <= t_min (no solution exists).
double energy_of_period(const PlanarConfiguration& config, double T0_target);

struct CatalogEntry {
    long l = 0;
    long m = 0;
    double axial_period = 0.0;   ///< T*l/m
    double E = 0.0;
    double system_period = 0.0;  ///< l*T
};

/// Energies whose axial period is T*l/m for each admissible rational l/m;
/// rationals with T*l/m <= t_min are skipped.
std::vector<CatalogEntry> periodic_solution_catalog(
    const PlanarConfiguration& config, const std::vector<std::pair<long, long>>& ratios,
    double T);

}  // namespace sitnikov
