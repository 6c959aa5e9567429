#pragma once

#include <optional>
#include <vector>

#include "sitnikov/config.hpp"

namespace sitnikov {

/// Verdict on existence of a synchronous axial solution, with both sides of
/// the governing inequality U < (sum m_i/s_i^3)(sum m_i s_i^2).
struct SyncReport {
    double lhs = 0.0;           ///< U = sum_{i<j} m_i m_j / r_ij
    double rhs = 0.0;           ///< (sum m_i/s_i^3)(sum m_i s_i^2)
    bool holds = false;         ///< lhs < rhs
    double lambda = 0.0;        ///< CC constant of the configuration
    double lambda_bound = 0.0;  ///< sum m_i/s_i^3
    std::optional<double> c;    ///< pyramid height, present iff holds
};

/// Decide existence of a synchronous solution for a balanced central
/// configuration; throws std::domain_error on non-central input.
SyncReport sync_check(const PlanarConfiguration& config);

/// Relative residual of the pyramidal-CC condition for a massless apex at
/// height c: the axial equation sum m_i (s_i^2+c^2)^{-3/2} = lambda and the
/// planar equation sum m_i q_i (s_i^2+c^2)^{-3/2} = 0.
double verify_pcc(const PlanarConfiguration& config, double c);

/// (1/n) sum_{j=1}^{n-1} 1/sin(j*pi/n), compensated summation.
double polygon_sum(int n);

/// Analytic lower bound f(x) = (1/pi) log((1+cos x)/(1-cos x)) of the polygon
/// sum at x = pi/n; decreasing on (0, pi/2).
double polygon_lower_bound(double x);

struct PolygonScanRow {
    int n = 0;
    double sum = 0.0;
    bool holds = false;   ///< sum < 4
    double bound = 0.0;   ///< f(pi/n)
};

struct PolygonScanResult {
    int boundary = 0;  ///< largest n <= n_max with sum < 4
    std::vector<PolygonScanRow> rows;
    bool bound_decreasing = false;  ///< f decreasing in x over the sampled range
};

/// Scan n = 2..n_max for the synchronous-solution inequality on the regular
/// equal-mass polygon; the boundary lands at 472.
PolygonScanResult polygon_scan(int n_max);

/// Moulton quintic p(r, mu) for the three-body collinear configuration with
/// masses (4-mu, 2+mu, 1).
double moulton_quintic(double r, double mu);

/// The unique positive root of the Moulton quintic, in (0,1) for mu in (0,1).
double moulton_root(double mu);

/// Three-body Euler collinear central configuration with masses
/// (4-mu, 2+mu, 1), shifted so the center of mass sits at the origin.
/// Central but not balanced.
PlanarConfiguration make_euler_collinear(double mu);

/// Gravitational field of the three collinear primaries at abscissa x, in the
/// unshifted coordinates q = (0, 1, 1+r(mu)); evaluated through its numerator
/// over a common positive denominator.
double euler_field(double mu, double x);

/// Numerator of euler_field on the common denominator x^2 (1-x)^2 (r+1-x)^2.
double euler_field_numerator(double mu, double x);

struct EulerEquilibrium {
    double mu = 0.0;          ///< mass parameter placing the equilibrium at the center of mass
    double r = 0.0;           ///< Moulton root at mu
    double center = 0.0;      ///< center of mass (mu + r + 3)/7
    double field_residual = 0.0;  ///< |f(C(mu))|
};

/// Solve f(C(mu)) = 0 on mu in (0,1): the configuration whose center of mass
/// is a rest point for a massless particle, realizing a 4-point CC with one
/// zero mass.
EulerEquilibrium euler_equilibrium();

}  // namespace sitnikov
