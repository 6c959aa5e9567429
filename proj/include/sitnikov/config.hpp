#pragma once

#include <cstddef>
#include <vector>

#include "sitnikov/vec.hpp"

namespace sitnikov {

/// Default relative tolerance for validation, radius grouping and residual
/// acceptance.
inline constexpr double kDefaultTol = 1e-9;

/**
 * Masses and planar positions of the n primaries.
 *
 * Construction validates the invariants and throws std::invalid_argument on
 * violation:
 *   - n >= 2, all masses strictly positive,
 *   - center of mass at the origin (within tol),
 *   - collisionless: |q_i| > tol and |q_i - q_j| > tol for i != j.
 *
 * Instances are immutable; all library operations are pure functions of them.
 */
class PlanarConfiguration {
public:
    PlanarConfiguration(std::vector<double> masses, std::vector<Vec2> positions,
                        double tol = kDefaultTol);

    std::size_t size() const { return masses_.size(); }
    const std::vector<double>& masses() const { return masses_; }
    const std::vector<Vec2>& positions() const { return positions_; }
    double tol() const { return tol_; }
    double total_mass() const { return total_mass_; }

    /// Distances s_i = |q_i| from the origin.
    const std::vector<double>& radii() const { return radii_; }
    double max_radius() const { return max_radius_; }

private:
    std::vector<double> masses_;
    std::vector<Vec2> positions_;
    double tol_;
    double total_mass_ = 0.0;
    std::vector<double> radii_;
    double max_radius_ = 0.0;
};

/// Central-configuration residual report: residuals[j] = grad_j U + lambda m_j q_j.
struct CCReport {
    double lambda = 0.0;
    std::vector<Vec2> residuals;
    double max_residual_norm = 0.0;
    double scale = 0.0;  ///< largest per-body gradient magnitude
    bool is_central = false;
};

struct RadiusGroup {
    double radius = 0.0;  ///< representative radius (group mean)
    std::vector<std::size_t> indices;
};

/// Partition of bodies into maximal groups of equal radius, ascending.
struct RadiusGroups {
    std::vector<RadiusGroup> groups;
};

struct BalanceReport {
    bool balanced = false;
    /// |sum_{i in F_r} m_i q_i| per radius group, same order as radius_groups.
    std::vector<double> group_weighted_norms;
};

/// Newtonian potential U = sum_{i<j} m_i m_j / r_ij.
double potential(const PlanarConfiguration& config);

/// Per-body gradients grad_j U.
std::vector<Vec2> potential_gradient(const PlanarConfiguration& config);

/// Moment of inertia sum_i m_i s_i^2.
double moment_of_inertia(const PlanarConfiguration& config);

/// Least-squares lambda over all n equations plus per-body residuals.
CCReport cc_residual(const PlanarConfiguration& config);

/// Group bodies by distance from the origin (relative tolerance tol*max(1,r)).
RadiusGroups radius_groups(const PlanarConfiguration& config);

/// True iff every radius group has weighted center of mass at the origin.
BalanceReport is_balanced(const PlanarConfiguration& config);

/// Regular n-gon of equal masses; balanced and central for every n >= 2.
PlanarConfiguration make_polygon(int n, double mass = 1.0, double radius = 1.0);

/// Closed-form mu(x) for the collinear 4-body family with positions
/// (-1,-x,x,1) and masses (mu,1-mu,1-mu,mu); strictly decreasing on (0,1).
double mu_of_x(double x);

/// Inverse of mu_of_x by bisection on (0,1).
double collinear_x_of_mu(double mu);

/// Collinear 4-body central configuration (CCcl family), mu in (0,1).
PlanarConfiguration make_collinear_cc(double mu);

/// Rhombus central configuration (CCr family) with q1=-q3=(0,y), q2=-q4=(1,0)
/// and masses (m1,m2,m1,m2); requires m1 > m2 > 0 and returns y in (0,1).
PlanarConfiguration make_rhombus_cc(double m1, double m2);

/// Positions scaled by r, masses by mu; lambda rescales as lambda*mu/r^3.
PlanarConfiguration scale_config(const PlanarConfiguration& config, double r, double mu);

/// All positions rotated by a common angle about the origin.
PlanarConfiguration rotate_config(const PlanarConfiguration& config, double angle);

/// Relative residual of the restricted (zero-mass) CC condition
/// field(p) + lambda p = 0 for a massless point at p in the plane.
double restricted_cc_residual(const PlanarConfiguration& config, Vec2 p);

}  // namespace sitnikov
