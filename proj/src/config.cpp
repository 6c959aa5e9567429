#include "sitnikov/config.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace sitnikov {

PlanarConfiguration::PlanarConfiguration(std::vector<double> masses,
                                         std::vector<Vec2> positions, double tol)
    : masses_(std::move(masses)), positions_(std::move(positions)), tol_(tol) {
    const std::size_t n = masses_.size();
    if (n != positions_.size())
        throw std::invalid_argument("masses and positions must have equal length");
    if (n < 2) throw std::invalid_argument("need at least 2 bodies");
    if (!(tol_ >= 0.0)) throw std::invalid_argument("tol must be nonnegative");

    radii_.resize(n);
    Vec2 com{};
    for (std::size_t i = 0; i < n; ++i) {
        if (!(masses_[i] > 0.0))
            throw std::invalid_argument("mass " + std::to_string(i) +
                                        " must be strictly positive");
        total_mass_ += masses_[i];
        com += masses_[i] * positions_[i];
        radii_[i] = positions_[i].norm();
        max_radius_ = std::max(max_radius_, radii_[i]);
        if (radii_[i] <= tol_)
            throw std::invalid_argument("body " + std::to_string(i) +
                                        " coincides with the origin");
    }
    com = com * (1.0 / total_mass_);
    if (com.norm() > tol_ * std::max(1.0, max_radius_))
        throw std::invalid_argument("center of mass is not at the origin");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((positions_[i] - positions_[j]).norm() <= tol_)
                throw std::invalid_argument("bodies " + std::to_string(i) + " and " +
                                            std::to_string(j) + " collide");
}

double potential(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    double u = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            u += m[i] * m[j] / (q[i] - q[j]).norm();
    return u;
}

std::vector<Vec2> potential_gradient(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    const std::size_t n = m.size();
    std::vector<Vec2> grad(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            const Vec2 d = q[i] - q[j];
            const double r = d.norm();
            grad[j] += (m[i] * m[j] / (r * r * r)) * d;
        }
    }
    return grad;
}

double moment_of_inertia(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] * s[i] * s[i];
    return acc;
}

CCReport cc_residual(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    const std::size_t n = m.size();

    CCReport report;
    const auto grad = potential_gradient(config);

    // lambda minimizing sum_j |grad_j U + lambda m_j q_j|^2
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 mq = m[j] * q[j];
        num -= grad[j].dot(mq);
        den += mq.norm2();
    }
    report.lambda = num / den;

    report.residuals.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        report.residuals[j] = grad[j] + report.lambda * m[j] * q[j];
        report.max_residual_norm =
            std::max(report.max_residual_norm, report.residuals[j].norm());
        report.scale = std::max(report.scale, grad[j].norm());
    }
    report.is_central = report.max_residual_norm <= config.tol() * report.scale;
    return report;
}

RadiusGroups radius_groups(const PlanarConfiguration& config) {
    const auto& s = config.radii();
    const std::size_t n = s.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });

    RadiusGroups out;
    for (std::size_t k : order) {
        if (!out.groups.empty()) {
            RadiusGroup& g = out.groups.back();
            if (std::abs(s[k] - g.radius) <= config.tol() * std::max(1.0, g.radius)) {
                // running mean keeps the representative stable
                g.radius = (g.radius * static_cast<double>(g.indices.size()) + s[k]) /
                           static_cast<double>(g.indices.size() + 1);
                g.indices.push_back(k);
                continue;
            }
        }
        out.groups.push_back(RadiusGroup{s[k], {k}});
    }
    for (auto& g : out.groups) std::sort(g.indices.begin(), g.indices.end());
    return out;
}

BalanceReport is_balanced(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    const auto groups = radius_groups(config);

    BalanceReport report;
    report.balanced = true;
    for (const auto& g : groups.groups) {
        Vec2 weighted{};
        double group_mass = 0.0;
        for (std::size_t i : g.indices) {
            weighted += m[i] * q[i];
            group_mass += m[i];
        }
        const double norm = weighted.norm();
        report.group_weighted_norms.push_back(norm);
        if (norm > config.tol() * group_mass * g.radius) report.balanced = false;
    }
    return report;
}

PlanarConfiguration make_polygon(int n, double mass, double radius) {
    if (n < 2) throw std::invalid_argument("polygon needs n >= 2");
    if (!(mass > 0.0) || !(radius > 0.0))
        throw std::invalid_argument("mass and radius must be positive");
    std::vector<double> masses(static_cast<std::size_t>(n), mass);
    std::vector<Vec2> positions(static_cast<std::size_t>(n));
    Vec2 drift{};
    for (int j = 0; j < n; ++j) {
        const double a = 2.0 * M_PI * j / n;
        positions[static_cast<std::size_t>(j)] = {radius * std::cos(a),
                                                  radius * std::sin(a)};
        drift += positions[static_cast<std::size_t>(j)];
    }
    // remove the O(n*eps) trigonometric drift so the center of mass is exact
    drift = drift * (1.0 / n);
    for (auto& p : positions) p = p - drift;
    return {std::move(masses), std::move(positions)};
}

double mu_of_x(double x) {
    if (!(x > 0.0) || !(x < 1.0)) throw std::domain_error("mu_of_x needs x in (0,1)");
    const double x2 = x * x;
    const double x3 = x2 * x;
    const double x4 = x2 * x2;
    const double x5 = x4 * x;
    const double num = 8.0 * x5 - x4 + 8.0 * x3 + 2.0 * x2 - 1.0;
    const double den = (x - 1.0) * (x + 1.0) * (x5 - 9.0 * x3 + x2 - 1.0);
    if (std::abs(den) < 1e-300) throw std::domain_error("mu_of_x denominator vanishes");
    return -num / den;
}

double collinear_x_of_mu(double mu) {
    if (!(mu > 0.0) || !(mu < 1.0))
        throw std::domain_error("collinear family needs mu in (0,1)");
    // mu_of_x is strictly decreasing on (0,1)
    double lo = 1e-6;
    double hi = 1.0 - 1e-6;
    if (mu_of_x(lo) < mu || mu_of_x(hi) > mu)
        throw std::runtime_error("collinear_x_of_mu: bracket failure");
    for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mu_of_x(mid) > mu ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PlanarConfiguration make_collinear_cc(double mu) {
    const double x = collinear_x_of_mu(mu);
    std::vector<double> masses{mu, 1.0 - mu, 1.0 - mu, mu};
    std::vector<Vec2> positions{{-1.0, 0.0}, {-x, 0.0}, {x, 0.0}, {1.0, 0.0}};
    return {std::move(masses), std::move(positions)};
}

namespace {

// Vertical CC equation at q1=(0,y) after eliminating lambda through the
// horizontal equation at q2=(1,0); vanishes exactly at the CCr geometry.
double rhombus_residual(double y, double m1, double m2) {
    const double w = std::pow(1.0 + y * y, -1.5);
    const double lambda = 0.25 * m2 + 2.0 * m1 * w;
    return m1 * (-0.25 * m1 / (y * y) - 2.0 * m2 * y * w + lambda * y);
}

}  // namespace

PlanarConfiguration make_rhombus_cc(double m1, double m2) {
    if (!(m2 > 0.0) || !(m1 > m2))
        throw std::invalid_argument(
            "rhombus family needs m1 > m2 > 0 (m1 == m2 degenerates to the square)");

    constexpr int kScanPoints = 64;
    const double lo_end = 1e-6;
    const double hi_end = 1.0 - 1e-6;
    double lo = 0.0;
    double hi = 0.0;
    double prev_y = lo_end;
    double prev_g = rhombus_residual(prev_y, m1, m2);
    bool bracketed = false;
    for (int k = 1; k < kScanPoints; ++k) {
        const double y = lo_end + (hi_end - lo_end) * k / (kScanPoints - 1);
        const double g = rhombus_residual(y, m1, m2);
        if (prev_g == 0.0 || prev_g * g < 0.0) {
            lo = prev_y;
            hi = y;
            bracketed = true;
            break;
        }
        prev_y = y;
        prev_g = g;
    }
    if (!bracketed) throw std::runtime_error("make_rhombus_cc: no root in (0,1)");

    double glo = rhombus_residual(lo, m1, m2);
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = rhombus_residual(mid, m1, m2);
        if (glo * gm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    const double y = 0.5 * (lo + hi);

    std::vector<double> masses{m1, m2, m1, m2};
    std::vector<Vec2> positions{{0.0, y}, {1.0, 0.0}, {0.0, -y}, {-1.0, 0.0}};
    return {std::move(masses), std::move(positions)};
}

PlanarConfiguration scale_config(const PlanarConfiguration& config, double r, double mu) {
    if (!(r > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("scale factors must be positive");
    std::vector<double> masses = config.masses();
    std::vector<Vec2> positions = config.positions();
    for (auto& m : masses) m *= mu;
    for (auto& p : positions) p = p * r;
    return {std::move(masses), std::move(positions), config.tol()};
}

PlanarConfiguration rotate_config(const PlanarConfiguration& config, double angle) {
    std::vector<Vec2> positions = config.positions();
    for (auto& p : positions) p = p.rotated(angle);
    return {config.masses(), std::move(positions), config.tol()};
}

double restricted_cc_residual(const PlanarConfiguration& config, Vec2 p) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    Vec2 field{};
    double scale = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Vec2 d = q[i] - p;
        const double r2 = d.norm2();
        if (r2 == 0.0)
            throw std::invalid_argument("restricted point coincides with a body");
        field += (m[i] / (r2 * std::sqrt(r2))) * d;
        scale += m[i] / r2;
    }
    const double lambda = cc_residual(config).lambda;
    scale = std::max(scale, std::abs(lambda) * p.norm());
    return (field + lambda * p).norm() / scale;
}

}  // namespace sitnikov
