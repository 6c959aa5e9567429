#include "sitnikov/sync.hpp"

#include <cmath>
#include <stdexcept>

namespace sitnikov {

namespace {

double lambda_sum_bound(const PlanarConfiguration& config) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += m[i] / (s[i] * s[i] * s[i]);
    return acc;
}

double apex_weight_sum(const PlanarConfiguration& config, double c) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double d2 = s[i] * s[i] + c * c;
        acc += m[i] / (d2 * std::sqrt(d2));
    }
    return acc;
}

// Solve sum m_i (s_i^2+c^2)^{-3/2} = lambda for c > 0; requires
// lambda < sum m_i/s_i^3 so a positive root exists.
double solve_pyramid_height(const PlanarConfiguration& config, double lambda) {
    double hi = 1.0;
    while (apex_weight_sum(config, hi) >= lambda) {
        hi *= 2.0;
        if (hi > 1e150) throw std::runtime_error("pyramid height: bracket failure");
    }
    // bisect in w = c^2; the weight sum is strictly decreasing in w
    double lo_w = 0.0;
    double hi_w = hi * hi;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo_w + hi_w);
        const double val = apex_weight_sum(config, std::sqrt(mid));
        if (std::abs(val - lambda) <= 1e-13 * lambda) return std::sqrt(mid);
        (val > lambda ? lo_w : hi_w) = mid;
        if (hi_w - lo_w <= 1e-17 * std::max(1.0, hi_w)) break;
    }
    const double c = std::sqrt(0.5 * (lo_w + hi_w));
    if (std::abs(apex_weight_sum(config, c) - lambda) > 1e-12 * lambda)
        throw std::runtime_error("pyramid height: residual tolerance not met");
    return c;
}

}  // namespace

SyncReport sync_check(const PlanarConfiguration& config) {
    const CCReport cc = cc_residual(config);
    if (!cc.is_central)
        throw std::domain_error("sync_check: configuration is not central");

    SyncReport report;
    report.lambda = cc.lambda;
    report.lambda_bound = lambda_sum_bound(config);
    report.lhs = potential(config);
    report.rhs = report.lambda_bound * moment_of_inertia(config);
    report.holds = report.lhs < report.rhs;

    // the two formulations differ only by the identity lambda = U/I; disagreement
    // outside the near-equality band means the inputs are inconsistent
    const bool holds_lambda = report.lambda < report.lambda_bound;
    if (holds_lambda != report.holds &&
        std::abs(report.lhs - report.rhs) > 1e-9 * std::max(report.lhs, report.rhs))
        throw std::runtime_error("sync_check: inequality formulations disagree");

    if (report.holds) report.c = solve_pyramid_height(config, report.lambda);
    return report;
}

double verify_pcc(const PlanarConfiguration& config, double c) {
    const auto& m = config.masses();
    const auto& q = config.positions();
    const auto& s = config.radii();
    const double lambda = cc_residual(config).lambda;

    Vec2 planar{};
    double axial = 0.0;
    double planar_scale = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double d2 = s[i] * s[i] + c * c;
        const double w = m[i] / (d2 * std::sqrt(d2));
        planar += w * q[i];
        axial += w;
        planar_scale += w * s[i];
    }
    const double planar_residual = planar.norm() / planar_scale;
    const double axial_residual = std::abs(axial - lambda) / lambda;
    return std::max(planar_residual, axial_residual);
}

double polygon_sum(int n) {
    if (n < 2) throw std::invalid_argument("polygon_sum: n >= 2");
    double sum = 0.0;
    double comp = 0.0;  // Kahan compensation
    for (int j = 1; j < n; ++j) {
        const double term = 1.0 / std::sin(j * M_PI / n);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / n;
}

double polygon_lower_bound(double x) {
    if (!(x > 0.0) || !(x < M_PI))
        throw std::domain_error("polygon_lower_bound: x in (0, pi)");
    return std::log((1.0 + std::cos(x)) / (1.0 - std::cos(x))) / M_PI;
}

PolygonScanResult polygon_scan(int n_max) {
    if (n_max < 2) throw std::invalid_argument("polygon_scan: n_max >= 2");
    PolygonScanResult result;
    result.bound_decreasing = true;
    double prev_bound = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        PolygonScanRow row;
        row.n = n;
        row.sum = polygon_sum(n);
        row.holds = row.sum < 4.0;
        row.bound = polygon_lower_bound(M_PI / n);
        if (row.sum < row.bound - 1e-12)
            throw std::runtime_error("polygon_scan: lower bound exceeded the sum");
        if (n > 2 && row.bound < prev_bound) result.bound_decreasing = false;
        prev_bound = row.bound;
        if (row.holds) result.boundary = n;
        result.rows.push_back(row);
    }
    return result;
}

double moulton_quintic(double r, double mu) {
    return 6.0 * std::pow(r, 5) + (16.0 - mu) * std::pow(r, 4) +
           (14.0 - 2.0 * mu) * std::pow(r, 3) - (mu + 5.0) * r * r -
           (2.0 * mu + 7.0) * r - mu - 3.0;
}

double moulton_root(double mu) {
    // p(0,mu) = -mu-3 < 0 and p(1,mu) = 21-7mu > 0 for mu < 3
    double lo = 0.0;
    double hi = 1.0;
    if (!(moulton_quintic(lo, mu) < 0.0) || !(moulton_quintic(hi, mu) > 0.0))
        throw std::domain_error("moulton_root: no sign change on (0,1)");
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        (moulton_quintic(mid, mu) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PlanarConfiguration make_euler_collinear(double mu) {
    if (!(mu >= 0.0) || !(mu <= 1.0))
        throw std::domain_error("make_euler_collinear: mu in [0,1]");
    const double r = moulton_root(mu);
    const double center = (mu + r + 3.0) / 7.0;
    std::vector<double> masses{4.0 - mu, 2.0 + mu, 1.0};
    std::vector<Vec2> positions{
        {0.0 - center, 0.0}, {1.0 - center, 0.0}, {1.0 + r - center, 0.0}};
    return {std::move(masses), std::move(positions)};
}

double euler_field_numerator(double mu, double x) {
    const double r = moulton_root(mu);
    const double a = 1.0 - x;
    const double b = r + 1.0 - x;
    return -(4.0 - mu) * a * a * b * b + (mu + 2.0) * x * x * b * b +
           x * x * a * a;
}

double euler_field(double mu, double x) {
    const double r = moulton_root(mu);
    const double a = 1.0 - x;
    const double b = r + 1.0 - x;
    const double den = x * x * a * a * b * b;
    if (den <= 0.0) throw std::domain_error("euler_field: x at a pole");
    return euler_field_numerator(mu, x) / den;
}

EulerEquilibrium euler_equilibrium() {
    const auto field_at_center = [](double mu) {
        const double r = moulton_root(mu);
        return euler_field(mu, (mu + r + 3.0) / 7.0);
    };

    double lo = 1e-9;
    double hi = 1.0 - 1e-9;
    const double f_lo = field_at_center(lo);
    if (!(f_lo * field_at_center(hi) < 0.0))
        throw std::runtime_error("euler_equilibrium: no sign change on (0,1)");
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        (field_at_center(mid) * f_lo > 0.0 ? lo : hi) = mid;
    }

    EulerEquilibrium out;
    out.mu = 0.5 * (lo + hi);
    out.r = moulton_root(out.mu);
    out.center = (out.mu + out.r + 3.0) / 7.0;
    out.field_residual = std::abs(field_at_center(out.mu));
    return out;
}

}  // namespace sitnikov
