#include "sitnikov/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dopri5.hpp"

namespace sitnikov {

double axial_acceleration(const PlanarConfiguration& config, double z) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double d2 = s[i] * s[i] + z * z;
        acc -= m[i] * z / (d2 * std::sqrt(d2));
    }
    return acc;
}

double axial_potential(const PlanarConfiguration& config, double z) {
    const auto& m = config.masses();
    const auto& s = config.radii();
    double pot = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        pot -= m[i] / std::sqrt(s[i] * s[i] + z * z);
    return pot;
}

double energy(const PlanarConfiguration& config, const AxialState& state) {
    return 0.5 * state.v * state.v + axial_potential(config, state.z);
}

double energy_min(const PlanarConfiguration& config) {
    return axial_potential(config, 0.0);
}

namespace {

constexpr double kParabolicWindow = 1e-10;

MotionClass classify_scaled(double E, double e_min, double scale, double tol) {
    if (E < e_min - tol * std::abs(e_min))
        throw std::domain_error("classify: energy below E_min is unreachable");
    if (std::abs(E - e_min) <= kParabolicWindow * std::abs(e_min))
        return MotionClass::Equilibrium;
    if (std::abs(E) <= kParabolicWindow * scale) return MotionClass::Parabolic;
    if (E > 0.0) return MotionClass::Hyperbolic;
    return MotionClass::Periodic;
}

}  // namespace

MotionClass classify(const PlanarConfiguration& config, double E) {
    const double e_min = energy_min(config);
    return classify_scaled(E, e_min, std::abs(e_min), config.tol());
}

EnergyLevel classify_state(const PlanarConfiguration& config, const AxialState& state) {
    const double kinetic = 0.5 * state.v * state.v;
    const double pot = axial_potential(config, state.z);
    EnergyLevel level;
    level.E = kinetic + pot;
    level.E_min = energy_min(config);
    level.motion = classify_scaled(level.E, level.E_min,
                                   std::abs(kinetic) + std::abs(pot), config.tol());
    return level;
}

double turning_point(const PlanarConfiguration& config, double E) {
    const double e_min = energy_min(config);
    if (!(E > e_min) || !(E < 0.0))
        throw std::domain_error("turning_point: E must lie in (E_min, 0)");

    // Solve in w = z^2, where W(w) = sum m_i (s_i^2+w)^{-1/2} is strictly
    // decreasing with nonvanishing slope at w = 0.
    const auto& m = config.masses();
    const auto& s = config.radii();
    const auto w_of = [&](double w) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i)
            acc += m[i] / std::sqrt(s[i] * s[i] + w);
        return acc;
    };
    const auto dw_of = [&](double w) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i)
            acc -= 0.5 * m[i] * std::pow(s[i] * s[i] + w, -1.5);
        return acc;
    };

    const double target = -E;
    double lo = 0.0;
    double hi = 1.0;
    while (w_of(hi) > target) {
        hi *= 4.0;
        if (hi > 1e300) throw std::runtime_error("turning_point: bracket failure");
    }

    double w = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fw = w_of(w) - target;
        if (std::abs(fw) <= 1e-12 * std::abs(E) && it > 0) break;
        (fw > 0.0 ? lo : hi) = w;
        const double wn = w - fw / dw_of(w);
        w = (wn > lo && wn < hi) ? wn : 0.5 * (lo + hi);
    }
    if (std::abs(w_of(w) - target) > 1e-12 * std::abs(E))
        throw std::runtime_error("turning_point: residual tolerance not met");
    return std::sqrt(w);
}

namespace {

struct AxialRhs {
    const PlanarConfiguration* config;
    void operator()(double, const detail::StateN<2>& y, detail::StateN<2>& dydt) const {
        dydt[0] = y[1];
        dydt[1] = axial_acceleration(*config, y[0]);
    }
};

}  // namespace

Trajectory integrate_axial(const PlanarConfiguration& config, AxialState initial,
                           double t_end, const IntegrateOptions& opts) {
    if (!std::isfinite(initial.z) || !std::isfinite(initial.v) ||
        !std::isfinite(initial.t) || !std::isfinite(t_end))
        throw std::invalid_argument("integrate_axial: nonfinite input");
    if (t_end < initial.t)
        throw std::invalid_argument("integrate_axial: t_end before initial time");

    Trajectory traj;
    const double e0 = energy(config, initial);
    traj.samples.push_back(initial);

    detail::Dopri5<2, AxialRhs> stepper(AxialRhs{&config}, {initial.z, initial.v},
                                        initial.t, opts.rtol, opts.atol);
    double next_sample = opts.sample_dt > 0.0 ? initial.t + opts.sample_dt : 0.0;
    const double t_eps = 1e-14 * std::max(1.0, std::abs(t_end));

    auto record = [&](const AxialState& st) {
        traj.samples.push_back(st);
        traj.energy_drift =
            std::max(traj.energy_drift, std::abs(energy(config, st) - e0));
    };

    for (std::size_t n = 0; n < opts.max_steps; ++n) {
        if (t_end - stepper.t() <= t_eps) break;
        stepper.clamp_to(t_end);
        stepper.step();

        if (opts.sample_dt > 0.0) {
            while (next_sample <= stepper.t() + t_eps && next_sample <= t_end + t_eps) {
                const double tq = std::min(next_sample, stepper.t());
                record({stepper.dense_at(tq, 0), stepper.dense_at(tq, 1), tq});
                next_sample += opts.sample_dt;
            }
        } else {
            record({stepper.y()[0], stepper.y()[1], stepper.t()});
        }

        if (opts.escape_z > 0.0 && std::abs(stepper.y()[0]) >= opts.escape_z) {
            if (opts.sample_dt > 0.0)
                record({stepper.y()[0], stepper.y()[1], stepper.t()});
            traj.escaped = true;
            return traj;
        }
    }
    if (t_end - stepper.t() > t_eps)
        throw std::runtime_error("integrate_axial: max_steps exceeded");

    if (opts.sample_dt > 0.0 && traj.samples.back().t < t_end - t_eps)
        record({stepper.y()[0], stepper.y()[1], stepper.t()});
    return traj;
}

Trajectory integrate_axial_leapfrog(const PlanarConfiguration& config,
                                    AxialState initial, double t_end, double dt,
                                    std::size_t sample_stride) {
    if (!(dt > 0.0)) throw std::invalid_argument("leapfrog: dt must be positive");
    if (sample_stride == 0) sample_stride = 1;

    Trajectory traj;
    const double e0 = energy(config, initial);
    traj.samples.push_back(initial);

    double z = initial.z;
    double v = initial.v;
    double a = axial_acceleration(config, z);
    const auto steps = static_cast<std::size_t>(std::ceil((t_end - initial.t) / dt));
    for (std::size_t n = 1; n <= steps; ++n) {
        const double vh = v + 0.5 * dt * a;
        z += dt * vh;
        a = axial_acceleration(config, z);
        v = vh + 0.5 * dt * a;
        if (n % sample_stride == 0 || n == steps) {
            const AxialState st{z, v, initial.t + static_cast<double>(n) * dt};
            traj.samples.push_back(st);
            traj.energy_drift =
                std::max(traj.energy_drift, std::abs(energy(config, st) - e0));
        }
    }
    return traj;
}

double ode_period(const PlanarConfiguration& config, double E,
                  const IntegrateOptions& opts, int crossings) {
    const double e_min = energy_min(config);
    if (!(E > e_min) || !(E < 0.0))
        throw std::domain_error("ode_period: E must lie in (E_min, 0)");
    if (crossings < 1) throw std::invalid_argument("ode_period: crossings >= 1");

    const double v0 = std::sqrt(2.0 * (E - axial_potential(config, 0.0)));
    detail::Dopri5<2, AxialRhs> stepper(AxialRhs{&config}, {0.0, v0}, 0.0, opts.rtol,
                                        opts.atol);

    int found = 0;
    double z_prev = 0.0;
    for (std::size_t n = 0; n < opts.max_steps; ++n) {
        stepper.step();
        const double z_new = stepper.y()[0];
        // upward crossing: z goes negative -> nonnegative with v > 0
        if (z_prev < 0.0 && z_new >= 0.0 && stepper.y()[1] > 0.0) {
            double lo = stepper.t_prev();
            double hi = stepper.t();
            for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                (stepper.dense_at(mid, 0) < 0.0 ? lo : hi) = mid;
            }
            ++found;
            if (found == crossings) return 0.5 * (lo + hi) / crossings;
        }
        z_prev = z_new;
    }
    throw std::runtime_error("ode_period: max_steps exceeded before crossing");
}

namespace {

std::vector<Vec3> primaries_at(const PlanarConfiguration& config, double theta) {
    std::vector<Vec3> out(config.size());
    for (std::size_t i = 0; i < config.size(); ++i) {
        const Vec2 p = config.positions()[i].rotated(theta);
        out[i] = {p.x, p.y, 0.0};
    }
    return out;
}

}  // namespace

InvarianceReport verify_axis_invariance(const PlanarConfiguration& config) {
    const double lambda = cc_residual(config).lambda;
    const double period = 2.0 * M_PI / std::sqrt(lambda);
    std::vector<double> times(16);
    for (std::size_t k = 0; k < times.size(); ++k)
        times[k] = period * static_cast<double>(k) / static_cast<double>(times.size());
    std::vector<double> heights(33);
    const double span = 5.0 * config.max_radius();
    for (std::size_t k = 0; k < heights.size(); ++k)
        heights[k] = -span + 2.0 * span * static_cast<double>(k) / 32.0;
    return verify_axis_invariance(config, times, heights);
}

InvarianceReport verify_axis_invariance(const PlanarConfiguration& config,
                                        const std::vector<double>& times,
                                        const std::vector<double>& heights) {
    const double lambda = cc_residual(config).lambda;
    const double omega = std::sqrt(lambda);
    const auto& m = config.masses();
    const auto& s = config.radii();

    InvarianceReport report;
    for (double t : times) {
        const auto prim = primaries_at(config, omega * t);
        for (double z : heights) {
            Vec2 planar{};
            double scale = 0.0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                const double d2 = s[i] * s[i] + z * z;
                const double w = m[i] / (d2 * std::sqrt(d2));
                planar += w * Vec2{prim[i].x, prim[i].y};
                scale += m[i] / d2;
            }
            report.max_planar_norm = std::max(report.max_planar_norm, planar.norm());
            report.field_scale = std::max(report.field_scale, scale);
        }
    }
    return report;
}

Trajectory3 integrate_full(const PlanarConfiguration& config, State3 initial,
                           double t_end, const IntegrateOptions& opts) {
    const double lambda = cc_residual(config).lambda;
    const double omega = std::sqrt(lambda);
    const auto& m = config.masses();

    struct FullRhs {
        const PlanarConfiguration* config;
        double omega;
        const std::vector<double>* masses;
        void operator()(double t, const detail::StateN<6>& y,
                        detail::StateN<6>& dydt) const {
            dydt[0] = y[3];
            dydt[1] = y[4];
            dydt[2] = y[5];
            Vec3 acc{};
            const double theta = omega * t;
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            const Vec3 x0{y[0], y[1], y[2]};
            for (std::size_t i = 0; i < masses->size(); ++i) {
                const Vec2 q = config->positions()[i];
                const Vec3 pi{c * q.x - s * q.y, s * q.x + c * q.y, 0.0};
                const Vec3 d = pi - x0;
                const double r2 = d.norm2();
                acc += ((*masses)[i] / (r2 * std::sqrt(r2))) * d;
            }
            dydt[3] = acc.x;
            dydt[4] = acc.y;
            dydt[5] = acc.z;
        }
    };

    Trajectory3 traj;
    traj.samples.push_back(initial);
    traj.max_offaxis = std::hypot(initial.pos.x, initial.pos.y);

    detail::Dopri5<6, FullRhs> stepper(
        FullRhs{&config, omega, &m},
        {initial.pos.x, initial.pos.y, initial.pos.z, initial.vel.x, initial.vel.y,
         initial.vel.z},
        initial.t, opts.rtol, opts.atol);

    double next_sample = opts.sample_dt > 0.0 ? initial.t + opts.sample_dt : 0.0;
    const double t_eps = 1e-14 * std::max(1.0, std::abs(t_end));

    auto record = [&](const detail::StateN<6>& y, double t) {
        traj.samples.push_back(
            {{y[0], y[1], y[2]}, {y[3], y[4], y[5]}, t});
        traj.max_offaxis = std::max(traj.max_offaxis, std::hypot(y[0], y[1]));
    };

    for (std::size_t n = 0; n < opts.max_steps; ++n) {
        if (t_end - stepper.t() <= t_eps) break;
        stepper.clamp_to(t_end);
        stepper.step();
        if (opts.sample_dt > 0.0) {
            while (next_sample <= stepper.t() + t_eps && next_sample <= t_end + t_eps) {
                const double tq = std::min(next_sample, stepper.t());
                detail::StateN<6> yq;
                for (std::size_t i = 0; i < 6; ++i) yq[i] = stepper.dense_at(tq, i);
                record(yq, tq);
                next_sample += opts.sample_dt;
            }
        } else {
            record(stepper.y(), stepper.t());
        }
    }
    if (t_end - stepper.t() > t_eps)
        throw std::runtime_error("integrate_full: max_steps exceeded");
    return traj;
}

}  // namespace sitnikov
