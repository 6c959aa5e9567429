#pragma once

#include <cstddef>
#include <vector>

#include "sitnikov/config.hpp"
#include "sitnikov/vec.hpp"

namespace sitnikov {

/// State of the massless particle on the z-axis.
struct AxialState {
    double z = 0.0;
    double v = 0.0;
    double t = 0.0;
};

enum class MotionClass { Hyperbolic, Parabolic, Periodic, Equilibrium };

struct EnergyLevel {
    double E = 0.0;
    double E_min = 0.0;
    MotionClass motion = MotionClass::Equilibrium;
};

struct Trajectory {
    std::vector<AxialState> samples;
    double energy_drift = 0.0;  ///< max |E(t) - E(0)| over the samples
    bool escaped = false;
};

struct IntegrateOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    /// Sampling stride; 0 records every accepted step.
    double sample_dt = 0.0;
    /// Stop when |z| exceeds this threshold (0 disables).
    double escape_z = 0.0;
    std::size_t max_steps = 20'000'000;
};

/// Axial restoring acceleration -sum_i m_i z (s_i^2+z^2)^{-3/2}.
double axial_acceleration(const PlanarConfiguration& config, double z);

/// Potential on the axis, -sum_i m_i (s_i^2+z^2)^{-1/2}.
double axial_potential(const PlanarConfiguration& config, double z);

double energy(const PlanarConfiguration& config, const AxialState& state);

/// E_min = -sum_i m_i/s_i, the equilibrium energy.
double energy_min(const PlanarConfiguration& config);

/// Four-way motion taxonomy from the energy value alone.
MotionClass classify(const PlanarConfiguration& config, double E);

/// Classification from a state, with the parabolic window scaled by
/// |kinetic| + |potential| at that state.
EnergyLevel classify_state(const PlanarConfiguration& config, const AxialState& state);

/// Amplitude z_E > 0 with -sum_i m_i (s_i^2+z_E^2)^{-1/2} = E, for E in (E_min, 0).
double turning_point(const PlanarConfiguration& config, double E);

/// Adaptive Dormand-Prince 5(4) integration of the axial equation.
Trajectory integrate_axial(const PlanarConfiguration& config, AxialState initial,
                           double t_end, const IntegrateOptions& opts = {});

/// Fixed-step velocity-Verlet (leapfrog) integration, for long-horizon
/// energy-behavior comparisons against the adaptive scheme.
Trajectory integrate_axial_leapfrog(const PlanarConfiguration& config,
                                    AxialState initial, double t_end, double dt,
                                    std::size_t sample_stride = 1);

/// Period of the axial orbit at energy E in (E_min, 0), measured from the ODE
/// flow via successive upward zero crossings of z (independent of the
/// quadrature route).
double ode_period(const PlanarConfiguration& config, double E,
                  const IntegrateOptions& opts = {}, int crossings = 2);

struct InvarianceReport {
    double max_planar_norm = 0.0;  ///< max |(f_x,f_y)| over the (t,z) grid
    double field_scale = 0.0;      ///< max sum_i m_i/(s_i^2+z^2) over the grid
};

/// Evaluates the full 3D field on the z-axis over a (t,z) grid with the
/// primaries in rigid motion; the planar components vanish iff balanced.
InvarianceReport verify_axis_invariance(const PlanarConfiguration& config);
InvarianceReport verify_axis_invariance(const PlanarConfiguration& config,
                                        const std::vector<double>& times,
                                        const std::vector<double>& heights);

struct State3 {
    Vec3 pos;
    Vec3 vel;
    double t = 0.0;
};

struct Trajectory3 {
    std::vector<State3> samples;
    double max_offaxis = 0.0;  ///< max sqrt(x^2+y^2) over the samples
};

/// Direct integration of the nonautonomous 3D equation with the primaries
/// rotating rigidly at angular rate sqrt(lambda).
Trajectory3 integrate_full(const PlanarConfiguration& config, State3 initial,
                           double t_end, const IntegrateOptions& opts = {});

}  // namespace sitnikov
