#pragma once

// Dormand-Prince 5(4) embedded pair with PI step-size control and 4th-order
// dense output, after Hairer, Norsett & Wanner's DOPRI5.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sitnikov::detail {

template <std::size_t N>
using StateN = std::array<double, N>;

template <std::size_t N, class Rhs>
class Dopri5 {
public:
    using State = StateN<N>;

    Dopri5(Rhs rhs, State y0, double t0, double rtol, double atol)
        : rhs_(rhs), y_(y0), t_(t0), rtol_(rtol), atol_(atol) {
        rhs_(t_, y_, k1_);
        h_ = initial_step();
    }

    double t() const { return t_; }
    const State& y() const { return y_; }
    double step_size() const { return h_; }
    void limit_step(double hmax) { h_ = std::min(h_, hmax); }
    void clamp_to(double t_end) { h_ = std::min(h_, t_end - t_); }

    /// Advance by one accepted step (possibly after internal rejections).
    /// Returns the accepted step size.
    double step() {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            if (!(h_ > std::abs(t_) * 1e-15 + 1e-300))
                throw std::runtime_error("dopri5: step size underflow");
            const double err = try_step();
            if (err <= 1.0) {
                accept();
                return h_prev_;
            }
            // rejected: shrink and retry
            const double fac11 = std::pow(err, kExpo1);
            h_ /= std::min(kFacc1, fac11 / kSafe);
            rejected_ = true;
        }
        throw std::runtime_error("dopri5: too many rejected steps");
    }

    double t_prev() const { return t_ - h_prev_; }

    /// Dense output inside the last accepted step, theta in [0,1].
    State dense(double theta) const {
        State out;
        const double th1 = 1.0 - theta;
        for (std::size_t i = 0; i < N; ++i)
            out[i] = rcont1_[i] +
                     theta * (rcont2_[i] +
                              th1 * (rcont3_[i] + theta * (rcont4_[i] + th1 * rcont5_[i])));
        return out;
    }

    /// Component i of the dense output at absolute time tq within the last step.
    double dense_at(double tq, std::size_t i) const {
        const double theta = (tq - t_prev()) / h_prev_;
        const double th1 = 1.0 - theta;
        return rcont1_[i] +
               theta * (rcont2_[i] +
                        th1 * (rcont3_[i] + theta * (rcont4_[i] + th1 * rcont5_[i])));
    }

private:
    static constexpr double kSafe = 0.9;
    static constexpr double kBeta = 0.04;
    static constexpr double kExpo1 = 0.2 - kBeta * 0.75;
    static constexpr double kFacc1 = 5.0;   // 1 / min-scale 0.2
    static constexpr double kFacc2 = 0.1;   // 1 / max-scale 10

    double try_step() {
        const double h = h_;
        auto stage = [&](State& out, std::initializer_list<std::pair<double, const State*>> terms) {
            for (std::size_t i = 0; i < N; ++i) {
                double acc = y_[i];
                for (const auto& [c, k] : terms) acc += h * c * (*k)[i];
                out[i] = acc;
            }
        };

        State ytmp;
        stage(ytmp, {{0.2, &k1_}});
        rhs_(t_ + 0.2 * h, ytmp, k2_);
        stage(ytmp, {{3.0 / 40.0, &k1_}, {9.0 / 40.0, &k2_}});
        rhs_(t_ + 0.3 * h, ytmp, k3_);
        stage(ytmp, {{44.0 / 45.0, &k1_}, {-56.0 / 15.0, &k2_}, {32.0 / 9.0, &k3_}});
        rhs_(t_ + 0.8 * h, ytmp, k4_);
        stage(ytmp, {{19372.0 / 6561.0, &k1_},
                     {-25360.0 / 2187.0, &k2_},
                     {64448.0 / 6561.0, &k3_},
                     {-212.0 / 729.0, &k4_}});
        rhs_(t_ + 8.0 / 9.0 * h, ytmp, k5_);
        stage(ytmp, {{9017.0 / 3168.0, &k1_},
                     {-355.0 / 33.0, &k2_},
                     {46732.0 / 5247.0, &k3_},
                     {49.0 / 176.0, &k4_},
                     {-5103.0 / 18656.0, &k5_}});
        rhs_(t_ + h, ytmp, k6_);
        stage(ynew_, {{35.0 / 384.0, &k1_},
                      {500.0 / 1113.0, &k3_},
                      {125.0 / 192.0, &k4_},
                      {-2187.0 / 6784.0, &k5_},
                      {11.0 / 84.0, &k6_}});
        rhs_(t_ + h, ynew_, k7_);

        double err2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (71.0 / 57600.0 * k1_[i] - 71.0 / 16695.0 * k3_[i] +
                                  71.0 / 1920.0 * k4_[i] - 17253.0 / 339200.0 * k5_[i] +
                                  22.0 / 525.0 * k6_[i] - 1.0 / 40.0 * k7_[i]);
            const double sk = atol_ + rtol_ * std::max(std::abs(y_[i]), std::abs(ynew_[i]));
            err2 += (e / sk) * (e / sk);
        }
        last_err_ = std::sqrt(err2 / N);
        return last_err_;
    }

    void accept() {
        const double h = h_;
        // dense-output coefficients
        constexpr double d1 = -12715105075.0 / 11282082432.0;
        constexpr double d3 = 87487479700.0 / 32700410799.0;
        constexpr double d4 = -10690763975.0 / 1880347072.0;
        constexpr double d5 = 701980252875.0 / 199316789632.0;
        constexpr double d6 = -1453857185.0 / 822651844.0;
        constexpr double d7 = 69997945.0 / 29380423.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ydiff = ynew_[i] - y_[i];
            const double bspl = h * k1_[i] - ydiff;
            rcont1_[i] = y_[i];
            rcont2_[i] = ydiff;
            rcont3_[i] = bspl;
            rcont4_[i] = ydiff - h * k7_[i] - bspl;
            rcont5_[i] = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] +
                              d6 * k6_[i] + d7 * k7_[i]);
        }

        const double err = std::max(last_err_, 1e-32);
        const double fac11 = std::pow(err, kExpo1);
        double fac = fac11 / std::pow(facold_, kBeta);
        fac = std::max(kFacc2, std::min(kFacc1, fac / kSafe));
        double hnew = h / fac;
        if (rejected_) hnew = std::min(hnew, h);  // no growth right after a rejection
        facold_ = std::max(err, 1e-4);
        rejected_ = false;

        t_ += h;
        h_prev_ = h;
        y_ = ynew_;
        k1_ = k7_;  // FSAL
        h_ = hnew;
    }

    double initial_step() {
        double dnf = 0.0;
        double dny = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = atol_ + rtol_ * std::abs(y_[i]);
            dnf += (k1_[i] / sk) * (k1_[i] / sk);
            dny += (y_[i] / sk) * (y_[i] / sk);
        }
        double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;

        State y1;
        State f1;
        for (std::size_t i = 0; i < N; ++i) y1[i] = y_[i] + h * k1_[i];
        rhs_(t_ + h, y1, f1);
        double der2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = atol_ + rtol_ * std::abs(y_[i]);
            der2 += ((f1[i] - k1_[i]) / sk) * ((f1[i] - k1_[i]) / sk);
        }
        der2 = std::sqrt(der2) / h;
        const double der12 = std::max(der2, std::sqrt(dnf));
        const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3)
                                           : std::pow(0.01 / der12, 0.2);
        return std::min(100.0 * h, h1);
    }

    Rhs rhs_;
    State y_{};
    State ynew_{};
    double t_;
    double rtol_;
    double atol_;
    double h_ = 0.0;
    double h_prev_ = 0.0;
    double facold_ = 1e-4;
    double last_err_ = 0.0;
    bool rejected_ = false;
    State k1_{}, k2_{}, k3_{}, k4_{}, k5_{}, k6_{}, k7_{};
    State rcont1_{}, rcont2_{}, rcont3_{}, rcont4_{}, rcont5_{};
};

}  // namespace sitnikov::detail
