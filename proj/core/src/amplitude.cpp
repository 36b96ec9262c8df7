#include "lgidecay/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgidecay {

namespace {

constexpr double kNormSlack = 1e-3; // |G| above 1 + this aborts the solver

void check_norm(const Complex& g, double t) {
    if (std::abs(g) > 1.0 + kNormSlack)
        throw std::runtime_error("propagator: |G| = " + std::to_string(std::abs(g)) +
                                 " at t = " + std::to_string(t) +
                                 " exceeds 1; step size too large for this kernel");
}

} // namespace

void QubitState::validate() const {
    const double n = std::norm(ground) + std::norm(excited0);
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("QubitState: |c0|^2 + |c1(0)|^2 != 1");
}

void SolverConfig::validate() const {
    if (!(dt > 0.0))
        throw std::invalid_argument("SolverConfig: dt must be > 0");
    if (!(t_max >= 0.0))
        throw std::invalid_argument("SolverConfig: t_max must be >= 0");
    if (t_max > 0.0 && dt > t_max)
        throw std::invalid_argument("SolverConfig: dt must not exceed t_max");
}

std::size_t SolverConfig::n_steps() const {
    return static_cast<std::size_t>(std::llround(t_max / dt));
}

Complex AmplitudeTrajectory::at(double t) const {
    const std::size_t n = values.size();
    if (n == 0)
        throw std::logic_error("AmplitudeTrajectory: empty");
    if (n == 1 || t <= 0.0)
        return values.front();
    if (t >= t_max())
        return values.back();
    const double u = t / dt;
    const std::size_t i1 = static_cast<std::size_t>(u);
    if (n < 4) { // linear fallback for very short grids
        const double w = u - static_cast<double>(i1);
        return (1.0 - w) * values[i1] + w * values[i1 + 1];
    }
    // 4-point Lagrange stencil centred on the query
    std::size_t i0 = (i1 == 0) ? 0 : i1 - 1;
    if (i0 + 3 >= n)
        i0 = n - 4;
    Complex acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        double lj = 1.0;
        const double xj = static_cast<double>(i0 + j);
        for (std::size_t m = 0; m < 4; ++m) {
            if (m == j)
                continue;
            const double xm = static_cast<double>(i0 + m);
            lj *= (u - xm) / (xj - xm);
        }
        acc += lj * values[i0 + j];
    }
    return acc;
}

Complex propagator_analytic(const LorentzianSpectrum& spec, double t) {
    spec.validate();
    if (t < 0.0)
        throw std::invalid_argument("propagator_analytic: t must be >= 0");
    if (t == 0.0)
        return 1.0;
    const Complex z(spec.width, -spec.detuning); // lambda - i delta
    const Complex d = std::sqrt(z * z - 2.0 * spec.gamma * spec.width);
    const Complex x = 0.5 * d * t;
    if (std::abs(x) < 5e-7) {
        // critical damping: series for cosh(x) + (z/d) sinh(x) avoids 0/0
        const Complex zt2 = 0.5 * z * t;
        const Complex x2 = x * x;
        return std::exp(-zt2) * (1.0 + zt2 + 0.5 * x2 + zt2 * x2 / 6.0);
    }
    // grouped exponentials so that cosh never overflows at large d*t
    const Complex zd = z / d;
    return 0.5 * (1.0 + zd) * std::exp(0.5 * (d - z) * t) +
           0.5 * (1.0 - zd) * std::exp(-0.5 * (d + z) * t);
}

AmplitudeTrajectory propagator_volterra(const std::function<Complex(double)>& kernel,
                                        const SolverConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.n_steps();
    const double dt = cfg.dt;

    std::vector<Complex> kern(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        kern[k] = kernel(static_cast<double>(k) * dt);

    AmplitudeTrajectory traj;
    traj.dt = dt;
    traj.values.assign(n + 1, Complex(0.0));
    traj.values[0] = 1.0;
    std::vector<Complex>& g = traj.values;

    // Trapezoid weights on the convolution with Euler-Maclaurin endpoint
    // corrections -dt^2/12 (f'(t_m) - f'(0)); one-sided second-order
    // differences for the derivatives. f_j = kern[m-j] * G[j].
    auto convolution = [&](std::size_t m, const Complex& g_end) -> Complex {
        if (m == 0)
            return Complex(0.0);
        Complex inner = 0.0;
        for (std::size_t j = 1; j < m; ++j)
            inner += kern[m - j] * g[j];
        const Complex f0 = kern[m] * g[0];
        const Complex fm = kern[0] * g_end;
        Complex acc = dt * (0.5 * f0 + inner + 0.5 * fm);
        if (m >= 2) {
            const Complex f1 = kern[m - 1] * g[1];
            const Complex f2 = kern[m - 2] * g[2];
            const Complex fm1 = kern[1] * g[m - 1];
            const Complex fm2 = kern[2] * g[m - 2];
            const Complex dprime0 = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * dt);
            const Complex dprimem = (3.0 * fm - 4.0 * fm1 + fm2) / (2.0 * dt);
            acc -= dt * dt / 12.0 * (dprimem - dprime0);
        }
        return acc;
    };

    for (std::size_t m = 0; m < n; ++m) {
        const Complex rhs_m = -convolution(m, g[m]);
        Complex g_next = g[m] + dt * rhs_m; // explicit predictor
        for (int it = 0; it < 2; ++it) {    // trapezoid corrector sweeps
            const Complex rhs_next = -convolution(m + 1, g_next);
            g_next = g[m] + 0.5 * dt * (rhs_m + rhs_next);
        }
        g[m + 1] = g_next;
        check_norm(g_next, static_cast<double>(m + 1) * dt);
    }
    return traj;
}

AmplitudeTrajectory propagator_ode(const LorentzianSpectrum& spec, const SolverConfig& cfg) {
    spec.validate();
    cfg.validate();
    const std::size_t n = cfg.n_steps();
    const double dt = cfg.dt;
    const double half_rate = 0.5 * spec.gamma * spec.width;
    const Complex pole(-spec.width, spec.detuning); // i delta - lambda

    AmplitudeTrajectory traj;
    traj.dt = dt;
    traj.values.assign(n + 1, Complex(0.0));
    traj.values[0] = 1.0;

    Complex g = 1.0;
    Complex y = 0.0; // filtered history integral, y' = pole*y + G
    auto dg = [&](const Complex&, const Complex& yv) { return -half_rate * yv; };
    auto dy = [&](const Complex& gv, const Complex& yv) { return pole * yv + gv; };

    for (std::size_t m = 0; m < n; ++m) {
        const Complex k1g = dg(g, y), k1y = dy(g, y);
        const Complex k2g = dg(g + 0.5 * dt * k1g, y + 0.5 * dt * k1y);
        const Complex k2y = dy(g + 0.5 * dt * k1g, y + 0.5 * dt * k1y);
        const Complex k3g = dg(g + 0.5 * dt * k2g, y + 0.5 * dt * k2y);
        const Complex k3y = dy(g + 0.5 * dt * k2g, y + 0.5 * dt * k2y);
        const Complex k4g = dg(g + dt * k3g, y + dt * k3y);
        const Complex k4y = dy(g + dt * k3g, y + dt * k3y);
        g += dt / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        traj.values[m + 1] = g;
        check_norm(g, static_cast<double>(m + 1) * dt);
    }
    return traj;
}

AmplitudeTrajectory propagator(const LorentzianSpectrum& spec, const SolverConfig& cfg) {
    switch (cfg.method) {
    case SolverMethod::Analytic: {
        cfg.validate();
        const std::size_t n = cfg.n_steps();
        AmplitudeTrajectory traj;
        traj.dt = cfg.dt;
        traj.values.resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            traj.values[k] = propagator_analytic(spec, static_cast<double>(k) * cfg.dt);
        return traj;
    }
    case SolverMethod::OdeReduction:
        return propagator_ode(spec, cfg);
    case SolverMethod::VolterraTrapezoid:
        return propagator_volterra([&spec](double s) { return memory_kernel(spec, s); }, cfg);
    }
    throw std::logic_error("propagator: unknown method");
}

} // namespace lgidecay
