#pragma once

#include <functional>
#include <vector>

#include "lgidecay/spectral.hpp"

namespace lgidecay {

/// Initial amplitudes of the two-level system, |c0|^2 + |c1(0)|^2 = 1.
struct QubitState {
    Complex ground = 0.0;   // c0, constant throughout the decay
    Complex excited0 = 1.0; // c1 at t = 0

    void validate() const; // normalization to 1e-12
};

enum class SolverMethod { Analytic, OdeReduction, VolterraTrapezoid };

struct SolverConfig {
    double dt = 1e-3;
    double t_max = 10.0;
    SolverMethod method = SolverMethod::OdeReduction;

    void validate() const;
    std::size_t n_steps() const; // grid has n_steps()+1 points
};

/// Excited-state propagator G(t) sampled on a uniform grid, G(0) = 1.
struct AmplitudeTrajectory {
    double dt = 0.0;
    std::vector<Complex> values;

    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    double t_max() const { return time(values.size() - 1); }

    /// Off-grid query by cubic (4-point Lagrange) interpolation; clamps to the grid range.
    Complex at(double t) const;
};

/// Closed-form propagator for the Lorentzian bath:
///   G(t) = e^{-(lambda - i delta) t / 2} [ cosh(d t/2) + ((lambda - i delta)/d) sinh(d t/2) ]
/// with d = sqrt((lambda - i delta)^2 - 2 gamma lambda). Branch independent;
/// the d -> 0 critical point is evaluated by series expansion.
Complex propagator_analytic(const LorentzianSpectrum& spec, double t);

/// Solve dG/dt = -int_0^t g(t - tau) G(tau) dtau, G(0) = 1, by product
/// integration: trapezoidal weights on the convolution (with Euler-Maclaurin
/// endpoint corrections) and an explicit predictor / trapezoid corrector
/// step in time. Global error O(dt^2).
/// Throws if |G| exceeds 1 + 1e-3 anywhere (step size too large).
AmplitudeTrajectory propagator_volterra(const std::function<Complex(double)>& kernel,
                                        const SolverConfig& cfg);

/// Exponential-kernel reduction to the local system
///   G' = -(gamma lambda / 2) y,   y' = (i delta - lambda) y + G,   y(0) = 0,
/// integrated with classical RK4. Global error O(dt^4).
AmplitudeTrajectory propagator_ode(const LorentzianSpectrum& spec, const SolverConfig& cfg);

/// Dispatch on cfg.method; Analytic samples the closed form on the grid.
AmplitudeTrajectory propagator(const LorentzianSpectrum& spec, const SolverConfig& cfg);

} // namespace lgidecay
