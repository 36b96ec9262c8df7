#pragma once

#include <vector>

#include "lgidecay/amplitude.hpp"
#include "lgidecay/spectral.hpp"

namespace lgidecay {

/// Measurement schedule: order-many measurements at t_k = t1 + (k-1)*tau.
struct LgiSchedule {
    double t1 = 0.0;
    double tau = 0.0;
    int order = 4; // 3 or 4

    void validate() const;
};

/// One evaluated LGI witness with its constituent symmetrized correlators.
/// order 3: c_terms = {C21, C32, C31}, witness = C21 + C32 - C31, bound 1.
/// order 4: c_terms = {C21, C32, C43, C41}, witness = C21 + C32 + C43 - C41, bound 2.
struct LgiValue {
    std::vector<double> c_terms;
    double witness = 0.0;
    double bound = 0.0;
};

/// Heisenberg-picture <sigma+(t1) sigma-(t2)> = |c1(0)|^2 G(t2) G*(t1) e^{-i w0 (t2-t1)}.
Complex corr_plus_minus(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                        double t2);

/// Heisenberg-picture <sigma-(t1) sigma+(t2)>. For t1 >= t2 this is
/// |c0|^2 G(t1-t2) e^{i w0 (t2-t1)}; the opposite ordering is the Hermitian
/// conjugate of the swapped-argument value.
Complex corr_minus_plus(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                        double t2);

/// Symmetrized sigma_x correlator C_ji = <{sigma_x(t_j), sigma_x(t_i)}>/2 for
/// 0 <= t_i <= t_j:
///   Re{ c1(t_j) c1*(t_i) e^{-i w0 (t_j-t_i)} + |c0|^2 G(t_j-t_i) e^{-i w0 (t_j-t_i)} }.
double c_ji(const QubitState& state, const LorentzianSpectrum& spec, double t_i, double t_j);

LgiValue lgi_c3(const QubitState& state, const LorentzianSpectrum& spec,
                const LgiSchedule& sched);
LgiValue lgi_c4(const QubitState& state, const LorentzianSpectrum& spec,
                const LgiSchedule& sched);

/// Half-open interval of measurement spacings where the witness exceeds its bound.
struct ViolationInterval {
    double tau_lo = 0.0;
    double tau_hi = 0.0;
};

struct ScanReport {
    int order = 4;
    double bound = 0.0;
    std::vector<double> tau;
    std::vector<LgiValue> values;
    double max_witness = 0.0;
    double argmax_tau = 0.0; // refined off-grid by golden-section search
    std::vector<ViolationInterval> violations;
};

/// Evaluate the witness over tau_grid (strictly increasing, nonempty) at fixed
/// first-measurement time t1. Grid points are evaluated concurrently; the
/// LGI_DECAY_THREADS environment variable caps parallelism.
ScanReport violation_scan(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                          const std::vector<double>& tau_grid, int order);

/// Default scan grid: n points on (0, 2 pi / omega0], uniform.
std::vector<double> default_tau_grid(double omega0 = 1.0, std::size_t n = 400);

} // namespace lgidecay
