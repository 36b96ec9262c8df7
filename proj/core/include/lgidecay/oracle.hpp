#pragma once

#include <vector>

#include "lgidecay/amplitude.hpp"
#include "lgidecay/spectral.hpp"

namespace lgidecay {

/// Bath sampled into N discrete modes for brute-force wavefunction evolution.
struct DiscretizedBath {
    std::vector<double> mode_freqs; // omega_k
    std::vector<double> couplings;  // g_k, real nonnegative by construction
    double omega0 = 1.0;

    std::size_t count() const { return mode_freqs.size(); }
    double coupling_norm() const; // sum |g_k|^2, should approach gamma/2
};

/// Wavefunction in the single-excitation sector:
/// c0 |0,vac> + c1 |1,vac> + sum_k c_k |0,1_k>.
struct SingleExcitationState {
    Complex c0 = 0.0;
    Complex c1 = 0.0;
    std::vector<Complex> c_modes;

    double norm() const;
};

enum class CorrelatorKind { PlusMinus, MinusPlus };

/// Sample J(omega) on a uniform midpoint grid of +-half_width around the
/// Lorentzian peak, g_k = sqrt(J(omega_k) * dw). Warns (returns normally) but
/// the caller should treat half_width < 5*lambda as under-resolved; this
/// routine rejects it outright.
DiscretizedBath discretize(const LorentzianSpectrum& spec, std::size_t n_modes,
                           double half_width);

/// Interaction-picture RK4 evolution from t_from to t_to with fixed step dt:
///   dc1/dt = -i sum_k g_k c_k e^{ i(omega0-omega_k) t }
///   dc_k/dt = -i g_k c1 e^{ -i(omega0-omega_k) t }
/// c0 is constant. Throws if the norm drifts by more than 1e-6.
SingleExcitationState evolve(const DiscretizedBath& bath, const SingleExcitationState& psi,
                             double t_from, double t_to, double dt);

/// Excited-state amplitude c1(t) on a uniform grid, starting from the given
/// qubit state with the bath in vacuum.
std::vector<Complex> evolve_c1_trajectory(const DiscretizedBath& bath, const QubitState& state,
                                          double t_max, double dt);

/// Two-time correlator by literal operator insertion: evolve to t2, apply
/// sigma-/sigma+, evolve to t1, apply the conjugate operator, overlap with
/// the freely evolved state at t1. Requires t1 >= t2; other orderings are
/// obtained by Hermitian conjugation by the caller.
Complex oracle_correlator(const DiscretizedBath& bath, const QubitState& state,
                          CorrelatorKind kind, double t1, double t2, double dt);

/// Same insertion recipe for the vanishing same-ladder products
/// <sigma-(t1) sigma-(t2)> and <sigma+(t1) sigma+(t2)>.
Complex oracle_same_ladder(const DiscretizedBath& bath, const QubitState& state, bool plus,
                           double t1, double t2, double dt);

} // namespace lgidecay
