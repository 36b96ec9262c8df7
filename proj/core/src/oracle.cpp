#include "lgidecay/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace lgidecay {

namespace {

constexpr double kNormDriftAbort = 1e-6;

SingleExcitationState apply_sigma_minus(const SingleExcitationState& s) {
    SingleExcitationState out;
    out.c0 = s.c1; // |1,vac> -> |0,vac>; everything else annihilated
    out.c_modes.assign(s.c_modes.size(), Complex(0.0));
    return out;
}

SingleExcitationState apply_sigma_plus(const SingleExcitationState& s) {
    SingleExcitationState out;
    out.c1 = s.c0; // |0,vac> -> |1,vac>; |0,1_k> leaves the single-excitation sector
    out.c_modes.assign(s.c_modes.size(), Complex(0.0));
    return out;
}

Complex overlap(const SingleExcitationState& bra, const SingleExcitationState& ket) {
    Complex acc = std::conj(bra.c0) * ket.c0 + std::conj(bra.c1) * ket.c1;
    for (std::size_t k = 0; k < bra.c_modes.size(); ++k)
        acc += std::conj(bra.c_modes[k]) * ket.c_modes[k];
    return acc;
}

struct Deriv {
    Complex dc1;
    std::vector<Complex> dmodes;
};

void eval_deriv(const DiscretizedBath& bath, const Complex& c1,
                const std::vector<Complex>& modes, const std::vector<Complex>& phases,
                Deriv& out) {
    const std::size_t n = bath.count();
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += bath.couplings[k] * modes[k] * phases[k];
        out.dmodes[k] = Complex(0.0, -1.0) * bath.couplings[k] * c1 * std::conj(phases[k]);
    }
    out.dc1 = Complex(0.0, -1.0) * acc;
}

void fill_phases(const DiscretizedBath& bath, double t, std::vector<Complex>& phases) {
    for (std::size_t k = 0; k < bath.count(); ++k)
        phases[k] = std::exp(Complex(0.0, (bath.omega0 - bath.mode_freqs[k]) * t));
}

} // namespace

double DiscretizedBath::coupling_norm() const {
    double acc = 0.0;
    for (double g : couplings)
        acc += g * g;
    return acc;
}

double SingleExcitationState::norm() const {
    double acc = std::norm(c0) + std::norm(c1);
    for (const Complex& c : c_modes)
        acc += std::norm(c);
    return std::sqrt(acc);
}

DiscretizedBath discretize(const LorentzianSpectrum& spec, std::size_t n_modes,
                           double half_width) {
    spec.validate();
    if (n_modes < 1)
        throw std::invalid_argument("discretize: need at least one mode");
    if (!(half_width > 0.0))
        throw std::invalid_argument("discretize: half_width must be > 0");
    if (half_width < 5.0 * spec.width)
        throw std::invalid_argument(
            "discretize: half_width < 5*lambda under-resolves the Lorentzian tails");
    DiscretizedBath bath;
    bath.omega0 = spec.omega0;
    bath.mode_freqs.resize(n_modes);
    bath.couplings.resize(n_modes);
    const double lo = spec.peak_frequency() - half_width;
    const double dw = 2.0 * half_width / static_cast<double>(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double w = lo + (static_cast<double>(k) + 0.5) * dw; // midpoint grid
        bath.mode_freqs[k] = w;
        bath.couplings[k] = std::sqrt(lorentzian_density(spec, w) * dw);
    }
    return bath;
}

SingleExcitationState evolve(const DiscretizedBath& bath, const SingleExcitationState& psi,
                             double t_from, double t_to, double dt) {
    if (t_to < t_from)
        throw std::invalid_argument("evolve: t_to must be >= t_from");
    if (!(dt > 0.0))
        throw std::invalid_argument("evolve: dt must be > 0");
    if (psi.c_modes.size() != bath.count())
        throw std::invalid_argument("evolve: state/bath mode count mismatch");

    SingleExcitationState s = psi;
    const double norm0 = s.norm();
    const std::size_t n = bath.count();

    Deriv k1{0.0, std::vector<Complex>(n)}, k2 = k1, k3 = k1, k4 = k1;
    std::vector<Complex> ph_a(n), ph_b(n), ph_c(n), tmp(n);

    double t = t_from;
    while (t < t_to - 1e-15) {
        const double h = std::min(dt, t_to - t);
        fill_phases(bath, t, ph_a);
        fill_phases(bath, t + 0.5 * h, ph_b);
        fill_phases(bath, t + h, ph_c);

        eval_deriv(bath, s.c1, s.c_modes, ph_a, k1);

        Complex c1_s = s.c1 + 0.5 * h * k1.dc1;
        for (std::size_t k = 0; k < n; ++k)
            tmp[k] = s.c_modes[k] + 0.5 * h * k1.dmodes[k];
        eval_deriv(bath, c1_s, tmp, ph_b, k2);

        c1_s = s.c1 + 0.5 * h * k2.dc1;
        for (std::size_t k = 0; k < n; ++k)
            tmp[k] = s.c_modes[k] + 0.5 * h * k2.dmodes[k];
        eval_deriv(bath, c1_s, tmp, ph_b, k3);

        c1_s = s.c1 + h * k3.dc1;
        for (std::size_t k = 0; k < n; ++k)
            tmp[k] = s.c_modes[k] + h * k3.dmodes[k];
        eval_deriv(bath, c1_s, tmp, ph_c, k4);

        s.c1 += h / 6.0 * (k1.dc1 + 2.0 * k2.dc1 + 2.0 * k3.dc1 + k4.dc1);
        for (std::size_t k = 0; k < n; ++k)
            s.c_modes[k] +=
                h / 6.0 * (k1.dmodes[k] + 2.0 * k2.dmodes[k] + 2.0 * k3.dmodes[k] + k4.dmodes[k]);
        t += h;
    }
    if (std::abs(s.norm() - norm0) > kNormDriftAbort)
        throw std::runtime_error("evolve: norm drift " + std::to_string(std::abs(s.norm() - norm0)) +
                                 " exceeds tolerance; reduce dt");
    return s;
}

std::vector<Complex> evolve_c1_trajectory(const DiscretizedBath& bath, const QubitState& state,
                                          double t_max, double dt) {
    state.validate();
    const std::size_t steps = static_cast<std::size_t>(std::llround(t_max / dt));
    std::vector<Complex> c1(steps + 1);
    SingleExcitationState s;
    s.c0 = state.ground;
    s.c1 = state.excited0;
    s.c_modes.assign(bath.count(), Complex(0.0));
    c1[0] = s.c1;
    for (std::size_t m = 0; m < steps; ++m) {
        s = evolve(bath, s, static_cast<double>(m) * dt, static_cast<double>(m + 1) * dt, dt);
        c1[m + 1] = s.c1;
    }
    return c1;
}

Complex oracle_correlator(const DiscretizedBath& bath, const QubitState& state,
                          CorrelatorKind kind, double t1, double t2, double dt) {
    if (!(0.0 <= t2 && t2 <= t1))
        throw std::invalid_argument("oracle_correlator: requires 0 <= t2 <= t1");
    state.validate();

    SingleExcitationState psi0;
    psi0.c0 = state.ground;
    psi0.c1 = state.excited0;
    psi0.c_modes.assign(bath.count(), Complex(0.0));

    const SingleExcitationState psi_t2 = evolve(bath, psi0, 0.0, t2, dt);
    const SingleExcitationState psi_t1 = evolve(bath, psi_t2, t2, t1, dt);

    SingleExcitationState inserted = (kind == CorrelatorKind::PlusMinus)
                                         ? apply_sigma_minus(psi_t2)
                                         : apply_sigma_plus(psi_t2);
    if (t1 > t2 && inserted.norm() > 0.0)
        inserted = evolve(bath, inserted, t2, t1, dt);
    const SingleExcitationState finished = (kind == CorrelatorKind::PlusMinus)
                                               ? apply_sigma_plus(inserted)
                                               : apply_sigma_minus(inserted);
    const Complex interaction_value = overlap(psi_t1, finished);
    // back to the Heisenberg picture
    const double sign = (kind == CorrelatorKind::PlusMinus) ? -1.0 : 1.0;
    return interaction_value * std::exp(Complex(0.0, sign * bath.omega0 * (t2 - t1)));
}

Complex oracle_same_ladder(const DiscretizedBath& bath, const QubitState& state, bool plus,
                           double t1, double t2, double dt) {
    if (!(0.0 <= t2 && t2 <= t1))
        throw std::invalid_argument("oracle_same_ladder: requires 0 <= t2 <= t1");
    state.validate();
    SingleExcitationState psi0;
    psi0.c0 = state.ground;
    psi0.c1 = state.excited0;
    psi0.c_modes.assign(bath.count(), Complex(0.0));
    const SingleExcitationState psi_t2 = evolve(bath, psi0, 0.0, t2, dt);
    const SingleExcitationState psi_t1 = evolve(bath, psi_t2, t2, t1, dt);
    SingleExcitationState inserted = plus ? apply_sigma_plus(psi_t2) : apply_sigma_minus(psi_t2);
    if (t1 > t2 && inserted.norm() > 0.0)
        inserted = evolve(bath, inserted, t2, t1, dt);
    const SingleExcitationState finished =
        plus ? apply_sigma_plus(inserted) : apply_sigma_minus(inserted);
    return overlap(psi_t1, finished);
}

} // namespace lgidecay
