#include "lgidecay/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace lgidecay {

namespace {

Complex phase(double omega0, double dt) { return std::exp(Complex(0.0, -omega0 * dt)); }

double witness_at(const QubitState& state, const LorentzianSpectrum& spec, const LgiSchedule& s) {
    return (s.order == 3) ? lgi_c3(state, spec, s).witness : lgi_c4(state, spec, s).witness;
}

std::size_t thread_cap() {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LGI_DECAY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            cap = static_cast<std::size_t>(v);
    }
    return cap;
}

template <typename Fn> void parallel_for(std::size_t n, Fn&& body) {
    const std::size_t workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                body(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace

void LgiSchedule::validate() const {
    if (!(t1 >= 0.0))
        throw std::invalid_argument("LgiSchedule: t1 must be >= 0");
    if (!(tau >= 0.0))
        throw std::invalid_argument("LgiSchedule: tau must be >= 0");
    if (order != 3 && order != 4)
        throw std::invalid_argument("LgiSchedule: order must be 3 or 4");
}

Complex corr_plus_minus(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                        double t2) {
    if (t1 < 0.0 || t2 < 0.0)
        throw std::invalid_argument("corr_plus_minus: times must be >= 0");
    const Complex g1 = propagator_analytic(spec, t1);
    const Complex g2 = propagator_analytic(spec, t2);
    return std::norm(state.excited0) * g2 * std::conj(g1) * phase(spec.omega0, t2 - t1);
}

Complex corr_minus_plus(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                        double t2) {
    if (t1 < 0.0 || t2 < 0.0)
        throw std::invalid_argument("corr_minus_plus: times must be >= 0");
    if (t1 < t2)
        return std::conj(corr_minus_plus(state, spec, t2, t1));
    const Complex g = propagator_analytic(spec, t1 - t2);
    return std::norm(state.ground) * g * std::conj(phase(spec.omega0, t2 - t1));
}

double c_ji(const QubitState& state, const LorentzianSpectrum& spec, double t_i, double t_j) {
    if (!(0.0 <= t_i && t_i <= t_j))
        throw std::invalid_argument("c_ji: requires 0 <= t_i <= t_j");
    const Complex c1_i = state.excited0 * propagator_analytic(spec, t_i);
    const Complex c1_j = state.excited0 * propagator_analytic(spec, t_j);
    const Complex g_sep = propagator_analytic(spec, t_j - t_i);
    const Complex ph = phase(spec.omega0, t_j - t_i);
    return std::real(c1_j * std::conj(c1_i) * ph + std::norm(state.ground) * g_sep * ph);
}

LgiValue lgi_c3(const QubitState& state, const LorentzianSpectrum& spec,
                const LgiSchedule& sched) {
    sched.validate();
    if (sched.order != 3)
        throw std::invalid_argument("lgi_c3: schedule order must be 3");
    state.validate();
    const double t1 = sched.t1, t2 = t1 + sched.tau, t3 = t1 + 2.0 * sched.tau;
    LgiValue out;
    out.c_terms = {c_ji(state, spec, t1, t2), c_ji(state, spec, t2, t3),
                   c_ji(state, spec, t1, t3)};
    out.witness = out.c_terms[0] + out.c_terms[1] - out.c_terms[2];
    out.bound = 1.0;
    return out;
}

LgiValue lgi_c4(const QubitState& state, const LorentzianSpectrum& spec,
                const LgiSchedule& sched) {
    sched.validate();
    if (sched.order != 4)
        throw std::invalid_argument("lgi_c4: schedule order must be 4");
    state.validate();
    const double t1 = sched.t1, t2 = t1 + sched.tau, t3 = t1 + 2.0 * sched.tau,
                 t4 = t1 + 3.0 * sched.tau;
    LgiValue out;
    out.c_terms = {c_ji(state, spec, t1, t2), c_ji(state, spec, t2, t3),
                   c_ji(state, spec, t3, t4), c_ji(state, spec, t1, t4)};
    out.witness = out.c_terms[0] + out.c_terms[1] + out.c_terms[2] - out.c_terms[3];
    out.bound = 2.0;
    return out;
}

ScanReport violation_scan(const QubitState& state, const LorentzianSpectrum& spec, double t1,
                          const std::vector<double>& tau_grid, int order) {
    if (order != 3 && order != 4)
        throw std::invalid_argument("violation_scan: order must be 3 or 4");
    if (tau_grid.empty())
        throw std::invalid_argument("violation_scan: empty tau grid");
    for (std::size_t i = 0; i + 1 < tau_grid.size(); ++i)
        if (!(tau_grid[i] < tau_grid[i + 1]))
            throw std::invalid_argument("violation_scan: tau grid not strictly increasing");
    state.validate();
    spec.validate();

    ScanReport rep;
    rep.order = order;
    rep.bound = (order == 3) ? 1.0 : 2.0;
    rep.tau = tau_grid;
    rep.values.resize(tau_grid.size());

    parallel_for(tau_grid.size(), [&](std::size_t i) {
        LgiSchedule s{t1, tau_grid[i], order};
        rep.values[i] = (order == 3) ? lgi_c3(state, spec, s) : lgi_c4(state, spec, s);
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < tau_grid.size(); ++i)
        if (rep.values[i].witness > rep.values[best].witness)
            best = i;

    // refine the grid maximum by golden-section search on the bracketing cell
    double lo = (best == 0) ? std::max(0.0, tau_grid[0] - (tau_grid.size() > 1
                                                               ? tau_grid[1] - tau_grid[0]
                                                               : tau_grid[0]))
                            : tau_grid[best - 1];
    double hi = (best + 1 < tau_grid.size())
                    ? tau_grid[best + 1]
                    : tau_grid[best];
    if (hi > lo) {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = witness_at(state, spec, {t1, x1, order});
        double f2 = witness_at(state, spec, {t1, x2, order});
        for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = witness_at(state, spec, {t1, x2, order});
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = witness_at(state, spec, {t1, x1, order});
            }
        }
        rep.argmax_tau = 0.5 * (a + b);
        rep.max_witness = witness_at(state, spec, {t1, rep.argmax_tau, order});
    } else {
        rep.argmax_tau = tau_grid[best];
        rep.max_witness = rep.values[best].witness;
    }
    if (rep.values[best].witness > rep.max_witness) {
        rep.max_witness = rep.values[best].witness;
        rep.argmax_tau = tau_grid[best];
    }

    // violation intervals by linear interpolation of bound crossings
    const double bound = rep.bound;
    bool open = rep.values[0].witness > bound;
    ViolationInterval cur{tau_grid[0], tau_grid[0]};
    for (std::size_t i = 0; i + 1 < tau_grid.size(); ++i) {
        const double w0 = rep.values[i].witness, w1 = rep.values[i + 1].witness;
        if (!open && w0 <= bound && w1 > bound) {
            const double fr = (bound - w0) / (w1 - w0);
            cur.tau_lo = tau_grid[i] + fr * (tau_grid[i + 1] - tau_grid[i]);
            open = true;
        } else if (open && w0 > bound && w1 <= bound) {
            const double fr = (w0 - bound) / (w0 - w1);
            cur.tau_hi = tau_grid[i] + fr * (tau_grid[i + 1] - tau_grid[i]);
            rep.violations.push_back(cur);
            open = false;
        }
    }
    if (open) {
        cur.tau_hi = tau_grid.back();
        rep.violations.push_back(cur);
    }
    return rep;
}

std::vector<double> default_tau_grid(double omega0, std::size_t n) {
    std::vector<double> grid(n);
    const double span = 2.0 * std::numbers::pi / omega0;
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = span * static_cast<double>(i + 1) / static_cast<double>(n);
    return grid;
}

} // namespace lgidecay
