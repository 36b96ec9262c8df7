#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lgidecay/correlators.hpp"
#include "lgidecay/oracle.hpp"

using namespace lgidecay;

namespace {

const QubitState kHalf{Complex(1.0 / std::numbers::sqrt2), Complex(1.0 / std::numbers::sqrt2)};

double max_c1_error(const DiscretizedBath& bath, const LorentzianSpectrum& spec,
                    const QubitState& state, double t_max, double dt) {
    const auto c1 = evolve_c1_trajectory(bath, state, t_max, dt);
    double worst = 0.0;
    for (std::size_t k = 0; k < c1.size(); ++k) {
        const Complex ana =
            state.excited0 * propagator_analytic(spec, static_cast<double>(k) * dt);
        worst = std::max(worst, std::abs(c1[k] - ana));
    }
    return worst;
}

} // namespace

TEST_CASE("discretize samples the spectral density") {
    LorentzianSpectrum spec{0.5, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 4000, 40.0 * spec.width);
    CHECK(bath.count() == 4000);
    // sum g_k^2 approaches the full-line integral gamma*lambda/2 up to the
    // ~1.6% tail mass outside the +-40*lambda window
    CHECK(bath.coupling_norm() ==
          doctest::Approx(spec.gamma * spec.width / 2.0).epsilon(0.02));
    for (double g : bath.couplings)
        CHECK(g >= 0.0);

    const auto single = discretize(spec, 1, 5.0 * spec.width);
    CHECK(single.mode_freqs[0] == doctest::Approx(spec.peak_frequency()));
    const double dw = 2.0 * 5.0 * spec.width;
    CHECK(single.couplings[0] * single.couplings[0] ==
          doctest::Approx(lorentzian_density(spec, spec.peak_frequency()) * dw));

    CHECK_THROWS_AS(discretize(spec, 100, 4.0 * spec.width), std::invalid_argument);
    CHECK_THROWS_AS(discretize(spec, 0, 10.0 * spec.width), std::invalid_argument);
}

TEST_CASE("discrete kernel sum approaches the analytic kernel") {
    LorentzianSpectrum spec{0.5, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 2000, 20.0 * spec.width);
    const double scale = 0.5 * spec.gamma * spec.width;
    const double tail = spec.gamma * spec.width / std::numbers::pi *
                        (std::numbers::pi / 2.0 - std::atan(20.0));
    for (double s : {0.0, 0.1, 0.3, 0.6, 1.0}) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < bath.count(); ++k)
            sum += bath.couplings[k] * bath.couplings[k] *
                   std::exp(Complex(0.0, (bath.omega0 - bath.mode_freqs[k]) * s));
        CHECK(std::abs(sum - memory_kernel(spec, s)) <= tail + 1e-3 * scale);
    }
}

TEST_CASE("zero couplings leave the state untouched") {
    LorentzianSpectrum off{0.0, 5.0, 0.0, 1.0};
    const auto bath = discretize(off, 50, 10.0 * off.width);
    SingleExcitationState psi;
    psi.c0 = kHalf.ground;
    psi.c1 = kHalf.excited0;
    psi.c_modes.assign(bath.count(), Complex(0.0));
    const auto out = evolve(bath, psi, 0.0, 2.0, 1e-2);
    CHECK(std::abs(out.c1 - psi.c1) < 1e-13);
    CHECK(std::abs(out.c0 - psi.c0) < 1e-13);
}

TEST_CASE("evolution conserves the norm and keeps c0 constant") {
    LorentzianSpectrum spec{0.3, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 400, 10.0 * spec.width);
    SingleExcitationState psi;
    psi.c0 = kHalf.ground;
    psi.c1 = kHalf.excited0;
    psi.c_modes.assign(bath.count(), Complex(0.0));
    const auto out = evolve(bath, psi, 0.0, 3.0, 1e-3);
    CHECK(std::abs(out.norm() - 1.0) < 1e-8);
    CHECK(std::abs(out.c0 - psi.c0) < 1e-12);
    CHECK(std::abs(out.c1) < std::abs(psi.c1)); // excitation leaks into the bath
}

TEST_CASE("discretized c1 tracks the analytic amplitude") {
    LorentzianSpectrum spec{0.5, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 800, 12.0 * spec.width);
    CHECK(max_c1_error(bath, spec, kHalf, 2.0, 1e-3) <= 5e-3);
}

TEST_CASE("doubling modes and window reduces the error") {
    LorentzianSpectrum spec{0.5, 5.0, 0.0, 1.0};
    const auto coarse = discretize(spec, 400, 8.0 * spec.width);
    const auto fine = discretize(spec, 800, 16.0 * spec.width);
    const double e_coarse = max_c1_error(coarse, spec, kHalf, 2.0, 1e-3);
    const double e_fine = max_c1_error(fine, spec, kHalf, 2.0, 1e-3);
    CHECK(e_fine < e_coarse);
}

TEST_CASE("equal-time correlators reduce to populations") {
    LorentzianSpectrum spec{0.2, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 200, 8.0 * spec.width);
    const Complex pm = oracle_correlator(bath, kHalf, CorrelatorKind::PlusMinus, 0.0, 0.0, 1e-3);
    CHECK(std::abs(pm - Complex(0.5)) < 1e-12);
    const Complex mp = oracle_correlator(bath, kHalf, CorrelatorKind::MinusPlus, 0.0, 0.0, 1e-3);
    CHECK(std::abs(mp - Complex(0.5)) < 1e-12);
}

TEST_CASE("insertion correlators match the analytic expressions") {
    LorentzianSpectrum spec{0.1, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 800, 12.0 * spec.width);
    const double t2 = 0.5, t1 = 1.5, dt = 1e-3;
    const Complex pm = oracle_correlator(bath, kHalf, CorrelatorKind::PlusMinus, t1, t2, dt);
    CHECK(std::abs(pm - corr_plus_minus(kHalf, spec, t1, t2)) < 5e-3);
    const Complex mp = oracle_correlator(bath, kHalf, CorrelatorKind::MinusPlus, t1, t2, dt);
    CHECK(std::abs(mp - corr_minus_plus(kHalf, spec, t1, t2)) < 5e-3);
}

TEST_CASE("same-ladder correlators vanish") {
    LorentzianSpectrum spec{0.2, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 200, 8.0 * spec.width);
    CHECK(std::abs(oracle_same_ladder(bath, kHalf, true, 1.0, 0.4, 1e-3)) < 1e-10);
    CHECK(std::abs(oracle_same_ladder(bath, kHalf, false, 1.0, 0.4, 1e-3)) < 1e-10);
}

TEST_CASE("evolve argument validation") {
    LorentzianSpectrum spec{0.2, 5.0, 0.0, 1.0};
    const auto bath = discretize(spec, 20, 8.0 * spec.width);
    SingleExcitationState psi;
    psi.c1 = 1.0;
    psi.c_modes.assign(bath.count(), Complex(0.0));
    CHECK_THROWS_AS(evolve(bath, psi, 1.0, 0.5, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(evolve(bath, psi, 0.0, 1.0, 0.0), std::invalid_argument);
    psi.c_modes.resize(5);
    CHECK_THROWS_AS(evolve(bath, psi, 0.0, 1.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(
        oracle_correlator(bath, kHalf, CorrelatorKind::PlusMinus, 0.5, 1.5, 1e-3),
        std::invalid_argument);
}
