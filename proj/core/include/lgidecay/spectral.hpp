#pragma once

#include <complex>
#include <string>
#include <vector>

namespace lgidecay {

using Complex = std::complex<double>;

/// Lorentzian spectral density J(w) = (1/2pi) gamma*lambda^2 / ((w0 - w - delta)^2 + lambda^2).
/// All rates and frequencies are expressed in units of the qubit transition
/// frequency omega0 (so omega0 = 1 in practice); times in units of 1/omega0.
struct LorentzianSpectrum {
    double gamma = 0.0;    // coupling strength
    double width = 1.0;    // spectral width lambda
    double detuning = 0.0; // detuning of the Lorentzian peak from omega0
    double omega0 = 1.0;   // qubit transition frequency (reference unit)

    void validate() const; // throws std::invalid_argument on bad parameters

    /// Frequency at which J(w) peaks: omega0 - detuning.
    double peak_frequency() const { return omega0 - detuning; }
    /// Peak value gamma/(2pi).
    double peak_density() const;
};

/// J(w) for the given spectrum. Total on valid spectra, strictly positive.
double lorentzian_density(const LorentzianSpectrum& spec, double omega);

/// Reservoir correlation kernel g(s) = (gamma*lambda/2) exp((i*delta - lambda) s),
/// the closed form of  integral dw J(w) e^{i(omega0-w)s}  over the real line.
/// Requires s >= 0; use conj(g(s)) for negative separations.
Complex memory_kernel(const LorentzianSpectrum& spec, double s);

/// Arbitrary tabulated spectral density on a strictly increasing frequency grid.
struct TabulatedSpectrum {
    std::vector<double> omega;
    std::vector<double> density;

    void validate() const;

    double omega_min() const { return omega.front(); }
    double omega_max() const { return omega.back(); }
    double peak() const;

    /// True when both boundary samples are below tol * peak, i.e. the window
    /// captures the spectral mass to the requested resolution.
    bool window_adequate(double tol = 1e-6) const;

    /// Two-column text file `omega  J`, '#' comments, rows sorted by omega.
    static TabulatedSpectrum load(const std::string& path);

    /// Tabulate a Lorentzian on a uniform window of +-half_width around its peak.
    static TabulatedSpectrum from_lorentzian(const LorentzianSpectrum& spec,
                                             std::size_t n_points, double half_width);
};

/// Kernel by composite trapezoidal quadrature over the tabulated grid:
/// integral dw J(w) e^{i(omega0-w)s}. Requires s >= 0.
Complex memory_kernel_quadrature(const TabulatedSpectrum& tab, double omega0, double s);

} // namespace lgidecay
