#include "lgidecay/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lgidecay {

void LorentzianSpectrum::validate() const {
    if (!(gamma >= 0.0))
        throw std::invalid_argument("LorentzianSpectrum: gamma must be >= 0");
    if (!(width > 0.0))
        throw std::invalid_argument("LorentzianSpectrum: lambda must be > 0");
    if (!(omega0 > 0.0))
        throw std::invalid_argument("LorentzianSpectrum: omega0 must be > 0");
}

double LorentzianSpectrum::peak_density() const {
    return gamma / (2.0 * std::numbers::pi);
}

double lorentzian_density(const LorentzianSpectrum& spec, double omega) {
    const double x = spec.omega0 - omega - spec.detuning;
    return spec.gamma * spec.width * spec.width /
           (2.0 * std::numbers::pi * (x * x + spec.width * spec.width));
}

Complex memory_kernel(const LorentzianSpectrum& spec, double s) {
    if (s < 0.0)
        throw std::invalid_argument("memory_kernel: s must be >= 0");
    const double amp = 0.5 * spec.gamma * spec.width;
    return amp * std::exp(Complex(-spec.width * s, spec.detuning * s));
}

void TabulatedSpectrum::validate() const {
    if (omega.size() != density.size())
        throw std::invalid_argument("TabulatedSpectrum: column lengths differ");
    if (omega.size() < 2)
        throw std::invalid_argument("TabulatedSpectrum: need at least two samples");
    for (std::size_t i = 0; i + 1 < omega.size(); ++i)
        if (!(omega[i] < omega[i + 1]))
            throw std::invalid_argument("TabulatedSpectrum: omega grid not strictly increasing");
    for (double j : density)
        if (!(j >= 0.0))
            throw std::invalid_argument("TabulatedSpectrum: J(omega) must be >= 0");
}

double TabulatedSpectrum::peak() const {
    return *std::max_element(density.begin(), density.end());
}

bool TabulatedSpectrum::window_adequate(double tol) const {
    const double p = peak();
    if (p == 0.0)
        return true;
    return density.front() <= tol * p && density.back() <= tol * p;
}

TabulatedSpectrum TabulatedSpectrum::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("TabulatedSpectrum: cannot open " + path);
    TabulatedSpectrum tab;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream row(line);
        double w, j;
        if (!(row >> w >> j))
            throw std::runtime_error("TabulatedSpectrum: parse error in " + path +
                                     " at line " + std::to_string(lineno));
        tab.omega.push_back(w);
        tab.density.push_back(j);
    }
    tab.validate();
    return tab;
}

TabulatedSpectrum TabulatedSpectrum::from_lorentzian(const LorentzianSpectrum& spec,
                                                     std::size_t n_points, double half_width) {
    spec.validate();
    if (n_points < 2)
        throw std::invalid_argument("from_lorentzian: need at least two points");
    TabulatedSpectrum tab;
    tab.omega.resize(n_points);
    tab.density.resize(n_points);
    const double lo = spec.peak_frequency() - half_width;
    const double dw = 2.0 * half_width / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        tab.omega[i] = lo + static_cast<double>(i) * dw;
        tab.density[i] = lorentzian_density(spec, tab.omega[i]);
    }
    return tab;
}

Complex memory_kernel_quadrature(const TabulatedSpectrum& tab, double omega0, double s) {
    if (s < 0.0)
        throw std::invalid_argument("memory_kernel_quadrature: s must be >= 0");
    tab.validate();
    Complex acc = 0.0;
    for (std::size_t i = 0; i + 1 < tab.omega.size(); ++i) {
        const double h = tab.omega[i + 1] - tab.omega[i];
        const Complex fa = tab.density[i] * std::exp(Complex(0.0, (omega0 - tab.omega[i]) * s));
        const Complex fb =
            tab.density[i + 1] * std::exp(Complex(0.0, (omega0 - tab.omega[i + 1]) * s));
        acc += 0.5 * h * (fa + fb);
    }
    return acc;
}

} // namespace lgidecay
