#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "lgidecay/oracle.hpp"

namespace lgidecay::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Complex parse_complex(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re))
        throw ConfigError("invalid complex value for key '" + key + "': " + value);
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw ConfigError("invalid complex value for key '" + key + "': " + value);
    }
    return {re, im};
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("invalid numeric value for key '" + key + "': " + value);
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size())
            throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("invalid integer value for key '" + key + "': " + value);
    }
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out);
    const auto path = std::filesystem::path(cfg.out) / name;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

void write_scan_csv(std::ofstream& out, const ScanReport& rep) {
    out << (rep.order == 4 ? "tau,C21,C32,C43,C41,C4" : "tau,C21,C32,C31,C3") << "\n";
    for (std::size_t i = 0; i < rep.tau.size(); ++i) {
        out << fmt(rep.tau[i]);
        for (double c : rep.values[i].c_terms)
            out << ',' << fmt(c);
        out << ',' << fmt(rep.values[i].witness) << "\n";
    }
}

std::string interval_list(const ScanReport& rep) {
    std::string s = "[";
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        if (i)
            s += ", ";
        s += "(" + fmt(rep.violations[i].tau_lo) + ", " + fmt(rep.violations[i].tau_hi) + ")";
    }
    return s + "]";
}

struct FigureCurve {
    std::string label;
    double value;
};

struct FigurePreset {
    std::string param; // config key varied across curves
    LorentzianSpectrum base;
    std::vector<double> values;
};

FigurePreset figure_preset(const std::string& id) {
    if (id == "fig1")
        return {"gamma", {0.0, 5.0, 0.0, 1.0}, {0.01, 0.1, 0.3, 0.5}};
    if (id == "fig2")
        return {"lambda", {0.5, 0.0, 10.0, 1.0}, {1.0, 5.0, 10.0, 40.0}};
    if (id == "fig3")
        return {"delta", {0.2, 5.0, 0.0, 1.0}, {0.0, 5.0, 10.0, 50.0}};
    throw ConfigError("unknown figure id '" + id + "' (expected fig1, fig2, or fig3)");
}

} // namespace

std::vector<double> RunConfig::tau_grid() const {
    const double hi = (tau_max > 0.0) ? tau_max : 2.0 * std::numbers::pi / spectrum.omega0;
    if (tau_points == 0)
        throw ConfigError("tau_points must be >= 1");
    std::vector<double> grid(tau_points);
    if (tau_min >= 0.0) {
        // inclusive [tau_min, tau_max]
        if (!(tau_min < hi))
            throw ConfigError("tau_min must be below tau_max");
        const double denom = (tau_points > 1) ? static_cast<double>(tau_points - 1) : 1.0;
        for (std::size_t i = 0; i < tau_points; ++i)
            grid[i] = tau_min + (hi - tau_min) * static_cast<double>(i) / denom;
    } else {
        // default: tau_points uniform samples on (0, tau_max]
        for (std::size_t i = 0; i < tau_points; ++i)
            grid[i] = hi * static_cast<double>(i + 1) / static_cast<double>(tau_points);
    }
    return grid;
}

void RunConfig::validate() const {
    spectrum.validate();
    state.validate();
    solver.validate();
    if (t1 < 0.0)
        throw ConfigError("t1 must be >= 0");
    if (order != 3 && order != 4)
        throw ConfigError("order must be 3 or 4");
    if (n_modes < 1)
        throw ConfigError("n_modes must be >= 1");
    if (tolerance <= 0.0)
        throw ConfigError("tolerance must be > 0");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "gamma")
        cfg.spectrum.gamma = parse_double(key, value);
    else if (key == "lambda")
        cfg.spectrum.width = parse_double(key, value);
    else if (key == "delta")
        cfg.spectrum.detuning = parse_double(key, value);
    else if (key == "omega0")
        cfg.spectrum.omega0 = parse_double(key, value);
    else if (key == "c0")
        cfg.state.ground = parse_complex(key, value);
    else if (key == "c1_0")
        cfg.state.excited0 = parse_complex(key, value);
    else if (key == "t1")
        cfg.t1 = parse_double(key, value);
    else if (key == "tau_min")
        cfg.tau_min = parse_double(key, value);
    else if (key == "tau_max")
        cfg.tau_max = parse_double(key, value);
    else if (key == "tau_points") {
        const long v = parse_long(key, value);
        if (v < 1)
            throw ConfigError("tau_points must be >= 1");
        cfg.tau_points = static_cast<std::size_t>(v);
    } else if (key == "order")
        cfg.order = static_cast<int>(parse_long(key, value));
    else if (key == "dt")
        cfg.solver.dt = parse_double(key, value);
    else if (key == "t_max")
        cfg.solver.t_max = parse_double(key, value);
    else if (key == "method") {
        if (value == "analytic")
            cfg.solver.method = SolverMethod::Analytic;
        else if (value == "ode-reduction")
            cfg.solver.method = SolverMethod::OdeReduction;
        else if (value == "volterra-trapezoid")
            cfg.solver.method = SolverMethod::VolterraTrapezoid;
        else
            throw ConfigError("unknown method '" + value +
                              "' (expected analytic, ode-reduction, or volterra-trapezoid)");
    } else if (key == "n_modes") {
        const long v = parse_long(key, value);
        if (v < 1)
            throw ConfigError("n_modes must be >= 1");
        cfg.n_modes = static_cast<std::size_t>(v);
    } else if (key == "half_width")
        cfg.half_width = parse_double(key, value);
    else if (key == "tolerance")
        cfg.tolerance = parse_double(key, value);
    else if (key == "figure")
        cfg.figure = value;
    else if (key == "out")
        cfg.out = value;
    else
        throw ConfigError("unknown configuration key '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("missing '=' in " + path + " at line " + std::to_string(lineno));
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
        };
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

int cmd_amplitude(const RunConfig& cfg) {
    cfg.validate();
    const AmplitudeTrajectory traj = propagator(cfg.spectrum, cfg.solver);
    auto out = open_output(cfg, "amplitude.csv");
    out << "t,re_G,im_G,abs_G\n";
    for (std::size_t k = 0; k < traj.values.size(); ++k) {
        const Complex g = traj.values[k];
        out << fmt(traj.time(k)) << ',' << fmt(g.real()) << ',' << fmt(g.imag()) << ','
            << fmt(std::abs(g)) << "\n";
    }
    return kExitOk;
}

int cmd_lgi(const RunConfig& cfg) {
    cfg.validate();
    const ScanReport rep =
        violation_scan(cfg.state, cfg.spectrum, cfg.t1, cfg.tau_grid(), cfg.order);
    auto out = open_output(cfg, "scan.csv");
    write_scan_csv(out, rep);
    std::cout << "max_C" << rep.order << "=" << fmt(rep.max_witness) << " at tau="
              << fmt(rep.argmax_tau) << "; violation_intervals=" << interval_list(rep) << "\n";
    return kExitOk;
}

int cmd_figure(const RunConfig& cfg) {
    const FigurePreset preset = figure_preset(cfg.figure);
    RunConfig curve_cfg = cfg;
    curve_cfg.spectrum = preset.base;
    curve_cfg.spectrum.omega0 = cfg.spectrum.omega0;
    curve_cfg.t1 = 0.0;
    curve_cfg.order = 4;
    curve_cfg.validate();

    std::vector<std::string> files;
    for (double v : preset.values) {
        RunConfig one = curve_cfg;
        apply_setting(one, preset.param, fmt(v));
        const ScanReport rep = violation_scan(one.state, one.spectrum, one.t1, one.tau_grid(), 4);
        const std::string name = cfg.figure + "_" + preset.param + "_" + fmt(v) + ".csv";
        auto out = open_output(cfg, name);
        write_scan_csv(out, rep);
        files.push_back(name);
        std::cout << name << ": max_C4=" << fmt(rep.max_witness) << " at tau="
                  << fmt(rep.argmax_tau) << "; violation_intervals=" << interval_list(rep)
                  << "\n";
    }

    auto plot = open_output(cfg, cfg.figure + ".gnuplot");
    plot << "set datafile separator ','\n"
         << "set xlabel 'omega0 tau'\n"
         << "set ylabel 'C4'\n"
         << "set key top right\n"
         << "plot 2 with lines dashtype 2 lc 'gray' title 'LGI bound'";
    for (std::size_t i = 0; i < files.size(); ++i)
        plot << ", \\\n     '" << files[i] << "' using 1:6 with lines title '" << preset.param
             << "=" << fmt(preset.values[i]) << "'";
    plot << "\n";
    return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg) {
    cfg.validate();
    const double half_width =
        (cfg.half_width > 0.0) ? cfg.half_width : 20.0 * cfg.spectrum.width;
    const double t_max = std::min(cfg.solver.t_max, 5.0);
    const double dt = cfg.solver.dt;

    const DiscretizedBath bath = discretize(cfg.spectrum, cfg.n_modes, half_width);
    const std::vector<Complex> c1 = evolve_c1_trajectory(bath, cfg.state, t_max, dt);

    auto out = open_output(cfg, "oracle_check.csv");
    out << "t,re_c1_oracle,im_c1_oracle,re_c1_analytic,im_c1_analytic,abs_err\n";
    double max_c1_err = 0.0;
    for (std::size_t k = 0; k < c1.size(); ++k) {
        const double t = static_cast<double>(k) * dt;
        const Complex ana = cfg.state.excited0 * propagator_analytic(cfg.spectrum, t);
        const double err = std::abs(c1[k] - ana);
        max_c1_err = std::max(max_c1_err, err);
        out << fmt(t) << ',' << fmt(c1[k].real()) << ',' << fmt(c1[k].imag()) << ','
            << fmt(ana.real()) << ',' << fmt(ana.imag()) << ',' << fmt(err) << "\n";
    }

    // spot-check the two-time correlators against the analytic expressions
    const double t2 = 0.1 * t_max, tt1 = 0.3 * t_max;
    double max_corr_err = 0.0;
    {
        const Complex o = oracle_correlator(bath, cfg.state, CorrelatorKind::PlusMinus, tt1, t2, dt);
        const Complex a = corr_plus_minus(cfg.state, cfg.spectrum, tt1, t2);
        max_corr_err = std::max(max_corr_err, std::abs(o - a));
    }
    {
        const Complex o = oracle_correlator(bath, cfg.state, CorrelatorKind::MinusPlus, tt1, t2, dt);
        const Complex a = corr_minus_plus(cfg.state, cfg.spectrum, tt1, t2);
        max_corr_err = std::max(max_corr_err, std::abs(o - a));
    }

    std::cout << "max_c1_err=" << fmt(max_c1_err) << " max_corr_err=" << fmt(max_corr_err)
              << " (tolerances " << fmt(cfg.tolerance) << ", " << fmt(5.0 * cfg.tolerance)
              << ")\n";
    if (max_c1_err > cfg.tolerance || max_corr_err > 5.0 * cfg.tolerance) {
        std::cerr << "oracle-check: discretized bath disagrees with the analytic solution; "
                     "increase n_modes/half_width or reduce dt\n";
        return kExitTolerance;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args) {
    try {
        if (args.empty())
            throw ConfigError(
                "usage: lgi-decay <amplitude|lgi|figure|oracle-check> [--config FILE] "
                "[--key value ...] [--out DIR]");
        const std::string& command = args[0];
        RunConfig cfg;
        std::size_t i = 1;
        if (command == "figure" && i < args.size() && args[i].rfind("--", 0) != 0)
            cfg.figure = args[i++];
        for (; i < args.size(); ++i) {
            if (args[i].rfind("--", 0) != 0)
                throw ConfigError("expected --key, got '" + args[i] + "'");
            const std::string key = args[i].substr(2);
            if (i + 1 >= args.size())
                throw ConfigError("missing value for --" + key);
            const std::string& value = args[++i];
            if (key == "config")
                load_config_file(cfg, value);
            else
                apply_setting(cfg, key, value);
        }
        if (command == "amplitude")
            return cmd_amplitude(cfg);
        if (command == "lgi")
            return cmd_lgi(cfg);
        if (command == "figure")
            return cmd_figure(cfg);
        if (command == "oracle-check")
            return cmd_oracle_check(cfg);
        throw ConfigError("unknown command '" + command + "'");
    } catch (const ConfigError& e) {
        std::cerr << "lgi-decay: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lgi-decay: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "lgi-decay: " << e.what() << "\n";
        return kExitTolerance;
    }
}

} // namespace lgidecay::cli
