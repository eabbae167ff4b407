// spinstar command-line runner: dispatches simulator experiments and
// writes deterministic CSV / PGM / key=value artifacts plus a manifest.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinstar/io.hpp"
#include "spinstar/revival_analysis.hpp"
#include "spinstar/validation.hpp"

namespace ss = spinstar;

namespace {

struct RunConfig {
    int N = 100;
    double lambda = 1.0;
    double theta0 = std::numbers::pi / 2.0;
    double zeta0 = -1.0;  // overrides theta0 when >= 0
    double phi0 = 0.0;
    std::string alpha = "1,0";
    std::string beta = "0,0";
    std::string out_prefix = "spinstar";
    std::string config_path;

    std::string time_str = "0";
    double t_max_in_T = 1.0;
    int n_t = 512;
    int n_phi = 512;
    int n_theta = 256;
    int p = 1;
    int q = 2;
    std::string branch = "+";
    double prominence = 0.2;
    std::string axis = "N";
    int n_min = 10, n_max = 100, n_step = 10;

    ss::ModelParams params() const {
        ss::ModelParams m;
        m.N = N;
        m.lambda = lambda;
        m.phi0 = phi0;
        return m;
    }

    ss::SpinCoherentSpec spec() const {
        if (zeta0 >= 0.0) return ss::SpinCoherentSpec(N, zeta0, phi0);
        return ss::SpinCoherentSpec::from_bloch(N, theta0, phi0);
    }

    ss::BranchSign branch_sign() const {
        if (branch == "+" || branch == "plus") return ss::BranchSign::plus;
        if (branch == "-" || branch == "minus") return ss::BranchSign::minus;
        throw std::invalid_argument("branch: expected '+' or '-'");
    }
};

ss::cplx parse_complex(const std::string& s, const char* key) {
    double re = 0.0, im = 0.0;
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            re = std::stod(s);
        } else {
            re = std::stod(s.substr(0, comma));
            im = std::stod(s.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(key) + ": expected re[,im]");
    }
    return {re, im};
}

// Accepts raw seconds or a multiple of the revival time: "0.5T".
double parse_time(const std::string& s, double T) {
    std::string body = s;
    bool in_T = false;
    if (!body.empty() && (body.back() == 'T' || body.back() == 't')) {
        in_T = true;
        body.pop_back();
        if (body.empty()) body = "1";
    }
    double v = 0.0;
    try {
        size_t pos = 0;
        v = std::stod(body, &pos);
        if (pos != body.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("time: expected seconds or '<x>T'");
    }
    return in_T ? v * T : v;
}

class Manifest {
  public:
    void add(const std::string& key, const std::string& value) {
        entries_.emplace_back(key, value);
    }
    void add(const std::string& key, double value) {
        add(key, ss::format_double(value));
    }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add_artifact(const std::string& path) {
        entries_.emplace_back("artifact", path);
        entries_.emplace_back("checksum_" + path, ss::file_checksum(path));
    }
    void write(const std::string& path) const {
        std::ostringstream os;
        for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
        ss::write_text(os.str(), path);
    }

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--N", cfg.N, "qubit count of the collective system");
    cmd->add_option("--lambda", cfg.lambda, "coupling strength");
    cmd->add_option("--theta0", cfg.theta0, "initial polar angle");
    cmd->add_option("--zeta0", cfg.zeta0, "initial |zeta| (overrides --theta0)");
    cmd->add_option("--phi0", cfg.phi0, "initial azimuth");
    cmd->add_option("--alpha", cfg.alpha, "qubit amplitude on |phi0+>, re[,im]");
    cmd->add_option("--beta", cfg.beta, "qubit amplitude on |phi0->, re[,im]");
    cmd->add_option("--out", cfg.out_prefix, "output path prefix");
    cmd->add_option("--config", cfg.config_path, "key=value config file");
}

void add_common_manifest(Manifest& man, const std::string& sub, const RunConfig& cfg) {
    man.add("subcommand", sub);
    man.add("N", cfg.N);
    man.add("lambda", cfg.lambda);
    man.add("theta0", cfg.spec().theta());
    man.add("zeta0", cfg.spec().zeta_abs);
    man.add("phi0", cfg.phi0);
    man.add("alpha", cfg.alpha);
    man.add("beta", cfg.beta);
}

void run_coeffs(const RunConfig& cfg) {
    const auto c = ss::coherent_coeffs(cfg.spec());
    ss::QRaster table(static_cast<size_t>(cfg.N) + 1, 3);
    table.axis0_label = "m";
    table.axis1 = {0, 1, 2};
    const double j = 0.5 * cfg.N;
    for (int k = 0; k <= cfg.N; ++k) {
        table.axis0[k] = k - j;
        table.at(k, 0) = c.amps[k].real();
        table.at(k, 1) = c.amps[k].imag();
        table.at(k, 2) = std::norm(c.amps[k]);
    }
    const std::string csv = cfg.out_prefix + "_coeffs.csv";
    ss::write_csv(table, csv);

    Manifest man;
    add_common_manifest(man, "coeffs", cfg);
    man.add_artifact(csv);
    man.write(cfg.out_prefix + ".manifest");
}

void run_evolve(const RunConfig& cfg) {
    const auto params = cfg.params();
    const double T = ss::revival_time(params).T;
    const double t = parse_time(cfg.time_str, T);
    const auto initial = ss::build_initial(params, cfg.spec(),
                                           parse_complex(cfg.alpha, "alpha"),
                                           parse_complex(cfg.beta, "beta"));
    const auto evolved = ss::exact_propagate(initial, params, t);

    ss::QRaster table(static_cast<size_t>(cfg.N) + 1, 4);
    table.axis0_label = "m";
    table.axis1 = {0, 1, 2, 3};
    const double j = 0.5 * cfg.N;
    for (int k = 0; k <= cfg.N; ++k) {
        table.axis0[k] = k - j;
        table.at(k, 0) = evolved.at(k, 0).real();
        table.at(k, 1) = evolved.at(k, 0).imag();
        table.at(k, 2) = evolved.at(k, 1).real();
        table.at(k, 3) = evolved.at(k, 1).imag();
    }
    const std::string csv = cfg.out_prefix + "_state.csv";
    ss::write_csv(table, csv);

    const auto exc = ss::conserved_excitation(evolved);
    std::ostringstream rep;
    rep.precision(17);
    rep << "t = " << t << '\n';
    rep << "T = " << T << '\n';
    rep << "norm = " << evolved.norm() << '\n';
    rep << "excitation_expectation = " << exc.expectation << '\n';
    rep << "overlap_with_initial = " << std::abs(ss::overlap(initial, evolved)) << '\n';
    const std::string report = cfg.out_prefix + "_evolve.txt";
    ss::write_text(rep.str(), report);

    Manifest man;
    add_common_manifest(man, "evolve", cfg);
    man.add("time", cfg.time_str);
    man.add("time_resolved", t);
    man.add_artifact(csv);
    man.add_artifact(report);
    man.write(cfg.out_prefix + ".manifest");
}

void run_qfunc(const RunConfig& cfg) {
    const auto params = cfg.params();
    const double T = ss::revival_time(params).T;
    const double t = parse_time(cfg.time_str, T);
    const auto initial = ss::build_initial(params, cfg.spec(),
                                           parse_complex(cfg.alpha, "alpha"),
                                           parse_complex(cfg.beta, "beta"));
    const auto evolved = ss::exact_propagate(initial, params, t);
    const auto raster = ss::q_grid(evolved, cfg.n_theta, cfg.n_phi);

    const std::string csv = cfg.out_prefix + "_qfunc.csv";
    const std::string pgm = cfg.out_prefix + "_qfunc.pgm";
    ss::write_csv(raster, csv);
    ss::write_pgm(raster, pgm);

    Manifest man;
    add_common_manifest(man, "qfunc", cfg);
    man.add("time", cfg.time_str);
    man.add("time_resolved", t);
    man.add("n_theta", cfg.n_theta);
    man.add("n_phi", cfg.n_phi);
    man.add_artifact(csv);
    man.add_artifact(pgm);
    man.write(cfg.out_prefix + ".manifest");
}

void run_carpet(const RunConfig& cfg) {
    const auto raster = ss::carpet(cfg.params(), cfg.spec(),
                                   parse_complex(cfg.alpha, "alpha"),
                                   parse_complex(cfg.beta, "beta"), cfg.n_t,
                                   cfg.n_phi, cfg.t_max_in_T);
    const std::string csv = cfg.out_prefix + "_carpet.csv";
    const std::string pgm = cfg.out_prefix + "_carpet.pgm";
    ss::write_csv(raster, csv);
    ss::write_pgm(raster, pgm);

    Manifest man;
    add_common_manifest(man, "carpet", cfg);
    man.add("t_max", cfg.t_max_in_T);
    man.add("n_t", cfg.n_t);
    man.add("n_phi", cfg.n_phi);
    man.add_artifact(csv);
    man.add_artifact(pgm);
    man.write(cfg.out_prefix + ".manifest");
}

void run_fidelity_map(const RunConfig& cfg) {
    std::vector<double> t_grid(cfg.n_t);
    for (int i = 0; i < cfg.n_t; ++i)
        t_grid[i] = cfg.t_max_in_T * i / (cfg.n_t - 1);

    ss::QRaster raster;
    if (cfg.axis == "N") {
        std::vector<int> n_list;
        for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) n_list.push_back(n);
        raster = ss::fidelity_map_vs_N(n_list, t_grid, cfg.lambda, cfg.branch_sign());
    } else if (cfg.axis == "theta") {
        std::vector<double> theta_grid(cfg.n_theta);
        for (int i = 0; i < cfg.n_theta; ++i)
            theta_grid[i] = (i + 0.5) * std::numbers::pi / cfg.n_theta;
        raster = ss::fidelity_map_vs_theta(cfg.N, theta_grid, t_grid, cfg.lambda,
                                           cfg.branch_sign());
    } else {
        throw std::invalid_argument("axis: expected 'N' or 'theta'");
    }

    const std::string csv = cfg.out_prefix + "_fidelity.csv";
    const std::string pgm = cfg.out_prefix + "_fidelity.pgm";
    ss::write_csv(raster, csv);
    ss::write_pgm(raster, pgm);

    Manifest man;
    add_common_manifest(man, "fidelity-map", cfg);
    man.add("axis", cfg.axis);
    man.add("t_max", cfg.t_max_in_T);
    man.add("n_t", cfg.n_t);
    man.add_artifact(csv);
    man.add_artifact(pgm);
    man.write(cfg.out_prefix + ".manifest");
}

void run_defect_map(const RunConfig& cfg) {
    std::vector<int> n_list;
    for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) n_list.push_back(n);
    std::vector<double> theta_grid(cfg.n_theta);
    for (int i = 0; i < cfg.n_theta; ++i)
        theta_grid[i] = (i + 0.5) * std::numbers::pi / cfg.n_theta;

    const auto map = ss::defect_map(theta_grid, n_list);
    const std::string e1_csv = cfg.out_prefix + "_defect_e1.csv";
    const std::string e2_csv = cfg.out_prefix + "_defect_e2.csv";
    ss::write_csv(map.e1, e1_csv);
    ss::write_csv(map.e2, e2_csv);

    ss::QRaster bounds(n_list.size(), 2);
    bounds.axis0_label = "N";
    bounds.axis1 = {0, 1};
    for (size_t r = 0; r < n_list.size(); ++r) {
        bounds.axis0[r] = n_list[r];
        bounds.at(r, 0) = map.boundary_low_theta[r];
        bounds.at(r, 1) = map.boundary_high_theta[r];
    }
    const std::string bounds_csv = cfg.out_prefix + "_defect_boundaries.csv";
    ss::write_csv(bounds, bounds_csv);

    Manifest man;
    add_common_manifest(man, "defect-map", cfg);
    man.add("n_min", cfg.n_min);
    man.add("n_max", cfg.n_max);
    man.add("n_step", cfg.n_step);
    man.add("n_theta", cfg.n_theta);
    man.add_artifact(e1_csv);
    man.add_artifact(e2_csv);
    man.add_artifact(bounds_csv);
    man.write(cfg.out_prefix + ".manifest");
}

void run_revival(const RunConfig& cfg) {
    const auto rep = ss::make_revival_report(ss::FractionalTime(cfg.p, cfg.q),
                                             cfg.params(), cfg.branch_sign(),
                                             cfg.n_phi);
    const std::string report = cfg.out_prefix + "_revival.txt";
    ss::write_text(ss::to_key_value(rep), report);

    Manifest man;
    add_common_manifest(man, "revival", cfg);
    man.add("p", cfg.p);
    man.add("q", cfg.q);
    man.add("branch", cfg.branch);
    man.add_artifact(report);
    man.write(cfg.out_prefix + ".manifest");
}

void run_gauss(const RunConfig& cfg) {
    const auto params = cfg.params();
    const auto sign = cfg.branch_sign();
    const auto dft = ss::gauss_sum_dft(ss::FractionalTime(cfg.p, cfg.q), params, sign);

    std::ostringstream os;
    os.precision(17);
    os << "p = " << cfg.p << '\n';
    os << "q = " << cfg.q << '\n';
    double resid = 0.0;
    for (int l = 0; l < cfg.q; ++l) {
        os << "dft_re_" << l << " = " << dft[l].real() << '\n';
        os << "dft_im_" << l << " = " << dft[l].imag() << '\n';
        if (cfg.p == 1) {
            const auto cf = ss::gauss_sum_closed_form(cfg.q, l, params, sign);
            os << "closed_re_" << l << " = " << cf.real() << '\n';
            os << "closed_im_" << l << " = " << cf.imag() << '\n';
            resid = std::max(resid, std::abs(dft[l] - cf));
        }
    }
    if (cfg.p == 1) os << "max_abs_residual = " << resid << '\n';
    const std::string report = cfg.out_prefix + "_gauss.txt";
    ss::write_text(os.str(), report);

    Manifest man;
    add_common_manifest(man, "gauss", cfg);
    man.add("p", cfg.p);
    man.add("q", cfg.q);
    man.add("branch", cfg.branch);
    man.add_artifact(report);
    man.write(cfg.out_prefix + ".manifest");
}

// Config-file values become injected flags placed before the explicit
// ones, so command-line flags win.
std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string config_path;
    for (size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty() || argc < 2) return args;

    const auto kv = ss::parse_config_file(config_path);
    std::vector<std::string> out;
    out.push_back(args[0]);
    out.push_back(args[1]);  // subcommand
    for (const auto& [k, v] : kv) out.push_back("--" + k + "=" + v);
    out.insert(out.end(), args.begin() + 2, args.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-star simulator: exact and effective dynamics, revival "
                 "analysis, phase-space rasters"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* coeffs = app.add_subcommand("coeffs", "Dicke coefficients of the initial state");
    add_common_options(coeffs, cfg);

    auto* evolve = app.add_subcommand("evolve", "exact propagation to a single time");
    add_common_options(evolve, cfg);
    evolve->add_option("--time", cfg.time_str, "time, seconds or '<x>T'");

    auto* qfunc = app.add_subcommand("qfunc", "Husimi Q raster of the evolved state");
    add_common_options(qfunc, cfg);
    qfunc->add_option("--time", cfg.time_str, "time, seconds or '<x>T'");
    qfunc->add_option("--n-theta", cfg.n_theta, "theta grid size");
    qfunc->add_option("--n-phi", cfg.n_phi, "phi grid size");

    auto* carpet = app.add_subcommand("carpet", "quantum-carpet raster Q(pi/2, phi; t)");
    add_common_options(carpet, cfg);
    carpet->add_option("--t-max", cfg.t_max_in_T, "max time in units of T");
    carpet->add_option("--n-t", cfg.n_t, "time grid size");
    carpet->add_option("--n-phi", cfg.n_phi, "phi grid size");

    auto* fmap = app.add_subcommand("fidelity-map", "truncation fidelity raster");
    add_common_options(fmap, cfg);
    fmap->add_option("--axis", cfg.axis, "'N' (sweep N at theta0=pi/2) or 'theta'");
    fmap->add_option("--t-max", cfg.t_max_in_T, "max time in units of T");
    fmap->add_option("--n-t", cfg.n_t, "time grid size");
    fmap->add_option("--n-theta", cfg.n_theta, "theta grid size (axis=theta)");
    fmap->add_option("--n-min", cfg.n_min, "smallest N (axis=N)");
    fmap->add_option("--n-max", cfg.n_max, "largest N (axis=N)");
    fmap->add_option("--n-step", cfg.n_step, "N stride (axis=N)");
    fmap->add_option("--branch", cfg.branch, "'+' or '-'");

    auto* dmap = app.add_subcommand("defect-map", "eigenvalue-defect rasters e1, e2");
    add_common_options(dmap, cfg);
    dmap->add_option("--n-theta", cfg.n_theta, "theta grid size");
    dmap->add_option("--n-min", cfg.n_min, "smallest N");
    dmap->add_option("--n-max", cfg.n_max, "largest N");
    dmap->add_option("--n-step", cfg.n_step, "N stride");

    auto* revival = app.add_subcommand("revival", "fractional-revival report at pT/q");
    add_common_options(revival, cfg);
    revival->add_option("--p", cfg.p, "revival fraction numerator");
    revival->add_option("--q", cfg.q, "revival fraction denominator");
    revival->add_option("--n-phi", cfg.n_phi, "phi grid for the cat count");
    revival->add_option("--branch", cfg.branch, "'+' or '-'");

    auto* gauss = app.add_subcommand("gauss", "Gauss-sum DFT vs closed form");
    add_common_options(gauss, cfg);
    gauss->add_option("--p", cfg.p, "fraction numerator (closed form needs p=1)");
    gauss->add_option("--q", cfg.q, "fraction denominator");
    gauss->add_option("--branch", cfg.branch, "'+' or '-'");

    try {
        const auto args = expand_args(argc, argv);
        std::vector<const char*> cargs;
        cargs.reserve(args.size());
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());

        if (coeffs->parsed()) run_coeffs(cfg);
        else if (evolve->parsed()) run_evolve(cfg);
        else if (qfunc->parsed()) run_qfunc(cfg);
        else if (carpet->parsed()) run_carpet(cfg);
        else if (fmap->parsed()) run_fidelity_map(cfg);
        else if (dmap->parsed()) run_defect_map(cfg);
        else if (revival->parsed()) run_revival(cfg);
        else if (gauss->parsed()) run_gauss(cfg);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
