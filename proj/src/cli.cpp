#include "trics/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "trics/analytic.hpp"
#include "trics/coherent.hpp"
#include "trics/csv.hpp"
#include "trics/dynamics.hpp"
#include "trics/kummer.hpp"
#include "trics/stats.hpp"
#include "trics/subspace.hpp"

namespace trics::cli {

namespace {

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("TRICS_OUT_DIR")) return std::string(dir) + "/" + path;
    return path;
}

// Deterministic parallel sweep: each index writes only its own slot.
void parallel_for(int n, const std::function<void(int)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = static_cast<int>(std::min<unsigned>(hw, 8u));
    if (n < 4 * workers || workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::vector<double> make_grid(double lo, double hi, int steps, bool log_spacing) {
    if (steps < 1) throw std::domain_error("grid: steps must be >= 1");
    std::vector<double> g(static_cast<size_t>(steps));
    if (steps == 1) {
        g[0] = lo;
        return g;
    }
    if (log_spacing) {
        if (!(lo > 0.0 && hi > 0.0)) throw std::domain_error("grid: log spacing needs positive bounds");
        const double a = std::log(lo), b = std::log(hi);
        for (int i = 0; i < steps; ++i) g[static_cast<size_t>(i)] = std::exp(a + (b - a) * i / (steps - 1));
    } else {
        for (int i = 0; i < steps; ++i) g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    }
    return g;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::domain_error("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::domain_error("empty entry in list");
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::domain_error("empty list");
    return out;
}

struct Sink {
    std::ofstream file;
    std::ostream* os{nullptr};

    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os = &fallback;
            return;
        }
        const std::string resolved = resolve_out_path(path);
        file.open(resolved, std::ios::binary);  // binary keeps LF endings everywhere
        if (!file) throw std::runtime_error("cannot open output file: " + resolved);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

// ---------------------------------------------------------------- state ----

int cmd_state(const std::string& k_text, int L, double z_re, double z_im, const std::string& out_path,
              std::ostream& fallback) {
    const SubspaceLabel label{Rational::parse(k_text), L};
    const cx z{z_re, z_im};
    const BlockState s = coherent_state({label, z});

    Sink sink(out_path, fallback);
    csv::Writer w(sink.stream());
    w.comment("trics state k=" + label.k.str() + " L=" + std::to_string(L) + " z=" + csv::format(z_re) +
              "+" + csv::format(z_im) + "i");
    const std::vector<std::string> cols{"n", "re_amp", "im_amp", "prob"};
    w.header(cols);
    for (int n = 0; n <= L; ++n) {
        const cx a = s.amp[static_cast<size_t>(n)];
        const double vals[] = {static_cast<double>(n), a.real(), a.imag(), std::norm(a)};
        w.row(vals);
    }
    return exit_ok;
}

// --------------------------------------------------------------- figure ----

int cmd_figure_purity(const SubspaceLabel& base, const std::vector<int>& Ls,
                      const std::vector<double>& zgrid, const std::string& out_path,
                      std::ostream& fallback, const std::string& config) {
    std::vector<std::vector<double>> rows(zgrid.size());
    parallel_for(static_cast<int>(zgrid.size()), [&](int i) {
        auto& row = rows[static_cast<size_t>(i)];
        row.push_back(zgrid[static_cast<size_t>(i)]);
        for (int L : Ls)
            row.push_back(purity_parameter(coherent_state({{base.k, L}, cx{zgrid[static_cast<size_t>(i)], 0.0}})));
    });
    Sink sink(out_path, fallback);
    csv::Writer w(sink.stream());
    w.comment(config);
    std::vector<std::string> cols{"abs_z"};
    for (int L : Ls) cols.push_back("purity_L" + std::to_string(L));
    w.header(cols);
    for (const auto& row : rows) w.row(row);
    return exit_ok;
}

int cmd_figure_photon_dist(const SubspaceLabel& label, const std::vector<double>& zvals,
                           const std::string& out_path, std::ostream& fallback, const std::string& config) {
    std::vector<std::vector<double>> dist(zvals.size());
    parallel_for(static_cast<int>(zvals.size()), [&](int i) {
        dist[static_cast<size_t>(i)] = photon_distribution({label, cx{zvals[static_cast<size_t>(i)], 0.0}});
    });
    Sink sink(out_path, fallback);
    csv::Writer w(sink.stream());
    w.comment(config);
    std::vector<std::string> cols{"n"};
    for (double z : zvals) cols.push_back("P_z" + csv::format(z));
    w.header(cols);
    for (int n = 0; n <= label.L; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (size_t j = 0; j < zvals.size(); ++j) row.push_back(dist[j][static_cast<size_t>(n)]);
        w.row(row);
    }
    return exit_ok;
}

int cmd_figure_number_stats(const SubspaceLabel& label, const std::vector<double>& zgrid,
                            const std::string& out_path, std::ostream& fallback, const std::string& config) {
    std::vector<std::array<double, 3>> rows(zgrid.size());
    parallel_for(static_cast<int>(zgrid.size()), [&](int i) {
        const double zm = zgrid[static_cast<size_t>(i)];
        Moments m;
        if (zm == 0.0)
            m = {static_cast<double>(label.L), 0.0};  // r -> infinity limit: Fock state |L>
        else
            m = number_moments(1.0 / (zm * zm), label);
        rows[static_cast<size_t>(i)] = {zm, m.mean, m.variance};
    });
    Sink sink(out_path, fallback);
    csv::Writer w(sink.stream());
    w.comment(config);
    const std::vector<std::string> cols{"abs_z", "mean_na", "var_na"};
    w.header(cols);
    for (const auto& r : rows) w.row(r);
    return exit_ok;
}

// --------------------------------------------------------------- verify ----

struct VerifyRow {
    std::string check;
    std::string k;
    int L;
    double worst;
    double tol;
};

double intertwining_deviation(const SubspaceLabel& label, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    BlockState f = zero_state(label);
    for (auto& a : f.amp) a = cx{gauss(rng), gauss(rng)};
    normalize(f);
    const PolyRep p = to_poly(f);

    double worst = 0.0;
    const std::pair<DiffOp, BlockState (*)(const BlockState&)> ops[] = {
        {DiffOp::aKplus, &apply_aKplus},
        {DiffOp::adKminus, &apply_adKminus},
        {DiffOp::K0, &apply_K0},
    };
    for (const auto& [op, matrix_action] : ops) {
        const PolyRep lhs = diff_op(op, p);
        const PolyRep rhs = to_poly(matrix_action(f));
        double scale = 0.0, dev = 0.0;
        for (size_t i = 0; i < lhs.coeff.size(); ++i) {
            dev = std::max(dev, std::abs(lhs.coeff[i] - rhs.coeff[i]));
            scale = std::max(scale, std::abs(rhs.coeff[i]));
        }
        worst = std::max(worst, dev / std::max(1.0, scale));
    }
    return worst;
}

int cmd_verify(const std::string& k_text, const std::string& L_text, double tol_override,
               const std::string& csv_path, std::ostream& out, std::ostream& fallback) {
    const Rational k = Rational::parse(k_text);
    const std::vector<int> Ls = parse_int_list(L_text);

    std::vector<VerifyRow> rows;
    for (int L : Ls) {
        const SubspaceLabel label{k, L};
        label.validate();

        const auto idev = identity_check({label});
        rows.push_back({"identity-moments", k.str(), L, *std::max_element(idev.begin(), idev.end()), 1e-8});

        double worst_eig = 0.0;
        const cx zs[] = {cx{0.0, 0.0}, cx{0.45, 0.2}, cx{2.0, 0.0}, cx{0.0, 8.0}};
        for (const cx& z : zs) worst_eig = std::max(worst_eig, eigen_residuals({label, z}).max());
        rows.push_back({"eigenvalue-equations", k.str(), L, worst_eig, 1e-10});

        double worst_cs = std::max(ode_residual_cs(cx{0.0, 0.0}, label),
                                   ode_residual_cs(cx{0.7, 0.3}, label));
        rows.push_back({"ode-coherent", k.str(), L, worst_cs, 1e-9});

        const EvolutionConfig cfg{label, cx{0.0, 1.0}};
        const EigenSystem es = eigensystem(cfg);
        double worst_nu = 0.0;
        for (size_t j = 0; j < es.values.size(); ++j)
            worst_nu = std::max(worst_nu, ode_residual_eigen(es.values[j], es.vectors[j], cfg.kappa));
        rows.push_back({"ode-eigenstates", k.str(), L, worst_nu, 1e-9});

        rows.push_back({"intertwining", k.str(), L,
                        intertwining_deviation(label, 9000u + static_cast<unsigned>(L)), 1e-11});
    }
    if (tol_override > 0.0)
        for (auto& r : rows) r.tol = tol_override;

    bool all_pass = true;
    const VerifyRow* worst_fail = nullptr;
    out << std::left << std::setw(22) << "check" << std::setw(8) << "k" << std::setw(6) << "L"
        << std::setw(14) << "worst" << std::setw(12) << "tol"
        << "status\n";
    for (const auto& r : rows) {
        const bool pass = r.worst <= r.tol;
        if (!pass) {
            all_pass = false;
            if (!worst_fail || r.worst / r.tol > worst_fail->worst / worst_fail->tol) worst_fail = &r;
        }
        std::ostringstream wtxt, ttxt;
        wtxt << std::scientific << std::setprecision(3) << r.worst;
        ttxt << std::scientific << std::setprecision(1) << r.tol;
        out << std::left << std::setw(22) << r.check << std::setw(8) << r.k << std::setw(6) << r.L
            << std::setw(14) << wtxt.str() << std::setw(12) << ttxt.str() << (pass ? "PASS" : "FAIL")
            << "\n";
    }
    if (!csv_path.empty()) {
        Sink sink(csv_path, fallback);
        csv::Writer w(sink.stream());
        w.comment("trics verify k=" + k.str() + " L=" + L_text);
        const std::vector<std::string> cols{"check", "k", "L", "worst", "tol", "pass"};
        w.header(cols);
        for (const auto& r : rows) {
            sink.stream() << r.check << "," << r.k << "," << r.L << "," << csv::format(r.worst) << ","
                          << csv::format(r.tol) << "," << (r.worst <= r.tol ? 1 : 0) << "\n";
        }
    }
    if (!all_pass) {
        out << "worst offender: " << worst_fail->check << " (k=" << worst_fail->k
            << ", L=" << worst_fail->L << ") deviation " << csv::format(worst_fail->worst)
            << " tolerance " << csv::format(worst_fail->tol) << "\n";
        return exit_numeric;
    }
    return exit_ok;
}

// --------------------------------------------------- evolve / efficiency ----

int cmd_evolve(const std::string& k_text, int L, double t_max, int t_steps, double kappa_abs,
               bool with_amplitudes, const std::string& out_path, std::ostream& fallback) {
    const SubspaceLabel label{Rational::parse(k_text), L};
    label.validate();
    if (!(kappa_abs > 0.0)) throw std::domain_error("evolve: --kappa must be positive");
    const EvolutionConfig cfg{label, cx{0.0, kappa_abs}};
    const EigenSystem es = eigensystem(cfg);
    const BlockState psi0 = reference_state(label);
    const std::vector<double> times = make_grid(0.0, t_max, t_steps, false);

    std::vector<std::vector<double>> rows(times.size());
    parallel_for(static_cast<int>(times.size()), [&](int i) {
        const double t = times[static_cast<size_t>(i)];
        const BlockState psi = evolve(es, psi0, t, cfg);
        auto& row = rows[static_cast<size_t>(i)];
        row = {t, mean_na(psi), purity_parameter(psi)};
        if (with_amplitudes)
            for (const cx& a : psi.amp) {
                row.push_back(a.real());
                row.push_back(a.imag());
            }
    });

    Sink sink(out_path, fallback);
    csv::Writer w(sink.stream());
    w.comment("trics evolve k=" + label.k.str() + " L=" + std::to_string(L) +
              " kappa=i*" + csv::format(kappa_abs) + " t-max=" + csv::format(t_max) +
              " t-steps=" + std::to_string(t_steps));
    std::vector<std::string> cols{"t", "mean_na", "purity"};
    if (with_amplitudes)
        for (int n = 0; n <= L; ++n) {
            cols.push_back("re_amp_" + std::to_string(n));
            cols.push_back("im_amp_" + std::to_string(n));
        }
    w.header(cols);
    for (const auto& row : rows) w.row(row);
    return exit_ok;
}

int cmd_efficiency(const std::string& k_text, int L, double kappa_abs, std::ostream& out) {
    const SubspaceLabel label{Rational::parse(k_text), L};
    label.validate();
    if (!(kappa_abs > 0.0)) throw std::domain_error("efficiency: --kappa must be positive");
    const TransferEfficiency eff = transfer_efficiency({label, cx{0.0, kappa_abs}});
    out << "xi = " << csv::format(eff.xi) << "\n"
        << "scan_window = " << csv::format(eff.window) << "\n"
        << "t_min = " << csv::format(eff.t_min) << "\n"
        << "min_mean_na = " << csv::format(eff.min_mean_na) << "\n"
        << "approximate = " << (eff.approximate ? 1 : 0) << "\n";
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coherent states and exact dynamics of the trilinear boson Hamiltonian"};
    app.require_subcommand(1);

    std::string k_text = "1", L_text = "1", out_path, csv_path, z_list = "0";
    int L = 0, steps = 100, t_steps = 200;
    double z_re = 0.0, z_im = 0.0, z_min = 0.01, z_max = 5.0, t_max = 6.3, kappa_abs = 1.0;
    double tol_override = 0.0;
    bool log_spacing = false, with_amplitudes = false;

    auto* state = app.add_subcommand("state", "emit coherent-state amplitudes and probabilities");
    state->add_option("--k", k_text, "Bargmann index as exact rational, e.g. 1, 1/2, 3/4")->required();
    state->add_option("--L", L, "initial pump photon number")->required();
    state->add_option("--z", z_re, "displacement parameter (real part)");
    state->add_option("--z-im", z_im, "displacement parameter (imaginary part)");
    state->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
    auto* fig_purity = figure->add_subcommand("purity", "purity parameter vs |z|, one column per L");
    fig_purity->add_option("--k", k_text)->required();
    fig_purity->add_option("--L", L_text, "comma list of L values")->required();
    fig_purity->add_option("--z-min", z_min);
    fig_purity->add_option("--z-max", z_max);
    fig_purity->add_option("--steps", steps);
    fig_purity->add_flag("--log", log_spacing, "logarithmic |z| spacing");
    fig_purity->add_option("--out", out_path);
    auto* fig_pnd = figure->add_subcommand("photon-dist", "photon-number distribution columns per |z|");
    fig_pnd->add_option("--k", k_text)->required();
    fig_pnd->add_option("--L", L)->required();
    fig_pnd->add_option("--z", z_list, "comma list of |z| values");
    fig_pnd->add_option("--out", out_path);
    auto* fig_ns = figure->add_subcommand("number-stats", "mean and variance of N_a vs |z|");
    fig_ns->add_option("--k", k_text)->required();
    fig_ns->add_option("--L", L)->required();
    fig_ns->add_option("--z-min", z_min);
    fig_ns->add_option("--z-max", z_max);
    fig_ns->add_option("--steps", steps);
    fig_ns->add_flag("--log", log_spacing);
    fig_ns->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the identity/eigenvalue/ODE verification suite");
    verify->add_option("--k", k_text)->required();
    verify->add_option("--L", L_text, "comma list of L values")->required();
    verify->add_option("--tol", tol_override, "override every check tolerance");
    verify->add_option("--csv", csv_path, "also write machine-readable deviations");

    auto* evolve_cmd = app.add_subcommand("evolve", "exact reference-state evolution (kappa = i|kappa|)");
    evolve_cmd->add_option("--k", k_text)->required();
    evolve_cmd->add_option("--L", L)->required();
    evolve_cmd->add_option("--t-max", t_max);
    evolve_cmd->add_option("--t-steps", t_steps);
    evolve_cmd->add_option("--kappa", kappa_abs, "coupling magnitude");
    evolve_cmd->add_flag("--amplitudes", with_amplitudes, "include amplitude columns");
    evolve_cmd->add_option("--out", out_path);

    auto* eff = app.add_subcommand("efficiency", "energy-transfer efficiency by time scan");
    eff->add_option("--k", k_text)->required();
    eff->add_option("--L", L)->required();
    eff->add_option("--kappa", kappa_abs, "coupling magnitude");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("trics");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (state->parsed()) return cmd_state(k_text, L, z_re, z_im, out_path, out);
        if (fig_purity->parsed()) {
            const Rational k = Rational::parse(k_text);
            const auto Ls = parse_int_list(L_text);
            const auto grid = make_grid(z_min, z_max, steps, log_spacing);
            const std::string config = "trics figure purity k=" + k.str() + " L=" + L_text +
                                       " z-min=" + csv::format(z_min) + " z-max=" + csv::format(z_max) +
                                       " steps=" + std::to_string(steps) +
                                       " spacing=" + (log_spacing ? "log" : "linear");
            return cmd_figure_purity({k, Ls.front()}, Ls, grid, out_path, out, config);
        }
        if (fig_pnd->parsed()) {
            const SubspaceLabel label{Rational::parse(k_text), L};
            label.validate();
            const auto zvals = parse_double_list(z_list);
            const std::string config = "trics figure photon-dist k=" + label.k.str() +
                                       " L=" + std::to_string(L) + " z=" + z_list;
            return cmd_figure_photon_dist(label, zvals, out_path, out, config);
        }
        if (fig_ns->parsed()) {
            const SubspaceLabel label{Rational::parse(k_text), L};
            label.validate();
            const auto grid = make_grid(z_min, z_max, steps, log_spacing);
            const std::string config = "trics figure number-stats k=" + label.k.str() +
                                       " L=" + std::to_string(L) + " z-min=" + csv::format(z_min) +
                                       " z-max=" + csv::format(z_max) + " steps=" + std::to_string(steps) +
                                       " spacing=" + (log_spacing ? "log" : "linear");
            return cmd_figure_number_stats(label, grid, out_path, out, config);
        }
        if (verify->parsed()) return cmd_verify(k_text, L_text, tol_override, csv_path, out, out);
        if (evolve_cmd->parsed())
            return cmd_evolve(k_text, L, t_max, t_steps, kappa_abs, with_amplitudes, out_path, out);
        if (eff->parsed()) return cmd_efficiency(k_text, L, kappa_abs, out);
        err << "no subcommand selected\n";
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    }
}

}  // namespace trics::cli
