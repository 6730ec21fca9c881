// Command-line front end: every subsystem exposed as reproducible batch
// commands with JSON/CSV output and a run manifest next to every file
// artifact.
//
// Exit codes: 0 success, 1 usage, 2 numerical failure (singular system,
// non-positive weight, degenerate kernel), 3 verification subcommand found
// defects above tolerance.

#include <chrono>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/green.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/surface.hpp"
#include "bergman/zero_hunt.hpp"

using namespace bergman;
using nlohmann::json;
using cd = std::complex<double>;

namespace {

struct GlobalOpts {
    int digits = 40;
    std::string out_format = "json";
    std::string grid = "257x257";
    unsigned long seed = 20240901UL;
    bool long_running = false;
    std::string output;  // file prefix; stdout when empty
};

std::pair<int, int> parse_grid(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--grid", "expected MxN");
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

HPComplex parse_hpc(const std::string& s, const PrecisionContext& ctx) {
    if (s.find(' ') != std::string::npos) return HPComplex(s, ctx);
    return HPComplex(HPReal(s, ctx), HPReal(ctx));
}

void write_manifest(const std::string& command, const json& params, int digits,
                    const std::vector<std::string>& outputs, double wall) {
    json m;
    m["command"] = command;
    m["parameters"] = params;
    m["digits"] = digits;
    m["outputs"] = outputs;
    m["wall_time"] = wall;
    std::ofstream f(outputs.front() + ".manifest.json");
    f << m.dump(2) << "\n";
}

void emit(const GlobalOpts& g, const std::string& command, const json& params,
          const std::string& payload, const std::string& suffix, double wall) {
    if (g.output.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::string path = g.output + suffix;
    std::ofstream f(path);
    f << payload << "\n";
    f.close();
    write_manifest(command, params, g.digits, {path}, wall);
    std::cout << path << "\n";
}

std::vector<int> parse_rows(const std::string& spec) {
    // "1-4" or "1,3,5", 1-based.
    std::vector<int> out;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? spec.npos : comma - pos);
        auto dash = tok.find('-');
        if (dash != std::string::npos && dash > 0) {
            int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
            for (int k = a; k <= b; ++k) out.push_back(k - 1);
        } else if (!tok.empty()) {
            out.push_back(std::stoi(tok) - 1);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

CurvatureData parse_mu(const std::string& spec, double r, double alpha, double lambda_re,
                       double lambda_im, double theta) {
    if (spec.rfind("tab:", 0) == 0) {
        std::ifstream f(spec.substr(4));
        if (!f) throw std::runtime_error("surface: cannot open " + spec.substr(4));
        std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        return CurvatureData::from_csv(text);
    }
    if (spec == "zero") return CurvatureData::zero();
    if (spec == "rez") return CurvatureData::re_part();
    if (spec == "dilated") return CurvatureData::dilated_hyperbolic(r, alpha);
    if (spec == "hyperbolic") return CurvatureData::hyperbolic(alpha);
    if (spec == "pointmass") return CurvatureData::point_mass(cd(lambda_re, lambda_im), theta);
    throw CLI::ValidationError("--mu", "unknown data family: " + spec);
}

int run_kernel(const GlobalOpts& g, const std::string& zeros_json, const std::string& zstr,
               const std::string& wstr, const std::string& method, const std::string& rep_out) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(g.digits);
    std::ifstream in(zeros_json);
    if (!in) throw std::runtime_error("kernel: cannot open " + zeros_json);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ZeroSet A = ZeroSet::from_json(text, ctx);
    HPComplex z = parse_hpc(zstr, ctx), w = parse_hpc(wstr, ctx);

    json out;
    out["alpha"] = A.alpha().to_string();
    out["n"] = A.total_count();
    out["method"] = method;
    if (method == "linsys") {
        if (!w.is_zero())
            throw CLI::ValidationError("--w", "the coefficient form fixes w = 0");
        KernelRep rep = kernel_linear_system(A);
        HPComplex v = rep.eval(z);
        out["value"] = v.to_string();
        out["solve_residual"] = rep.solve_residual.to_string();
        out["zero_residual"] = rep.zero_residual.to_string();
        if (!rep_out.empty()) {
            std::ofstream f(rep_out);
            f << rep.to_json() << "\n";
        }
    } else if (method == "recursive") {
        out["value"] = kernel_recursive(A, z, w).to_string();
    } else {
        out["value"] = kernel_with_multiplicity(A, z, w).to_string();
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"zeros", zeros_json}, {"z", zstr}, {"w", wstr}, {"method", method}};
    emit(g, "kernel", params, out.dump(2), ".json", wall);
    return 0;
}

void gate_desk_scale(int n, bool long_running) {
    if (n > 78 && !long_running)
        throw CLI::ValidationError(
            "--n", "configurations beyond n = 78 are not desk scale; pass --long-running");
}

int run_zerohunt(const GlobalOpts& g, const std::string& alpha, int n, double theta, double d,
                 bool locate, double margin, const std::string& width) {
    gate_desk_scale(n, g.long_running);
    HuntConfig cfg{alpha, n, theta, d, g.digits};
    HuntResult r = boundary_value_scan(cfg, margin);
    if (locate && r.verdict == HuntVerdict::extraneous_zero_found)
        r.located_zero = locate_extraneous_zero(r, width);
    json params{{"alpha", alpha}, {"n", n},           {"theta", theta},
                {"d", d},         {"locate", locate}, {"margin", margin}};
    if (g.out_format == "csv") {
        std::string csv = "alpha,n,theta,d,verdict,boundary_value,zero_residual,located_zero\n";
        csv += alpha + "," + std::to_string(n) + "," + std::to_string(theta) + "," +
               std::to_string(d) + "," + to_string(r.verdict) + "," +
               r.boundary_value.to_string() + "," + r.rep.zero_residual.to_string() + "," +
               (r.located_zero ? r.located_zero->to_string() : "") + "\n";
        emit(g, "zerohunt", params, csv, ".csv", r.wall_seconds);
    } else {
        emit(g, "zerohunt", params, r.to_json(), ".json", r.wall_seconds);
    }
    return 0;
}

int run_table1(const GlobalOpts& g, const std::string& rows, double margin) {
    auto t0 = std::chrono::steady_clock::now();
    auto idx = parse_rows(rows);
    auto entries = table1_reproduce(idx, g.digits, g.long_running, margin);
    json out = json::array();
    std::string csv = "alpha,n,theta,d,verdict,boundary_value,zero_residual,wall_seconds\n";
    for (const auto& e : entries) {
        json row;
        row["alpha"] = e.row.alpha;
        row["n"] = e.row.n;
        row["theta"] = e.row.theta;
        row["d"] = e.row.d;
        if (e.ran) {
            row["verdict"] = to_string(e.result->verdict);
            row["boundary_value"] = e.result->boundary_value.to_string();
            row["zero_residual"] = e.result->rep.zero_residual.to_string();
            row["wall_seconds"] = e.result->wall_seconds;
            csv += e.row.alpha + "," + std::to_string(e.row.n) + "," +
                   std::to_string(e.row.theta) + "," + std::to_string(e.row.d) + "," +
                   to_string(e.result->verdict) + "," + e.result->boundary_value.to_string() +
                   "," + e.result->rep.zero_residual.to_string() + "," +
                   std::to_string(e.result->wall_seconds) + "\n";
        } else {
            row["skipped"] = e.skip_reason;
            csv += e.row.alpha + "," + std::to_string(e.row.n) + ",,,skipped,,,\n";
        }
        out.push_back(row);
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"rows", rows}, {"margin", margin}, {"long_running", g.long_running}};
    if (g.out_format == "csv")
        emit(g, "table1", params, csv, ".csv", wall);
    else
        emit(g, "table1", params, out.dump(2), ".json", wall);
    return 0;
}

int run_sweep(const GlobalOpts& g, int n, double theta, double d, const std::string& alphas) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> list;
    size_t pos = 0;
    while (pos < alphas.size()) {
        auto comma = alphas.find(',', pos);
        list.push_back(alphas.substr(pos, comma == std::string::npos ? alphas.npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (list.empty()) throw CLI::ValidationError("--alphas", "empty list");
    gate_desk_scale(n, g.long_running);
    HuntConfig base{list.front(), n, theta, d, g.digits};
    auto pts = alpha_sweep(base, list);
    json out = json::array();
    std::string csv = "alpha,boundary_value,zero_residual,verdict\n";
    for (const auto& p : pts) {
        out.push_back({{"alpha", p.alpha},
                       {"boundary_value", p.boundary_value.to_string()},
                       {"zero_residual", p.zero_residual.to_string()},
                       {"verdict", to_string(p.verdict)}});
        csv += p.alpha + "," + p.boundary_value.to_string() + "," + p.zero_residual.to_string() +
               "," + to_string(p.verdict) + "\n";
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"n", n}, {"theta", theta}, {"d", d}, {"alphas", alphas}};
    if (g.out_format == "csv")
        emit(g, "sweep", params, csv, ".csv", wall);
    else
        emit(g, "sweep", params, out.dump(2), ".json", wall);
    return 0;
}

int run_levelgrid(const GlobalOpts& g, const std::string& alpha, int n, double theta, double d,
                  const std::string& window) {
    auto t0 = std::chrono::steady_clock::now();
    double x0, x1, y0, y1;
    if (std::sscanf(window.c_str(), "%lf,%lf,%lf,%lf", &x0, &x1, &y0, &y1) != 4)
        throw CLI::ValidationError("--window", "expected x0,x1,y0,y1");
    auto [nx, ny] = parse_grid(g.grid);
    gate_desk_scale(n, g.long_running);
    HuntConfig cfg{alpha, n, theta, d, g.digits};
    KernelRep rep = kernel_linear_system(generate_configuration(cfg));
    LevelGrid grid = level_grid_export(rep, x0, x1, y0, y1, nx, ny);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"alpha", alpha}, {"n", n},           {"theta", theta},
                {"d", d},         {"window", window}, {"grid", g.grid}};
    emit(g, "levelgrid", params, grid.to_csv(), ".csv", wall);
    return 0;
}

int run_mvp(const GlobalOpts& g, const std::string& weight, double alpha, double lre, double lim,
            double theta, int mr, int ntheta, double tol) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(g.digits);
    DiskRule rule = build_disk_rule(mr, ntheta, ctx);

    RealField wfn;
    if (weight == "standard") {
        wfn = WeightSpec::standard(HPReal(alpha, ctx)).weight_fn_d();
    } else if (weight == "divisor") {
        // |extremal|^2 omega_alpha for the given interior point.
        cd l(lre, lim);
        double a = alpha;
        wfn = [l, a](cd z) {
            return std::norm(extremal_function_d(z, l, a)) * (a + 1.0) *
                   std::pow(1.0 - std::norm(z), a);
        };
    } else if (weight == "toy") {
        wfn = WeightSpec::toy(HPComplex(lre, lim, ctx), HPReal(theta, ctx)).weight_fn_d();
    } else {
        throw CLI::ValidationError("--weight", "unknown weight: " + weight);
    }

    json out;
    double worst = 0.0;
    for (const auto& [name, h] : harmonic_test_set()) {
        double dft = mvp_check(rule, wfn, h);
        out["defects"][name] = dft;
        worst = std::max(worst, dft);
    }
    out["max_defect"] = worst;
    out["tolerance"] = tol;
    out["pass"] = worst <= tol;
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"weight", weight}, {"alpha", alpha}, {"mr", mr}, {"ntheta", ntheta}};
    emit(g, "mvp", params, out.dump(2), ".json", wall);
    return worst <= tol ? 0 : 3;
}

int run_green(const GlobalOpts& g, const std::string& op, const std::string& zstr,
              const std::string& wstr, int sweep) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(g.digits);
    json out;
    int rc = 0;
    if (op == "gammagrid" || op == "gamma1grid") {
        // Lattice dump of the kernel in z over [-1,1]^2 at fixed w (zero
        // outside the closed disk), plot-ready CSV.
        auto [nx, ny] = parse_grid(g.grid);
        cd wd = parse_hpc(wstr, ctx).to_complex_double();
        std::string csv = "x,y,value\n";
        char buf[96];
        for (int i = 0; i < nx; ++i) {
            double x = -1.0 + 2.0 * i / (nx - 1);
            for (int j = 0; j < ny; ++j) {
                double y = -1.0 + 2.0 * j / (ny - 1);
                double v = 0.0;
                if (x * x + y * y <= 1.0)
                    v = (op == "gammagrid") ? biharmonic_gamma_d(cd(x, y), wd)
                                            : weighted_gamma1_d(cd(x, y), wd);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, y, v);
                csv += buf;
            }
        }
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json params{{"op", op}, {"w", wstr}, {"grid", g.grid}};
        emit(g, "green", params, csv, ".csv", wall);
        return 0;
    }
    if (sweep > 0) {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        auto sample = [&] {
            while (true) {
                cd z(U(rng), U(rng));
                if (std::norm(z) < 0.98) return z;
            }
        };
        int violations = 0;
        for (int k = 0; k < sweep; ++k) {
            cd zd = sample(), wd = sample();
            HPComplex z(zd.real(), zd.imag(), ctx), w(wd.real(), wd.imag(), ctx);
            HPReal g1 = weighted_gamma1(z, w);
            auto b = gamma1_bounds(z, w);
            HPReal slack = pow_si(HPReal(10.0, ctx), 5 - ctx.digits());
            if (g1 < -slack || g1 < b.lower - slack || g1 > b.upper + slack) ++violations;
        }
        out["pairs"] = sweep;
        out["violations"] = violations;
        out["pass"] = violations == 0;
        rc = violations == 0 ? 0 : 3;
    } else {
        HPComplex z = parse_hpc(zstr, ctx), w = parse_hpc(wstr, ctx);
        if (op == "g")
            out["value"] = green_G(z, w).to_string();
        else if (op == "gamma")
            out["value"] = biharmonic_gamma(z, w).to_string();
        else if (op == "gamma1")
            out["value"] = weighted_gamma1(z, w).to_string();
        else if (op == "bounds") {
            auto b = gamma1_bounds(z, w);
            out["lower"] = b.lower.to_string();
            out["upper"] = b.upper.to_string();
        } else if (op == "h1")
            out["value"] = h1_harmonic(z, w).to_string();
        else if (op == "poisson")
            out["value"] = poisson_kernel(z, w).to_string();
        else
            throw CLI::ValidationError("--op", "unknown op: " + op);
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"op", op}, {"z", zstr}, {"w", wstr}, {"sweep", sweep}, {"seed", g.seed}};
    emit(g, "green", params, out.dump(2), ".json", wall);
    return rc;
}

int run_surface(const GlobalOpts& g, const std::string& op, const std::string& mu_spec, double r,
                double alpha, double lre, double lim, double theta, const std::string& zstr,
                double zeta_angle, int mr, int ntheta) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(g.digits);
    DiskRule rule = build_disk_rule(mr, ntheta, ctx);
    json out;
    int rc = 0;

    cd z = parse_hpc(zstr, ctx).to_complex_double();

    if (op == "omega1") {
        CurvatureData mu = parse_mu(mu_spec, r, alpha, lre, lim, theta);
        out["z"] = {z.real(), z.imag()};
        out["omega1"] = omega1_from_mu(mu, rule, z);
        out["log_omega1"] = omega1_log(mu, rule, z);
    } else if (op == "omega1grid") {
        // Weight-grid exchange CSV over [-1,1]^2 (zero outside the disk).
        CurvatureData mu = parse_mu(mu_spec, r, alpha, lre, lim, theta);
        auto [nx, ny] = parse_grid(g.grid);
        std::string csv = "x,y,value\n";
        char buf[96];
        for (int i = 0; i < nx; ++i) {
            double x = -1.0 + 2.0 * i / (nx - 1);
            for (int j = 0; j < ny; ++j) {
                double y = -1.0 + 2.0 * j / (ny - 1);
                double v = 0.0;
                if (x * x + y * y < 1.0)
                    v = mu.has_closed_omega1() ? mu.omega1_closed_d(cd(x, y))
                                               : omega1_from_mu(mu, rule, cd(x, y));
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, y, v);
                csv += buf;
            }
        }
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json params{{"op", op}, {"mu", mu_spec}, {"grid", g.grid}};
        emit(g, "surface", params, csv, ".csv", wall);
        return 0;
    } else if (op == "curvature") {
        CurvatureData mu = parse_mu(mu_spec, r, alpha, lre, lim, theta);
        double rec = curvature_from_mu_roundtrip(mu, rule, z, 5e-4);
        out["recovered_density"] = rec;
        if (!mu.is_point_mass()) {
            out["mu"] = mu.value_d(z);
            out["defect"] = std::abs(rec - mu.value_d(z));
        }
    } else if (op == "omega0") {
        CurvatureData mu = parse_mu(mu_spec, r, alpha, lre, lim, theta);
        if (mu.is_point_mass()) {
            WeightSpec toyw = WeightSpec::toy(HPComplex(lre, lim, ctx), HPReal(theta, ctx));
            Omega0 w0 = omega0_construct(toyw.weight_fn_d(), toyw.kernel_at_zero_fn_d(), rule);
            out["mass"] = w0.mass;
            out["kernel00"] = w0.kernel00;
            out["zero_free"] = w0.zero_free;
            out["min_kernel_abs"] = w0.min_kernel_abs;
            out["omega0_at_z"] = w0.value(z);
        } else if (mu.has_closed_omega1()) {
            // Radial families keep K(.,0) constant: omega0 is the normalized weight.
            auto w1 = [&](cd p) { return mu.omega1_closed_d(p); };
            double mass = integrate_disk_real_d(rule, w1);
            out["mass_omega1"] = mass;
            out["omega0_at_z"] = w1(z) / mass;
            out["quadrature_vs_closed"] =
                std::abs(omega1_from_mu(mu, rule, z) - w1(z));
        } else {
            throw std::domain_error(
                "surface omega0: kernel access needs a point-mass or closed-form radial family");
        }
    } else if (op == "potential") {
        WeightSpec w = WeightSpec::standard(HPReal(alpha, ctx));
        out["potential"] = metric_potential(w.weight_fn_d(), rule, z);
    } else if (op == "normal") {
        WeightSpec w = WeightSpec::standard(HPReal(alpha, ctx));
        cd zeta = std::polar(1.0, zeta_angle);
        out["normal_derivative"] = boundary_normal_derivative(w.weight_fn_d(), rule, zeta);
    } else if (op == "verify") {
        auto [nx, ny] = parse_grid(g.grid);
        CurvatureData mu = parse_mu(mu_spec, r, alpha, lre, lim, theta);
        HPField w_hp;
        RealField w_d;
        if (mu_spec == "zero") {
            w_hp = [ctx](const HPComplex&) { return HPReal(1.0, ctx); };
            w_d = [](cd) { return 1.0; };
        } else if (mu_spec == "hyperbolic") {
            double a = alpha;
            w_hp = [ctx, a](const HPComplex& p) {
                return (HPReal(a, ctx) + 1.0) * pow(HPReal(1.0, ctx) - abs2(p), HPReal(a, ctx));
            };
            w_d = [a](cd p) { return (a + 1.0) * std::pow(1.0 - std::norm(p), a); };
        } else {
            throw CLI::ValidationError("--mu", "verify supports the zero and hyperbolic families");
        }
        MetricGrid grid = MetricGrid::isothermal(w_hp, nx, ny, ctx);
        MpotReport rep = verify_mpot_system(w_hp, w_d, mu, grid, rule);
        out["pde_defect"] = rep.pde_defect;
        out["boundary_defect"] = rep.boundary_defect;
        out["normal_defect"] = rep.normal_defect;
        bool pass =
            rep.pde_defect <= 1e-6 && rep.boundary_defect <= 1e-8 && rep.normal_defect <= 1e-6;
        out["pass"] = pass;
        rc = pass ? 0 : 3;
    } else {
        throw CLI::ValidationError("--op", "unknown op: " + op);
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"op", op}, {"mu", mu_spec}, {"alpha", alpha}, {"mr", mr}, {"ntheta", ntheta}};
    emit(g, "surface", params, out.dump(2), ".json", wall);
    return rc;
}

int run_toy(const GlobalOpts& g, double lre, double lim, double theta, bool locate) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(g.digits);
    HPComplex lambda(lre, lim, ctx);
    HPReal th(theta, ctx);
    json out;
    out["lambda"] = lambda.to_string();
    out["theta"] = th.to_string();
    bool has = toy_has_disk_zero(lambda, th);
    out["has_disk_zero"] = has;
    if (!lambda.is_zero()) {
        HPComplex z0 = toy_zero_location(lambda, th);
        out["zero_location"] = z0.to_string();
        out["zero_in_disk"] = abs2(z0) < 1.0;
        if (locate && has && lambda.im().is_zero() && lambda.re().sign() > 0) {
            auto f = [&](const HPReal& x) { return toy_kernel(HPComplex(x), lambda, th).re(); };
            HPReal w = pow_si(HPReal(10.0, ctx), -(ctx.digits() - 8));
            out["bisection_zero"] =
                bisect_real(f, HPReal(0.0, ctx), HPReal(1.0, ctx), w).to_string();
        }
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json params{{"lambda_re", lre}, {"lambda_im", lim}, {"theta", theta}};
    emit(g, "toy", params, out.dump(2), ".json", wall);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision weighted Bergman kernels, canonical zero divisors, Green "
                 "functions, and extraneous-zero hunting on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    g.digits = PrecisionContext::from_env().digits();
    app.add_option("--digits", g.digits, "decimal digits of working precision")
        ->capture_default_str();
    app.add_option("--out", g.out_format, "output format: json|csv")->capture_default_str();
    app.add_option("--grid", g.grid, "grid resolution MxN")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_flag("--long-running", g.long_running, "unlock configurations with n > 78");
    app.add_option("--output", g.output, "output file prefix (stdout when omitted)");

    auto* kernel = app.add_subcommand("kernel", "evaluate zero-based kernels");
    std::string zeros_json, zstr = "0 0", wstr = "0 0", method = "auto", rep_out;
    kernel->add_option("--zeros-json", zeros_json, "zero set JSON file")->required();
    kernel->add_option("--z", zstr, "evaluation point '<re> <im>'");
    kernel->add_option("--w", wstr, "second argument '<re> <im>'");
    kernel->add_option("--method", method, "auto|recursive|linsys");
    kernel->add_option("--export-rep", rep_out, "write the coefficient representation JSON");

    auto* hunt = app.add_subcommand("zerohunt", "boundary value scan and zero location");
    std::string h_alpha = "3", h_config;
    int h_n = 6;
    double h_theta = 0.51, h_d = 10.0, h_margin = 1e3;
    bool h_locate = false;
    std::string h_width = "1e-20";
    hunt->add_option("--config", h_config, "JSON file with alpha/n/theta/d[/digits]");
    hunt->add_option("--alpha", h_alpha)->capture_default_str();
    hunt->add_option("--n", h_n)->capture_default_str();
    hunt->add_option("--theta", h_theta)->capture_default_str();
    hunt->add_option("--d", h_d)->capture_default_str();
    hunt->add_flag("--locate", h_locate, "bisect the extraneous zero on (0,1)");
    hunt->add_option("--margin", h_margin, "residual-to-signal margin")->capture_default_str();
    hunt->add_option("--width", h_width, "bisection interval width")->capture_default_str();

    auto* t1 = app.add_subcommand("table1", "reproduce reference configuration rows");
    std::string rows = "1-5";
    double t1_margin = 1e3;
    t1->add_option("--rows", rows, "row selection, e.g. 1-4 or 1,3")->capture_default_str();
    t1->add_option("--margin", t1_margin)->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "alpha sweep at fixed configuration");
    int s_n = 6;
    double s_theta = 0.51, s_d = 10.0;
    std::string s_alphas = "2.5,3,3.5";
    sw->add_option("--n", s_n)->capture_default_str();
    sw->add_option("--theta", s_theta)->capture_default_str();
    sw->add_option("--d", s_d)->capture_default_str();
    sw->add_option("--alphas", s_alphas, "comma-separated list")->capture_default_str();

    auto* lg = app.add_subcommand("levelgrid", "export |K(z,0)| over a rectangle as CSV");
    std::string lg_alpha = "3", lg_window = "0.8,1.0,-0.1,0.1";
    int lg_n = 6;
    double lg_theta = 0.51, lg_d = 10.0;
    lg->add_option("--alpha", lg_alpha)->capture_default_str();
    lg->add_option("--n", lg_n)->capture_default_str();
    lg->add_option("--theta", lg_theta)->capture_default_str();
    lg->add_option("--d", lg_d)->capture_default_str();
    lg->add_option("--window", lg_window, "x0,x1,y0,y1")->capture_default_str();

    auto* mvp = app.add_subcommand("mvp", "mean value property battery");
    std::string m_weight = "standard";
    double m_alpha = 1.0, m_lre = 0.5, m_lim = 0.0, m_theta = -1.0, m_tol = 1e-8;
    int m_mr = 200, m_ntheta = 400;
    mvp->add_option("--weight", m_weight, "standard|divisor|toy")->capture_default_str();
    mvp->add_option("--alpha", m_alpha)->capture_default_str();
    mvp->add_option("--lambda-re", m_lre)->capture_default_str();
    mvp->add_option("--lambda-im", m_lim)->capture_default_str();
    mvp->add_option("--theta", m_theta)->capture_default_str();
    mvp->add_option("--mr", m_mr)->capture_default_str();
    mvp->add_option("--ntheta", m_ntheta)->capture_default_str();
    mvp->add_option("--tol", m_tol)->capture_default_str();

    auto* gr = app.add_subcommand("green", "Green function evaluation and property sweeps");
    std::string g_op = "gamma1", g_z = "0.3 0", g_w = "0 0.2";
    int g_sweep = 0;
    gr->add_option("--op", g_op, "g|gamma|gamma1|bounds|h1|poisson|gammagrid|gamma1grid")
        ->capture_default_str();
    gr->add_option("--z", g_z)->capture_default_str();
    gr->add_option("--w", g_w)->capture_default_str();
    gr->add_option("--sweep", g_sweep, "random positivity/bounds sweep of this many pairs");

    auto* sf = app.add_subcommand("surface", "weights from curvature data, potentials, checks");
    std::string sf_op = "omega1", sf_mu = "zero", sf_z = "0.3 0";
    double sf_r = 0.9, sf_alpha = 1.0, sf_lre = 0.9, sf_lim = 0.0, sf_theta = -1.5, sf_zeta = 0.0;
    int sf_mr = 200, sf_ntheta = 400;
    sf->add_option("--op", sf_op, "omega1|omega1grid|omega0|curvature|potential|normal|verify")
        ->capture_default_str();
    sf->add_option("--mu", sf_mu, "zero|rez|dilated|hyperbolic|pointmass|tab:FILE")
        ->capture_default_str();
    sf->add_option("--r", sf_r)->capture_default_str();
    sf->add_option("--alpha", sf_alpha)->capture_default_str();
    sf->add_option("--lambda-re", sf_lre)->capture_default_str();
    sf->add_option("--lambda-im", sf_lim)->capture_default_str();
    sf->add_option("--theta", sf_theta)->capture_default_str();
    sf->add_option("--z", sf_z)->capture_default_str();
    sf->add_option("--zeta-angle", sf_zeta)->capture_default_str();
    sf->add_option("--mr", sf_mr)->capture_default_str();
    sf->add_option("--ntheta", sf_ntheta)->capture_default_str();

    auto* toy = app.add_subcommand("toy", "closed-form toy weight: predicate and zero");
    double toy_lre = 0.9, toy_lim = 0.0, toy_theta = -1.5;
    bool toy_locate = false;
    toy->add_option("--lambda-re", toy_lre)->capture_default_str();
    toy->add_option("--lambda-im", toy_lim)->capture_default_str();
    toy->add_option("--theta", toy_theta)->capture_default_str();
    toy->add_flag("--locate", toy_locate, "bisect the zero on (0,1) as a cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (kernel->parsed()) return run_kernel(g, zeros_json, zstr, wstr, method, rep_out);
        if (hunt->parsed()) {
            if (!h_config.empty()) {
                std::ifstream f(h_config);
                if (!f) throw std::runtime_error("zerohunt: cannot open " + h_config);
                json j = json::parse(f);
                h_alpha = j.at("alpha").is_string() ? j.at("alpha").get<std::string>()
                                                    : std::to_string(j.at("alpha").get<double>());
                h_n = j.at("n").get<int>();
                h_theta = j.at("theta").get<double>();
                h_d = j.at("d").get<double>();
                if (j.contains("digits")) g.digits = j.at("digits").get<int>();
            }
            return run_zerohunt(g, h_alpha, h_n, h_theta, h_d, h_locate, h_margin, h_width);
        }
        if (t1->parsed()) return run_table1(g, rows, t1_margin);
        if (sw->parsed()) return run_sweep(g, s_n, s_theta, s_d, s_alphas);
        if (lg->parsed()) return run_levelgrid(g, lg_alpha, lg_n, lg_theta, lg_d, lg_window);
        if (mvp->parsed())
            return run_mvp(g, m_weight, m_alpha, m_lre, m_lim, m_theta, m_mr, m_ntheta, m_tol);
        if (gr->parsed()) return run_green(g, g_op, g_z, g_w, g_sweep);
        if (sf->parsed())
            return run_surface(g, sf_op, sf_mu, sf_r, sf_alpha, sf_lre, sf_lim, sf_theta, sf_z,
                               sf_zeta, sf_mr, sf_ntheta);
        if (toy->parsed()) return run_toy(g, toy_lre, toy_lim, toy_theta, toy_locate);
    } catch (const SingularMatrixError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveWeightError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateKernelError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
