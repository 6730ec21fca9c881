#include "bergman/zero_hunt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace bergman {

void HuntConfig::validate() const {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("HuntConfig: n must be even and >= 0");
    if (!(theta > 0.0 && theta < M_PI / 2)) throw std::invalid_argument("HuntConfig: theta in (0, pi/2)");
    if (!(d > 1.0)) throw std::invalid_argument("HuntConfig: d > 1");
    if (digits < 16) throw std::invalid_argument("HuntConfig: digits >= 16");
}

const char* to_string(HuntVerdict v) {
    switch (v) {
        case HuntVerdict::extraneous_zero_found: return "extraneous_zero_found";
        case HuntVerdict::none_found: return "none_found";
        case HuntVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

ZeroSet generate_configuration(const HuntConfig& cfg) {
    cfg.validate();
    PrecisionContext ctx(cfg.digits);
    HPReal alpha(cfg.alpha, ctx);
    HPReal theta(cfg.theta, ctx), d(cfg.d, ctx);

    std::vector<ZeroPoint> pts;
    pts.reserve(cfg.n);
    std::vector<HPComplex> upper;
    for (int k = 1; k <= cfg.n / 2; ++k) {
        HPReal scale = pow_si(d, k - cfg.n / 2) * 3.0;
        // exponent 3 (i - theta) d^{k-n/2}
        HPComplex e{-(theta * scale), scale};
        upper.push_back(exp(e));
    }
    for (const auto& a : upper) pts.push_back({a, 1});
    for (const auto& a : upper) pts.push_back({a.conj(), 1});
    return ZeroSet(std::move(pts), alpha);
}

HuntResult boundary_value_scan(const HuntConfig& cfg, double margin) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(cfg.digits);
    ZeroSet A = generate_configuration(cfg);

    HuntResult out{cfg,
                   KernelRep{A.alpha(), A, {}, HPReal(ctx), HPReal(ctx)},
                   HPReal(ctx),
                   HuntVerdict::inconclusive,
                   std::nullopt,
                   0.0};
    try {
        out.rep = kernel_linear_system(A);
    } catch (const SingularMatrixError&) {
        out.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;  // inconclusive
    }

    HPComplex k1 = out.rep.eval(HPComplex(1.0, 0.0, ctx));
    out.boundary_value = k1.re();
    HPReal floor = out.rep.zero_residual * margin;
    if (abs(k1.im()) > max(floor, HPReal(1e-300, ctx))) {
        out.verdict = HuntVerdict::inconclusive;
    } else if (out.boundary_value.sign() < 0 && abs(out.boundary_value) >= floor) {
        out.verdict = HuntVerdict::extraneous_zero_found;
    } else if (out.boundary_value.sign() > 0 && out.boundary_value >= floor) {
        out.verdict = HuntVerdict::none_found;
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

HPReal bisect_real(const std::function<HPReal(const HPReal&)>& f, HPReal lo, HPReal hi,
                   const HPReal& width) {
    HPReal flo = f(lo), fhi = f(hi);
    if (flo.sign() == 0) return lo;
    if (fhi.sign() == 0) return hi;
    if (flo.sign() == fhi.sign())
        throw NoSignChangeError("bisect_real: endpoints agree in sign");
    for (int it = 0; it < 100000; ++it) {
        if (hi - lo <= width) break;
        HPReal mid = (lo + hi) * 0.5;
        HPReal fm = f(mid);
        if (fm.sign() == 0) return mid;
        if (fm.sign() == flo.sign()) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) * 0.5;
}

HPReal locate_extraneous_zero(const HuntResult& scan, const std::string& width) {
    PrecisionContext ctx(scan.config.digits);
    if (!scan.rep.zeros.symmetric())
        throw std::domain_error("locate_extraneous_zero: configuration must be conjugation-symmetric");
    if (!(scan.boundary_value.sign() < 0))
        throw NoSignChangeError("locate_extraneous_zero: boundary value is not negative");
    HPReal w(width, ctx);
    auto f = [&](const HPReal& x) { return scan.rep.eval(HPComplex(x)).re(); };
    HPReal x0 = bisect_real(f, HPReal(0.0, ctx), HPReal(1.0, ctx), w);
    for (const auto& p : scan.rep.zeros.points()) {
        if (abs(HPComplex(x0) - p.location) < w * 10.0)
            throw std::domain_error("locate_extraneous_zero: hit a prescribed zero");
    }
    return x0;
}

std::string HuntResult::to_json() const {
    nlohmann::json j;
    j["alpha"] = config.alpha;
    j["n"] = config.n;
    j["theta"] = config.theta;
    j["d"] = config.d;
    j["digits"] = config.digits;
    j["boundary_value"] = boundary_value.to_string();
    j["zero_residual"] = rep.zero_residual.to_string();
    j["solve_residual"] = rep.solve_residual.to_string();
    j["verdict"] = to_string(verdict);
    if (located_zero) j["located_zero"] = located_zero->to_string();
    j["wall_seconds"] = wall_seconds;
    return j.dump(2);
}

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {"3", 6, 0.51, 10.0},       {"2.5", 8, 0.48, 8.0},      {"2", 14, 0.351, 3.0},
        {"1.6", 26, 0.265, 2.1},    {"1.25", 78, 0.176, 1.52},  {"1.118", 230, 0.104, 1.22},
        {"1.1072", 272, 0.092, 1.183}, {"1.097", 340, 0.07725, 1.141}, {"1.065", 550, 0.07, 1.13},
        {"1.053", 770, 0.0556, 1.09},  {"1.046", 944, 0.0497, 1.078},  {"1.043", 1090, 0.0445, 1.067},
        {"1.04", 1500, 0.033, 1.045},
    };
    return rows;
}

std::vector<Table1Entry> table1_reproduce(const std::vector<int>& rows, int digits,
                                          bool long_running, double margin) {
    const auto& all = table1_rows();
    std::vector<Table1Entry> out;
    for (int idx : rows) {
        if (idx < 0 || idx >= static_cast<int>(all.size()))
            throw std::invalid_argument("table1_reproduce: row index out of range");
        Table1Entry e{all[idx], false, "", std::nullopt};
        if (all[idx].n > 78 && !long_running) {
            e.skip_reason = "n > 78: desk-scale cutoff, rerun with the long-running flag";
            out.push_back(std::move(e));
            continue;
        }
        HuntConfig cfg{all[idx].alpha, all[idx].n, all[idx].theta, all[idx].d, digits};
        e.result = boundary_value_scan(cfg, margin);
        e.ran = true;
        out.push_back(std::move(e));
    }
    return out;
}

LevelGrid level_grid_export(const KernelRep& rep, double x0, double x1, double y0, double y1,
                            int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("level_grid_export: need at least 2x2");
    for (double cx : {x0, x1})
        for (double cy : {y0, y1})
            if (cx * cx + cy * cy > 1.0 + 1e-12)
                throw std::invalid_argument("level_grid_export: window leaves the closed disk");
    PrecisionContext ctx(std::max(16, static_cast<int>((rep.alpha.prec() - 4) / 3.32)));
    LevelGrid g{x0, x1, y0, y1, nx, ny, {}};
    g.values.reserve(static_cast<size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        double x = x0 + (x1 - x0) * i / (nx - 1);
        for (int j = 0; j < ny; ++j) {
            double y = y0 + (y1 - y0) * j / (ny - 1);
            g.values.push_back(abs(rep.eval(HPComplex(x, y, ctx))).to_double());
        }
    }
    return g;
}

std::string LevelGrid::to_csv() const {
    std::string out = "x,y,value\n";
    char buf[96];
    for (int i = 0; i < nx; ++i) {
        double x = x0 + (x1 - x0) * i / (nx - 1);
        for (int j = 0; j < ny; ++j) {
            double y = y0 + (y1 - y0) * j / (ny - 1);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, y,
                          values[static_cast<size_t>(i) * ny + j]);
            out += buf;
        }
    }
    return out;
}

std::vector<SweepPoint> alpha_sweep(const HuntConfig& base, const std::vector<std::string>& alphas,
                                    double margin) {
    std::vector<SweepPoint> out;
    out.reserve(alphas.size());
    for (const auto& a : alphas) {
        HuntConfig cfg = base;
        cfg.alpha = a;
        HuntResult r = boundary_value_scan(cfg, margin);
        out.push_back({a, r.boundary_value, r.rep.zero_residual, r.verdict});
    }
    return out;
}

}  // namespace bergman
