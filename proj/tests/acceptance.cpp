// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit status is the number of failed criteria. The optional
// --long-running flag additionally reports (without asserting) the
// configurations beyond desk scale.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <random>
#include <vector>

#include "bergman/quadrature.hpp"
#include "bergman/surface.hpp"
#include "bergman/zero_hunt.hpp"

using namespace bergman;
using cd = std::complex<double>;

namespace {

PrecisionContext ctx40(40);
int failures = 0;

HPReal hp(double x) { return HPReal(x, ctx40); }
HPComplex hpc(double re, double im = 0.0) { return HPComplex(re, im, ctx40); }

struct Criterion {
    const char* name;
    bool pass = true;
    std::string detail;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Criterion(const char* n) : name(n) {}
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass) {
            std::printf("[PASS] %s (%.1fs)%s%s\n", name, secs, detail.empty() ? "" : " -- ",
                        detail.c_str());
        } else {
            std::printf("[FAIL] %s (%.1fs) -- %s\n", name, secs, detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

double rel_diff(const HPComplex& a, const HPComplex& b) {
    HPReal d = abs(a - b);
    HPReal s = max(abs(a), abs(b));
    if (s.is_zero()) return d.to_double();
    return (d / s).to_double();
}

const DiskRule& rule200() {
    static const DiskRule r = build_disk_rule(200, 400, ctx40);
    return r;
}

void criterion_1_table_small_rows() {
    Criterion c("criterion 1: reference rows alpha in {3, 2.5, 2, 1.6} at 40 digits");
    char buf[160];
    for (int idx : {0, 1, 2, 3}) {
        const Table1Row& row = table1_rows()[idx];
        HuntConfig cfg{row.alpha, row.n, row.theta, row.d, 40};
        HuntResult r = boundary_value_scan(cfg);
        bool neg = r.boundary_value.sign() < 0;
        bool margin = abs(r.boundary_value) >= r.rep.zero_residual * 1e3;
        c.require(neg, "boundary value not negative at alpha=" + row.alpha);
        c.require(margin, "margin below 1e3 x residual at alpha=" + row.alpha);
        c.require(r.verdict == HuntVerdict::extraneous_zero_found,
                  "verdict mismatch at alpha=" + row.alpha);
        c.require(r.wall_seconds < 60.0, "row exceeded 60 s at alpha=" + row.alpha);
        if (idx == 0) {
            std::snprintf(buf, sizeof buf, "K(1,0)=%.6e, residual=%.2e",
                          r.boundary_value.to_double(), r.rep.zero_residual.to_double());
            c.detail = buf;
        }
    }
    c.finish();
}

void criterion_2_medium_row(bool long_running) {
    Criterion c("criterion 2: alpha=1.25, n=78 within five minutes");
    const Table1Row& row = table1_rows()[4];
    HuntConfig cfg{row.alpha, row.n, row.theta, row.d, 40};
    HuntResult r = boundary_value_scan(cfg);
    c.require(r.verdict == HuntVerdict::extraneous_zero_found, "verdict mismatch at n=78");
    c.require(r.wall_seconds < 300.0, "n=78 scan exceeded 300 s");
    char buf[120];
    std::snprintf(buf, sizeof buf, "K(1,0)=%.6e in %.1fs", r.boundary_value.to_double(),
                  r.wall_seconds);
    c.detail = buf;
    c.finish();
    if (long_running) {
        for (int idx = 5; idx < static_cast<int>(table1_rows().size()); ++idx) {
            const Table1Row& big = table1_rows()[idx];
            HuntConfig bcfg{big.alpha, big.n, big.theta, big.d, 40};
            HuntResult br = boundary_value_scan(bcfg);
            std::printf("[info] long-running row alpha=%s n=%d: %s, K(1,0)=%.6e (%.1fs)\n",
                        big.alpha.c_str(), big.n, to_string(br.verdict),
                        br.boundary_value.to_double(), br.wall_seconds);
        }
    }
}

void criterion_3_cross_method() {
    Criterion c("criterion 3: cross-method kernel oracle, 20 random zero sets");
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> U(-0.9, 0.9);
    auto disk_point = [&] {
        while (true) {
            double x = U(rng), y = U(rng);
            if (x * x + y * y < 0.81) return hpc(x, y);
        }
    };
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<ZeroPoint> pts;
        while (static_cast<int>(pts.size()) < n) pts.push_back({disk_point(), 1});
        ZeroSet A(pts, hp(0.5 + 2.5 * (rng() % 1024) / 1024.0));
        KernelRep lin = kernel_linear_system(A);
        for (int k = 0; k < 10; ++k) {
            HPComplex z = disk_point();
            HPComplex v1 = kernel_recursive(A, z, hpc(0.0));
            HPComplex v2 = lin.eval(z);
            HPComplex v3 = kernel_with_multiplicity(A, z, hpc(0.0));
            worst = std::max({worst, rel_diff(v1, v2), rel_diff(v1, v3)});
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "worst relative spread %.2e", worst);
    c.detail = buf;
    c.require(worst <= 1e-25, c.detail);
    c.finish();
}

void criterion_4_mvp_battery() {
    Criterion c("criterion 4: mean value property battery at 1e-8 (200x400)");
    double worst = 0.0;
    for (double a : {1.0, 2.0}) {
        WeightSpec w = WeightSpec::standard(hp(a));
        worst = std::max(worst, mvp_max_defect(rule200(), w.weight_fn_d()));
    }
    for (cd lam : {cd(0.3, 0.0), cd(0.5, 0.0), cd(0.0, 0.7)}) {
        auto w = [lam](cd z) {
            return std::norm(extremal_function_d(z, lam, 1.0)) * 2.0 * (1.0 - std::norm(z));
        };
        worst = std::max(worst, mvp_max_defect(rule200(), w));
    }
    ZeroSet A({{hpc(0.35), 1}, {hpc(-0.25, 0.3), 1}}, hp(1.0));
    WeightSpec zw = WeightSpec::zero_weighted(A);
    worst = std::max(worst, mvp_max_defect(rule200(), zw.lambda_multiplier_fn_d()));
    char buf[80];
    std::snprintf(buf, sizeof buf, "worst defect %.2e", worst);
    c.detail = buf;
    c.require(worst <= 1e-8, c.detail);
    c.finish();
}

void criterion_5_green_suite() {
    Criterion c("criterion 5: weighted biharmonic kernel positivity, bounds, PDE");
    std::mt19937_64 rng(515151);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto sample = [&] {
        while (true) {
            cd z(U(rng), U(rng));
            if (std::norm(z) < 1.0) return z;
        }
    };
    HPReal slack = pow_si(hp(10.0), -34);
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
        cd zd = sample(), wd = sample();
        HPComplex z = hpc(zd.real(), zd.imag()), w = hpc(wd.real(), wd.imag());
        HPReal g1 = weighted_gamma1(z, w);
        auto b = gamma1_bounds(z, w);
        if (g1 < -slack || g1 < b.lower - slack || g1 > b.upper + slack) ++violations;
    }
    c.require(violations == 0,
              "positivity/bounds violations: " + std::to_string(violations) + " of 10000");

    // Discrete PDE: Delta_z Gamma1 = (1-|z|^2)(G + H1) off a 0.05-disk around w.
    HPReal h = pow_si(hp(10.0), -13);
    double worst = 0.0;
    for (cd wd : {cd(0.0, 0.0), cd(0.4, 0.0), cd(0.0, 0.5)}) {
        HPComplex w = hpc(wd.real(), wd.imag());
        for (int i = 0; i < 101; ++i) {
            double x = -1.0 + 2.0 * i / 100;
            for (int j = 0; j < 101; ++j) {
                double y = -1.0 + 2.0 * j / 100;
                cd zd(x, y);
                if (std::norm(zd) >= 0.9801) continue;  // stencil stays interior
                if (std::norm(zd - wd) < 0.0025) continue;
                HPComplex z = hpc(x, y);
                auto G1 = [&](const HPComplex& p) { return weighted_gamma1(p, w); };
                HPComplex hx{h, hp(0.0)};
                HPComplex hy{hp(0.0), h};
                HPReal lap = (G1(z + hx) + G1(z - hx) + G1(z + hy) + G1(z - hy) - 4.0 * G1(z)) /
                             (4.0 * h * h);
                HPReal rhs = (hp(1.0) - abs2(z)) * (green_G(z, w) + h1_harmonic(z, w));
                worst = std::max(worst, std::abs((lap - rhs).to_double()));
            }
        }
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "worst PDE defect %.2e", worst);
    if (c.pass) c.detail = buf;
    c.require(worst <= 1e-6, buf);
    c.finish();
}

void criterion_6_expansive() {
    Criterion c("criterion 6: expansive multiplier margins above -1e-8");
    auto mult_div = [](cd z) { return std::norm(extremal_function_d(z, cd(0.5, 0.0), 1.0)); };
    ZeroSet A({{hpc(0.35), 1}, {hpc(-0.25, 0.3), 1}}, hp(1.0));
    WeightSpec zw = WeightSpec::zero_weighted(A);
    auto lam_mult_density = zw.lambda_multiplier_fn_d();
    auto mult_lambda = [lam_mult_density](cd z) {
        return lam_mult_density(z) / (2.0 * (1.0 - std::norm(z)));
    };

    std::vector<RealField> test_u;
    test_u.push_back([](cd) { return 1.0; });
    test_u.push_back([](cd z) { return std::norm(z); });
    std::mt19937_64 rng(616161);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::array<cd, 5> coef;
        for (auto& ck : coef) ck = cd(U(rng), U(rng));
        test_u.push_back([coef](cd z) {
            cd p = 0.0, zp = 1.0;
            for (const auto& ck : coef) {
                p += ck * zp;
                zp *= z;
            }
            return std::norm(p);
        });
    }

    double worst = 0.0;
    for (const auto& u : test_u) {
        worst = std::min(worst, expansive_check(rule200(), u, mult_div));
        worst = std::min(worst, expansive_check(rule200(), u, mult_lambda));
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "worst margin %.2e", worst);
    c.detail = buf;
    c.require(worst >= -1e-8, c.detail);
    c.finish();
}

void criterion_7_toy_exactness() {
    Criterion c("criterion 7: toy predicate grid and thirty-digit root match");
    int mismatches = 0;
    double worst_root = 0.0;
    for (int i = 1; i <= 50; ++i) {
        double lam = i / 51.0;
        for (int j = 1; j <= 50; ++j) {
            double theta = -2.0 + 2.0 * j / 51.0;
            bool expect = (theta > -2.0) && (theta < -2.0 / (1.0 + lam));
            HPComplex l = hpc(lam);
            HPReal th = hp(theta);
            bool got = toy_has_disk_zero(l, th);
            if (got != expect) ++mismatches;
            if (got) {
                auto f = [&](const HPReal& x) { return toy_kernel(HPComplex(x), l, th).re(); };
                HPReal x = bisect_real(f, hp(0.0), hp(1.0), pow_si(hp(10.0), -32));
                HPReal expect_root = toy_zero_location(l, th).re();
                worst_root = std::max(worst_root, abs(x - expect_root).to_double());
            }
        }
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "mismatches %d, worst root gap %.2e", mismatches, worst_root);
    c.detail = buf;
    c.require(mismatches == 0, c.detail);
    c.require(worst_root <= 1e-30, c.detail);
    c.finish();
}

void criterion_8_curvature_roundtrip() {
    Criterion c("criterion 8: curvature round trip 1e-4 and Poincare at 1e-6");
    std::vector<CurvatureData> data;
    data.push_back(CurvatureData::zero());
    data.push_back(CurvatureData::re_part());
    data.push_back(CurvatureData::dilated_hyperbolic(0.9, 1.0));
    double worst = 0.0;
    for (const auto& mu : data) {
        for (int i = 0; i < 21; ++i) {
            double x = -0.95 + 1.9 * i / 20;
            for (int j = 0; j < 21; ++j) {
                double y = -0.95 + 1.9 * j / 20;
                cd z(x, y);
                if (std::norm(z) > 0.9025) continue;
                double rec = curvature_from_mu_roundtrip(mu, rule200(), z, 5e-4);
                double target = (mu.kind() == CurvatureData::Kind::zero) ? 0.0 : mu.value_d(z);
                worst = std::max(worst, std::abs(rec - target));
            }
        }
    }
    c.require(worst <= 1e-4, "round-trip max defect " + std::to_string(worst));

    HPReal h = pow_si(hp(10.0), -10);
    HPField poincare = [](const HPComplex& z) {
        HPReal u = HPReal(1.0, ctx40) - abs2(z);
        return HPReal(4.0, ctx40) / (u * u);
    };
    MetricGrid pg = MetricGrid::general(poincare, poincare,
                                        [](const HPComplex&) { return HPReal(0.0, ctx40); },
                                        65, 65, ctx40, h);
    double worst_kappa = 0.0;
    for (cd zd : {cd(0.0, 0.0), cd(0.5, 0.2), cd(-0.3, 0.6), cd(0.0, 0.9)}) {
        HPComplex z = hpc(zd.real(), zd.imag());
        worst_kappa =
            std::max(worst_kappa, std::abs(curvature_isothermal(poincare, z, h).to_double() + 1.0));
        worst_kappa = std::max(worst_kappa, std::abs(brioschi_curvature(pg, z).to_double() + 1.0));
    }
    char buf[110];
    std::snprintf(buf, sizeof buf, "round trip %.2e, Poincare defect %.2e", worst, worst_kappa);
    c.detail = buf;
    c.require(worst_kappa <= 1e-6, c.detail);
    c.finish();
}

void criterion_9_mpot_verification() {
    Criterion c("criterion 9: clamped boundary system for the flat and standard weights");
    HPField one_hp = [](const HPComplex&) { return HPReal(1.0, ctx40); };
    auto one_d = [](cd) { return 1.0; };
    MetricGrid grid = MetricGrid::isothermal(one_hp, 257, 257, ctx40);
    MpotReport r1 = verify_mpot_system(one_hp, one_d, CurvatureData::zero(), grid, rule200());

    double a = 1.0;
    HPField w_hp = [a](const HPComplex& z) {
        return (HPReal(a, ctx40) + 1.0) * pow(HPReal(1.0, ctx40) - abs2(z), HPReal(a, ctx40));
    };
    auto w_d = [a](cd z) { return (a + 1.0) * std::pow(1.0 - std::norm(z), a); };
    MetricGrid grid2 = MetricGrid::isothermal(w_hp, 257, 257, ctx40);
    MpotReport r2 =
        verify_mpot_system(w_hp, w_d, CurvatureData::hyperbolic(a), grid2, rule200());

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "defects flat (%.1e, %.1e, %.1e), standard (%.1e, %.1e, %.1e)", r1.pde_defect,
                  r1.boundary_defect, r1.normal_defect, r2.pde_defect, r2.boundary_defect,
                  r2.normal_defect);
    c.detail = buf;
    for (const auto& r : {r1, r2}) {
        c.require(r.pde_defect <= 1e-6, c.detail);
        c.require(r.boundary_defect <= 1e-8, c.detail);
        c.require(r.normal_defect <= 1e-6, c.detail);
    }
    c.finish();
}

void criterion_10_precision_scaling() {
    Criterion c("criterion 10: sixty digits shrink the residual ten orders");
    HuntResult r40 = boundary_value_scan(HuntConfig{"3", 6, 0.51, 10.0, 40});
    HuntResult r60 = boundary_value_scan(HuntConfig{"3", 6, 0.51, 10.0, 60});
    double rat = r60.rep.zero_residual.to_double() > 0.0
                     ? r40.rep.zero_residual.to_double() / r60.rep.zero_residual.to_double()
                     : 1e300;
    char buf[120];
    std::snprintf(buf, sizeof buf, "residual 40d %.2e vs 60d %.2e (ratio %.1e)",
                  r40.rep.zero_residual.to_double(), r60.rep.zero_residual.to_double(), rat);
    c.detail = buf;
    c.require(r60.verdict == HuntVerdict::extraneous_zero_found, "verdict changed at 60 digits");
    c.require(rat >= 1e10, c.detail);
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    bool long_running = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long-running") == 0) long_running = true;

    criterion_1_table_small_rows();
    criterion_2_medium_row(long_running);
    criterion_3_cross_method();
    criterion_4_mvp_battery();
    criterion_5_green_suite();
    criterion_6_expansive();
    criterion_7_toy_exactness();
    criterion_8_curvature_roundtrip();
    criterion_9_mpot_verification();
    criterion_10_precision_scaling();

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
