#include <doctest.h>

#include <random>

#include "bergman/quadrature.hpp"

using namespace bergman;
using cd = std::complex<double>;

namespace {

PrecisionContext ctx40(40);

HPReal hp(double x) { return HPReal(x, ctx40); }
HPComplex hpc(double re, double im = 0.0) { return HPComplex(re, im, ctx40); }

const DiskRule& rule200() {
    static const DiskRule r = build_disk_rule(200, 400, ctx40);
    return r;
}

}  // namespace

TEST_CASE("rule rejects degenerate sizes") {
    CHECK_THROWS_AS(build_disk_rule(1, 64, ctx40), std::invalid_argument);
    CHECK_THROWS_AS(build_disk_rule(16, 2, ctx40), std::invalid_argument);
}

TEST_CASE("weights sum to one at context precision") {
    DiskRule r = build_disk_rule(50, 16, ctx40);
    HPReal sum(ctx40);
    for (const auto& w : r.radial_weights()) sum += w;
    CHECK(abs(sum - hp(1.0)).to_double() < 1e-20);

    HPComplex one = integrate_disk(r, [&](const HPComplex&) { return hpc(1.0); });
    CHECK(abs(one - hpc(1.0)).to_double() < 1e-20);
}

TEST_CASE("plain moments") {
    DiskRule r = build_disk_rule(50, 64, ctx40);
    double m2 = integrate_disk_real_d(r, [](cd z) { return std::norm(z); });
    CHECK(std::abs(m2 - 0.5) < 1e-14);
    double mass = integrate_disk_real_d(
        r, [](cd z) { return 2.0 * (1.0 - std::norm(z)); });
    CHECK(std::abs(mass - 1.0) < 1e-14);
    double rez = integrate_disk_real_d(r, [](cd z) { return z.real(); });
    CHECK(std::abs(rez) < 1e-16);
}

TEST_CASE("monomial exactness within the stated order window") {
    DiskRule r = build_disk_rule(20, 64, ctx40);
    for (int j = 0; j <= 10; ++j) {
        for (int k = 0; k <= 10; ++k) {
            cd v = integrate_disk_d(r, [&](cd z) {
                return std::pow(z, j) * std::pow(std::conj(z), k);
            });
            cd expect = (j == k) ? cd(1.0 / (j + 1), 0.0) : cd(0.0, 0.0);
            CHECK(std::abs(v - expect) < 1e-14);
        }
    }
}

TEST_CASE("refinement shrinks the defect on a smooth integrand") {
    auto f = [](cd z) { return std::exp(-std::norm(z)) * (1.0 + z.real()); };
    DiskRule r1 = build_disk_rule(8, 64, ctx40);
    DiskRule r2 = build_disk_rule(16, 64, ctx40);
    double exact = integrate_disk_real_d(build_disk_rule(64, 64, ctx40), f);
    double e1 = std::abs(integrate_disk_real_d(r1, f) - exact);
    double e2 = std::abs(integrate_disk_real_d(r2, f) - exact);
    CHECK(e2 < e1 * 0.5 + 1e-15);
}

TEST_CASE("double twin of the canonical divisor matches the high-precision form") {
    for (cd z : {cd(0.2, 0.1), cd(-0.4, 0.5), cd(0.0, 0.0)}) {
        HPComplex phi = extremal_function(hpc(z.real(), z.imag()), hpc(0.5), hp(1.0));
        CHECK(std::abs(phi.to_complex_double() - extremal_function_d(z, cd(0.5, 0.0), 1.0)) <
              1e-14);
        HPComplex dphi =
            extremal_function_derivative(hpc(z.real(), z.imag()), hpc(0.5), hp(1.0));
        CHECK(std::abs(dphi.to_complex_double() -
                       extremal_function_derivative_d(z, cd(0.5, 0.0), 1.0)) < 1e-13);
    }
}

TEST_CASE("divisor-squared weight reproduces constants (unit mass)") {
    auto w = [](cd z) {
        return std::norm(extremal_function_d(z, cd(0.5, 0.0), 1.0)) * 2.0 * (1.0 - std::norm(z));
    };
    double mass = integrate_disk_real_d(rule200(), w);
    CHECK(std::abs(mass - 1.0) < 1e-8);
}

TEST_CASE("mean value property battery: standard weights") {
    for (double a : {1.0, 2.0}) {
        WeightSpec w = WeightSpec::standard(hp(a));
        CHECK(mvp_max_defect(rule200(), w.weight_fn_d()) < 1e-12);
    }
}

TEST_CASE("mean value property battery: squared canonical divisors") {
    for (cd lam : {cd(0.3, 0.0), cd(0.5, 0.0), cd(0.0, 0.7)}) {
        auto w = [lam](cd z) {
            return std::norm(extremal_function_d(z, lam, 1.0)) * 2.0 * (1.0 - std::norm(z));
        };
        CHECK(mvp_max_defect(rule200(), w) < 1e-8);
    }
}

TEST_CASE("mean value property battery: lambda multiplier of a 2-point weight") {
    ZeroSet A({{hpc(0.35), 1}, {hpc(-0.25, 0.3), 1}}, hp(1.0));
    WeightSpec w = WeightSpec::zero_weighted(A);
    // Lambda_omega * 2(1-|z|^2) plays the weight role.
    CHECK(mvp_max_defect(rule200(), w.lambda_multiplier_fn_d()) < 1e-8);
}

TEST_CASE("weighted norms") {
    CHECK(std::abs(weighted_norm(rule200(), [](cd) { return cd(1.0, 0.0); }, 1.0) - 1.0) < 1e-12);
    double nz = weighted_norm(rule200(), [](cd z) { return z; }, 1.0);
    CHECK(std::abs(nz - 1.0 / std::sqrt(3.0)) < 1e-12);

    double nphi = weighted_norm(
        rule200(), [](cd z) { return extremal_function_d(z, cd(0.5, 0.0), 1.0); }, 1.0);
    CHECK(std::abs(nphi - 1.0) < 1e-8);
}

TEST_CASE("reproducing checks against the standard weight") {
    WeightSpec w = WeightSpec::standard(hp(1.0));
    CHECK(reproducing_check(rule200(), w, [](cd) { return cd(1.0, 0.0); }, cd(0.0, 0.0)) < 1e-12);
    CHECK(reproducing_check(rule200(), w, [](cd z) { return z * z; }, cd(0.3, 0.0)) < 1e-8);

    auto phi = [](cd z) { return extremal_function_d(z, cd(0.5, 0.0), 1.0); };
    CHECK(reproducing_check(rule200(), w, phi, cd(0.5, 0.0)) < 1e-8);
}

TEST_CASE("reproducing check on the toy weight") {
    // Smooth branch (theta = 2: the weight is |Moebius|^2).
    WeightSpec w = WeightSpec::toy(hpc(0.4), hp(2.0));
    CHECK(reproducing_check(rule200(), w, [](cd) { return cd(1.0, 0.0); }, cd(0.0, 0.0)) < 1e-7);
    CHECK(reproducing_check(rule200(), w, [](cd z) { return z; }, cd(0.2, 0.1)) < 1e-7);
    // Negative powers put an integrable singularity at lambda; the plain rule
    // converges only algebraically there.
    WeightSpec ws = WeightSpec::toy(hpc(0.4), hp(-0.8));
    CHECK(reproducing_check(rule200(), ws, [](cd) { return cd(1.0, 0.0); }, cd(0.0, 0.0)) < 2e-3);
}

TEST_CASE("expansive margins for the divisor multiplier") {
    auto mult = [](cd z) { return std::norm(extremal_function_d(z, cd(0.5, 0.0), 1.0)); };
    CHECK(std::abs(expansive_check(rule200(), [](cd) { return 1.0; }, mult)) < 1e-8);
    CHECK(expansive_check(rule200(), [](cd z) { return std::norm(z); }, mult) > -1e-8);

    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        std::array<cd, 5> c;
        for (auto& ck : c) ck = cd(U(rng), U(rng));
        auto u = [c](cd z) {
            cd p = 0.0, zp = 1.0;
            for (const auto& ck : c) {
                p += ck * zp;
                zp *= z;
            }
            return std::norm(p);
        };
        CHECK(expansive_check(rule200(), u, mult) > -1e-8);
    }
}

TEST_CASE("expansive margins for the lambda multiplier") {
    ZeroSet A({{hpc(0.35), 1}, {hpc(-0.25, 0.3), 1}}, hp(1.0));
    WeightSpec w = WeightSpec::zero_weighted(A);
    auto lam_mult = w.lambda_multiplier_fn_d();
    // Multiplier = Lambda * 2(1-|z|^2); divide the density back out.
    auto mult = [lam_mult](cd z) { return lam_mult(z) / (2.0 * (1.0 - std::norm(z))); };
    CHECK(std::abs(expansive_check(rule200(), [](cd) { return 1.0; }, mult)) < 1e-8);
    CHECK(expansive_check(rule200(), [](cd z) { return std::norm(z); }, mult) > -1e-8);
}

TEST_CASE("green potential: zero density, sign, boundary decay") {
    auto zero = [](cd) { return 0.0; };
    CHECK(potential_via_green(rule200(), zero, cd(0.3, 0.2)) == 0.0);

    auto density = [](cd z) {
        return (std::norm(extremal_function_d(z, cd(0.5, 0.0), 1.0)) - 1.0) *
               (1.0 - std::norm(z));
    };
    double prev = 1e9;
    for (double r : {0.5, 0.8, 0.95, 0.995}) {
        double v = std::abs(potential_via_green(rule200(), density, cd(r, 0.0)));
        CHECK(v < prev + 1e-6);
        prev = v;
    }
    CHECK(std::abs(potential_via_green(rule200(), density, cd(0.995, 0.0))) < 2e-3);

    auto pos = [](cd z) { return 1.0 + z.real() * z.real(); };
    CHECK(potential_via_green(rule200(), pos, cd(0.4, -0.3)) < 0.0);
}

TEST_CASE("green potential: two representations of the divisor potential agree") {
    auto density = [](cd z) {
        return (std::norm(extremal_function_d(z, cd(0.5, 0.0), 1.0)) - 1.0) *
               (1.0 - std::norm(z));
    };
    auto dphi2 = [](cd z) {
        return std::norm(extremal_function_derivative_d(z, cd(0.5, 0.0), 1.0));
    };
    DiskRule fine = build_disk_rule(400, 512, ctx40);
    for (cd z : {cd(0.0, 0.0), cd(0.3, 0.1), cd(-0.2, 0.4), cd(0.5, -0.3), cd(0.7, 0.0)}) {
        double via_g = potential_via_green(fine, density, z);
        double via_gamma1 = integrate_disk_real_d(
            fine, [&](cd w) { return weighted_gamma1_d(z, w) * dphi2(w); });
        CHECK(via_g >= -1e-8);
        CHECK(std::abs(via_g - via_gamma1) < 1e-5);
    }
}

TEST_CASE("rule JSON export carries decimal strings") {
    DiskRule r = build_disk_rule(4, 8, ctx40);
    std::string j = r.to_json();
    CHECK(j.find("radial_nodes") != std::string::npos);
    CHECK(j.find("radial_weights") != std::string::npos);
    CHECK(j.find("e-") != std::string::npos);
}
