#include <doctest.h>

#include <random>

#include "bergman/kernels.hpp"
#include "bergman/weights.hpp"

using namespace bergman;

namespace {

PrecisionContext ctx40(40);

HPReal hp(double x) { return HPReal(x, ctx40); }
HPComplex hpc(double re, double im = 0.0) { return HPComplex(re, im, ctx40); }

double rel_diff(const HPComplex& a, const HPComplex& b) {
    HPReal d = abs(a - b);
    HPReal s = max(abs(a), abs(b));
    if (s.is_zero()) return d.to_double();
    return (d / s).to_double();
}

std::vector<ZeroPoint> random_points(std::mt19937_64& rng, int n, double radius = 0.9) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<ZeroPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        double x = U(rng) * radius, y = U(rng) * radius;
        if (x * x + y * y < radius * radius) pts.push_back({hpc(x, y), 1});
    }
    return pts;
}

HPComplex random_disk_point(std::mt19937_64& rng, double radius = 0.9) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    while (true) {
        double x = U(rng) * radius, y = U(rng) * radius;
        if (x * x + y * y < radius * radius) return hpc(x, y);
    }
}

}  // namespace

TEST_CASE("unweighted kernel basics") {
    CHECK(rel_diff(bergman_kernel(hpc(0.0), hpc(0.0), hp(1.3)), hpc(1.0)) == 0.0);
    CHECK(rel_diff(bergman_kernel(hpc(0.4, 0.2), hpc(0.0), hp(2.0)), hpc(1.0)) == 0.0);
    // (0.5, 0.5, 1): 1/(1 - 0.25)^3
    HPComplex k = bergman_kernel(hpc(0.5), hpc(0.5), hp(1.0));
    CHECK(rel_diff(k, HPComplex(hp(1.0) / pow_si(hp(0.75), 3))) < 1e-38);
    CHECK(k.re().to_double() == doctest::Approx(2.3703703703703).epsilon(1e-12));
}

TEST_CASE("unweighted kernel rejects boundary pairs") {
    CHECK_THROWS_AS(bergman_kernel(hpc(1.0), hpc(0.0, 1.0), hp(1.0)), std::domain_error);
    CHECK_NOTHROW(bergman_kernel(hpc(1.0), hpc(0.3), hp(1.0)));
}

TEST_CASE("kernel Hermitian symmetry on random pairs") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 20; ++k) {
        HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
        HPReal alpha = hp(0.5 + 3.0 * (rng() % 1000) / 1000.0);
        CHECK(rel_diff(bergman_kernel(z, w, alpha), bergman_kernel(w, z, alpha).conj()) < 1e-37);
    }
}

TEST_CASE("one-point kernel vanishes at its zero and matches the closed form at w=0") {
    HPComplex lam = hpc(0.3, 0.4);
    HPReal alpha = hp(1.5);
    CHECK(abs(one_point_kernel(lam, hpc(0.2, -0.1), lam, alpha)).to_double() < 1e-37);

    HPComplex z = hpc(-0.25, 0.6);
    HPReal s = alpha + 2.0;
    HPComplex expect =
        hpc(1.0) - HPComplex(pow(hp(1.0) - abs2(lam), s)) / cpow_real(hpc(1.0) - z * lam.conj(), s);
    CHECK(rel_diff(one_point_kernel(z, hpc(0.0), lam, alpha), expect) < 1e-36);
}

TEST_CASE("one-point kernel agrees with the recursion") {
    std::mt19937_64 rng(37);
    HPComplex lam = hpc(0.5, -0.2);
    ZeroSet A({{lam, 1}}, hp(2.0));
    for (int k = 0; k < 5; ++k) {
        HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
        CHECK(rel_diff(kernel_recursive(A, z, w), one_point_kernel(z, w, lam, hp(2.0))) < 1e-30);
    }
}

TEST_CASE("extremal function values") {
    HPComplex lam = hpc(0.5);
    HPReal alpha = hp(1.0);
    CHECK(abs(extremal_function(lam, lam, alpha)).to_double() < 1e-37);
    // phi(0) = sqrt(1 - 0.75^3)
    HPComplex phi0 = extremal_function(hpc(0.0), lam, alpha);
    CHECK(rel_diff(phi0, HPComplex(sqrt(hp(1.0) - pow_si(hp(0.75), 3)))) < 1e-37);
    CHECK(phi0.re().to_double() == doctest::Approx(0.7603453).epsilon(1e-7));
    CHECK(phi0.re() < 1.0);
    CHECK_THROWS_AS(extremal_function(hpc(0.3), hpc(0.0), alpha), std::domain_error);
}

TEST_CASE("extremal derivative matches finite differences") {
    HPComplex lam = hpc(0.4, 0.1);
    HPReal alpha = hp(1.0);
    HPComplex z = hpc(0.2, -0.3);
    HPReal h = pow_si(hp(10.0), -13);
    HPComplex fd = (extremal_function(z + HPComplex(h), lam, alpha) -
                    extremal_function(z - HPComplex(h), lam, alpha)) /
                   (2.0 * h);
    CHECK(rel_diff(fd, extremal_function_derivative(z, lam, alpha)) < 1e-10);
}

TEST_CASE("recursion base case and fold-order invariance") {
    std::mt19937_64 rng(41);
    HPReal alpha = hp(1.2);
    ZeroSet empty = ZeroSet::empty(alpha);
    HPComplex z = hpc(0.3, 0.2), w = hpc(-0.1, 0.4);
    CHECK(rel_diff(kernel_recursive(empty, z, w), bergman_kernel(z, w, alpha)) == 0.0);

    auto pts = random_points(rng, 3);
    ZeroSet A(pts, alpha);
    ZeroSet B({pts[2], pts[0], pts[1]}, alpha);
    for (int k = 0; k < 5; ++k) {
        HPComplex zz = random_disk_point(rng), ww = random_disk_point(rng);
        CHECK(rel_diff(kernel_recursive(A, zz, ww), kernel_recursive(B, zz, ww)) < 1e-30);
    }
}

TEST_CASE("recursion rejects duplicated points") {
    HPComplex a = hpc(0.3, 0.3);
    ZeroSet A({{a, 1}, {a, 1}}, hp(1.0));
    CHECK_THROWS(kernel_recursive(A, hpc(0.1), hpc(0.0)));
}

TEST_CASE("multiplicity recursion equals simple recursion when all simple") {
    std::mt19937_64 rng(43);
    ZeroSet A(random_points(rng, 4), hp(1.7));
    HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
    CHECK(kernel_with_multiplicity(A, z, w) == kernel_recursive(A, z, w));
}

TEST_CASE("multiplicity recursion equals the n-copies closed form") {
    std::mt19937_64 rng(47);
    HPComplex a = hpc(0.4);
    HPReal alpha = hp(1.0);
    ZeroSet A({{a, 3}}, alpha);
    for (int k = 0; k < 5; ++k) {
        HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
        HPComplex lhs = kernel_with_multiplicity(A, z, w);
        HPComplex rhs = kernel_multipoint_closed(a, 3, z, w, alpha);
        CHECK(rel_diff(lhs, rhs) < 1e-30);
    }
}

TEST_CASE("multipoint closed form base cases") {
    std::mt19937_64 rng(53);
    HPComplex a = hpc(0.25, -0.35);
    HPReal alpha = hp(2.2);
    HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
    CHECK(rel_diff(kernel_multipoint_closed(a, 1, z, w, alpha),
                   one_point_kernel(z, w, a, alpha)) < 1e-36);
    CHECK(abs(kernel_multipoint_closed(a, 4, a, w, alpha)).to_double() < 1e-36);
}

TEST_CASE("derivatives vanish at a repeated point (finite-difference oracle)") {
    HPComplex a = hpc(0.35, 0.15);
    ZeroSet A({{a, 3}, {hpc(-0.2, 0.4), 1}}, hp(1.5));
    HPComplex w = hpc(0.1, -0.3);
    HPReal h = pow_si(hp(10.0), -13);
    auto K = [&](const HPComplex& z) { return kernel_with_multiplicity(A, z, w); };
    CHECK(abs(K(a)).to_double() < 1e-33);
    HPComplex d1 = (K(a + HPComplex(h)) - K(a - HPComplex(h))) / (2.0 * h);
    CHECK(abs(d1).to_double() < 1e-22);
    HPComplex d2 = (K(a + HPComplex(h)) - 2.0 * K(a) + K(a - HPComplex(h))) / (h * h);
    CHECK(abs(d2).to_double() < 1e-9);
}

TEST_CASE("coefficient form: single point and empty set") {
    HPComplex lam = hpc(0.45, 0.2);
    HPReal alpha = hp(1.3);
    KernelRep rep = kernel_linear_system(ZeroSet({{lam, 1}}, alpha));
    REQUIRE(rep.coeffs.size() == 1);
    CHECK(rel_diff(rep.coeffs[0], HPComplex(pow(hp(1.0) - abs2(lam), alpha + 2.0))) < 1e-36);
    HPComplex z = hpc(0.3, -0.6);
    CHECK(rel_diff(rep.eval(z), one_point_kernel(z, hpc(0.0), lam, alpha)) < 1e-35);

    KernelRep none = kernel_linear_system(ZeroSet::empty(alpha));
    CHECK(rel_diff(none.eval(z), hpc(1.0)) == 0.0);
}

TEST_CASE("coefficient form: value at the origin is one minus the coefficient sum") {
    std::mt19937_64 rng(59);
    KernelRep rep = kernel_linear_system(ZeroSet(random_points(rng, 5), hp(2.0)));
    HPComplex sum(ctx40);
    for (const auto& c : rep.coeffs) sum += c;
    CHECK(rel_diff(rep.eval(hpc(0.0)), hpc(1.0) - sum) < 1e-37);
}

TEST_CASE("cross-method agreement on random zero sets") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 5; ++rep) {
        int n = 2 + static_cast<int>(rng() % 7);
        ZeroSet A(random_points(rng, n), hp(1.0 + 2.0 * (rng() % 1000) / 1000.0));
        KernelRep lin = kernel_linear_system(A);
        for (int k = 0; k < 4; ++k) {
            HPComplex z = random_disk_point(rng);
            HPComplex v1 = kernel_recursive(A, z, hpc(0.0));
            HPComplex v2 = lin.eval(z);
            HPComplex v3 = kernel_with_multiplicity(A, z, hpc(0.0));
            CHECK(rel_diff(v1, v2) < 1e-25);
            CHECK(rel_diff(v1, v3) < 1e-25);
        }
    }
}

TEST_CASE("conjugation equivariance") {
    std::mt19937_64 rng(67);
    ZeroSet A(random_points(rng, 4), hp(1.4));
    ZeroSet Ac = A.conjugated();
    HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
    CHECK(rel_diff(kernel_recursive(Ac, z.conj(), w.conj()),
                   kernel_recursive(A, z, w).conj()) < 1e-33);
}

TEST_CASE("diagonal positivity away from the zeros") {
    std::mt19937_64 rng(71);
    ZeroSet A(random_points(rng, 5), hp(2.5));
    for (int k = 0; k < 10; ++k) {
        HPComplex z = random_disk_point(rng);
        HPComplex kzz = kernel_recursive(A, z, z);
        CHECK(kzz.re().to_double() > -1e-30);
        CHECK(abs(kzz.im()).to_double() < 1e-30);
    }
}

TEST_CASE("Blaschke product basics") {
    std::mt19937_64 rng(73);
    HPReal alpha = hp(1.0);
    CHECK(rel_diff(blaschke_product(ZeroSet::empty(alpha), hpc(0.4, 0.1)), hpc(1.0)) == 0.0);
    auto pts = random_points(rng, 3);
    pts[1].multiplicity = 2;
    ZeroSet A(pts, alpha);
    CHECK(blaschke_product(A, pts[0].location).is_zero());
    // Unimodular on the circle.
    CHECK(std::abs(abs(blaschke_product(A, hpc(1.0))).to_double() - 1.0) < 1e-35);
    CHECK(std::abs(abs(blaschke_product(A, hpc(0.0, 1.0))).to_double() - 1.0) < 1e-35);
}

TEST_CASE("weighted kernel from the zero kernel") {
    std::mt19937_64 rng(79);
    HPReal alpha = hp(1.6);
    HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
    CHECK(rel_diff(weighted_kernel_from_zero_kernel(ZeroSet::empty(alpha), z, w),
                   bergman_kernel(z, w, alpha)) == 0.0);

    ZeroSet A(random_points(rng, 3), alpha);
    HPComplex kw = weighted_kernel_from_zero_kernel(A, z, w);
    HPComplex kw_swap = weighted_kernel_from_zero_kernel(A, w, z);
    CHECK(rel_diff(kw, kw_swap.conj()) < 1e-30);
    CHECK_THROWS_AS(weighted_kernel_from_zero_kernel(A, A.points()[0].location, w),
                    std::domain_error);
}

TEST_CASE("Moebius transformation rule recovers the toy kernel") {
    // Radial-power weight kernel, |z|^theta.
    HPReal theta = hp(-1.2);
    KernelFn k2 = [&](const HPComplex& z, const HPComplex& w) {
        HPComplex d = hpc(1.0) - z * w.conj();
        return hpc(1.0) / (d * d) + HPComplex(theta * 0.5) / d;
    };
    HPComplex lam = hpc(0.6, 0.15);
    MobiusAutomorphism phi = MobiusAutomorphism::involution(lam);
    std::mt19937_64 rng(83);
    for (int k = 0; k < 5; ++k) {
        HPComplex z = random_disk_point(rng), w = random_disk_point(rng);
        HPComplex via_rule = mobius_kernel_transform(k2, phi, z, w);
        HPComplex closed = toy_kernel_two_point(z, w, lam, theta);
        CHECK(rel_diff(via_rule, closed) < 1e-33);
    }
}

TEST_CASE("Moebius identity map leaves kernels alone") {
    HPReal alpha = hp(1.0);
    KernelFn k = [&](const HPComplex& z, const HPComplex& w) {
        return bergman_kernel(z, w, alpha);
    };
    MobiusAutomorphism id = MobiusAutomorphism::identity(ctx40);
    HPComplex z = hpc(0.3, 0.2), w = hpc(-0.4, 0.1);
    CHECK(rel_diff(mobius_kernel_transform(k, id, z, w), bergman_kernel(z, w, alpha)) < 1e-36);
}

TEST_CASE("homogeneity index -1") {
    HPComplex v = hpc(3.0, -1.0);
    CHECK(rel_diff(homogeneity_scale(v, hp(2.0)), hpc(1.5, -0.5)) == 0.0);
    CHECK_THROWS_AS(homogeneity_scale(v, hp(-1.0)), std::domain_error);
}

TEST_CASE("toy kernel closed forms") {
    HPComplex z = hpc(0.3, 0.4);
    CHECK(rel_diff(toy_kernel(z, hpc(0.5), hp(0.0)), hpc(1.0)) == 0.0);

    HPComplex lam = hpc(0.9);
    HPReal th = hp(-1.5);
    CHECK(toy_has_disk_zero(lam, th));
    HPComplex z0 = toy_zero_location(lam, th);
    CHECK(z0.re().to_double() == doctest::Approx(0.95277777778).epsilon(1e-10));
    CHECK(abs2(z0) < 1.0);
    CHECK(abs(toy_kernel(z0, lam, th)).to_double() < 1e-38);

    // -1.0 > -2/1.9: no interior zero.
    CHECK_FALSE(toy_has_disk_zero(lam, hp(-1.0)));
    CHECK_FALSE(toy_has_disk_zero(hpc(0.5), hp(1.0)));
}

TEST_CASE("lambda multiplier at the origin collapses to the weight") {
    WeightSpec w = WeightSpec::standard(hp(1.0));
    // K(z,0) = 1 for the standard family: Lambda(0) = omega(0)/2.
    HPReal l0 = lambda_omega(hpc(0.0), w);
    CHECK(std::abs(l0.to_double() - w.value_hp(hpc(0.0)).to_double() / 2.0) < 1e-30);
    CHECK_THROWS_AS(lambda_omega(hpc(1.0), w), std::domain_error);

    WeightSpec toyw = WeightSpec::toy(hpc(0.5), hp(-0.8));
    HPReal lt = lambda_omega(hpc(0.0), toyw);
    double k00 = toyw.kernel_00().to_double();
    CHECK(std::abs(lt.to_double() - k00 * toyw.value_hp(hpc(0.0)).to_double() / 2.0) < 1e-12);
}

TEST_CASE("weight normalization scales the kernel with index -1") {
    WeightSpec base = WeightSpec::toy(hpc(0.4), hp(2.0));
    WeightSpec twice = base.scaled(2.0);
    HPComplex z = hpc(0.3, 0.1);
    CHECK(std::abs(twice.value_hp(z).to_double() - 2.0 * base.value_hp(z).to_double()) < 1e-14);
    CHECK(rel_diff(twice.kernel_at_zero(z), base.kernel_at_zero(z) * 0.5) < 1e-30);
    CHECK_THROWS_AS(base.scaled(-1.0), std::invalid_argument);
}

TEST_CASE("tabulated weights evaluate bilinearly and refuse kernel access") {
    TabulatedGrid g;
    g.nx = 3;
    g.ny = 3;
    g.values = {1, 1, 1, 1, 2, 1, 1, 1, 1};  // bump at the center
    WeightSpec w = WeightSpec::tabulated(g, ctx40);
    CHECK(w.value_d({0.0, 0.0}) == doctest::Approx(2.0));
    CHECK(w.value_d({1.0, 1.0}) == doctest::Approx(1.0));
    CHECK(w.value_d({0.5, 0.0}) == doctest::Approx(1.5));
    CHECK_FALSE(w.has_kernel());
    CHECK_THROWS_AS(w.kernel_at_zero(hpc(0.0)), std::domain_error);
    TabulatedGrid bad;
    bad.nx = 2;
    bad.ny = 2;
    bad.values = {1, -1, 1, 1};
    CHECK_THROWS_AS(WeightSpec::tabulated(bad, ctx40), std::invalid_argument);
}

TEST_CASE("zero set JSON round trip") {
    std::mt19937_64 rng(89);
    auto pts = random_points(rng, 3);
    pts[0].multiplicity = 2;
    ZeroSet A(pts, hp(1.25));
    ZeroSet B = ZeroSet::from_json(A.to_json(), ctx40);
    REQUIRE(B.points().size() == A.points().size());
    CHECK(B.alpha() == A.alpha());
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(B.points()[i].location == A.points()[i].location);
        CHECK(B.points()[i].multiplicity == A.points()[i].multiplicity);
    }
}

TEST_CASE("symmetric flag detects conjugation closure") {
    HPComplex a = hpc(0.3, 0.4);
    CHECK(ZeroSet({{a, 1}, {a.conj(), 1}}, hp(1.0)).symmetric());
    CHECK(ZeroSet({{hpc(0.5), 1}}, hp(1.0)).symmetric());
    CHECK_FALSE(ZeroSet({{a, 1}}, hp(1.0)).symmetric());
    CHECK_FALSE(ZeroSet({{a, 2}, {a.conj(), 1}}, hp(1.0)).symmetric());
}
