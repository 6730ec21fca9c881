#include "bergman/surface.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace bergman {

namespace {

using cd = std::complex<double>;

// Bivariate truncated Taylor arithmetic in (w - z) and conj(w - z), total
// degree <= 3; enough to peel the singular moments off a smooth density.
struct DJet3 {
    std::array<std::array<cd, 4>, 4> c{};

    static DJet3 constant(cd v) {
        DJet3 j;
        j.c[0][0] = v;
        return j;
    }
    static DJet3 var_w(cd z) {
        DJet3 j;
        j.c[0][0] = z;
        j.c[1][0] = 1.0;
        return j;
    }
    static DJet3 var_wbar(cd z) {
        DJet3 j;
        j.c[0][0] = std::conj(z);
        j.c[0][1] = 1.0;
        return j;
    }

    friend DJet3 operator*(const DJet3& a, const DJet3& b) {
        DJet3 r;
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; j + k <= 3; ++k)
                for (int p = 0; p <= j; ++p)
                    for (int q = 0; q <= k; ++q) r.c[j][k] += a.c[p][q] * b.c[j - p][k - q];
        return r;
    }
    friend DJet3 operator*(const DJet3& a, cd s) {
        DJet3 r = a;
        for (auto& row : r.c)
            for (auto& v : row) v *= s;
        return r;
    }
    friend DJet3 operator+(const DJet3& a, const DJet3& b) {
        DJet3 r = a;
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k) r.c[j][k] += b.c[j][k];
        return r;
    }
    friend DJet3 operator-(const DJet3& a, const DJet3& b) {
        DJet3 r = a;
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k) r.c[j][k] -= b.c[j][k];
        return r;
    }

    DJet3 reciprocal() const {
        cd c0 = c[0][0];
        DJet3 v = *this * (1.0 / c0);
        v.c[0][0] = 0.0;
        DJet3 one = constant(1.0);
        DJet3 acc = one - v + v * v - v * v * v;
        return acc * (1.0 / c0);
    }
};

double binom_small(int n, int k) {
    double r = 1.0;
    for (int t = 0; t < k; ++t) r *= static_cast<double>(n - t) / (t + 1);
    return r;
}

// integral of G(z,w) w^p conj(w)^q dSigma(w): particular solution
// z^{p+1} conj(z)^{q+1}/((p+1)(q+1)) minus its harmonic boundary extension.
cd green_monomial_moment(cd z, int p, int q) {
    cd zp = std::pow(z, p + 1) * std::pow(std::conj(z), q + 1);
    cd h = (p >= q) ? std::pow(z, p - q) : std::pow(std::conj(z), q - p);
    return (zp - h) / static_cast<double>((p + 1) * (q + 1));
}

// integral of G(z,w) (w-z)^j (conj(w)-conj(z))^k dSigma(w).
cd green_shifted_moment(cd z, int j, int k) {
    cd acc = 0.0;
    for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= k; ++q)
            acc += binom_small(j, p) * binom_small(k, q) * std::pow(-z, j - p) *
                   std::pow(-std::conj(z), k - q) * green_monomial_moment(z, p, q);
    return acc;
}

double eval_jet(const DensityJet3& jet, cd z, cd w) {
    cd d = w - z, db = std::conj(d);
    cd acc = 0.0;
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; j + k <= 3; ++k) acc += jet.t[j][k] * std::pow(d, j) * std::pow(db, k);
    return acc.real();
}

}  // namespace

CurvatureData CurvatureData::zero() { return CurvatureData(Kind::zero); }

CurvatureData CurvatureData::re_part() { return CurvatureData(Kind::re_part); }

CurvatureData CurvatureData::hyperbolic(double alpha) {
    CurvatureData c(Kind::hyperbolic);
    c.r_ = 1.0;
    c.alpha_ = alpha;
    return c;
}

CurvatureData CurvatureData::dilated_hyperbolic(double r, double alpha) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("dilated_hyperbolic: 0 < r < 1");
    CurvatureData c(Kind::dilated_hyperbolic);
    c.r_ = r;
    c.alpha_ = alpha;
    return c;
}

CurvatureData CurvatureData::point_mass(cd lambda, double theta) {
    if (!(std::norm(lambda) < 1.0)) throw std::invalid_argument("point_mass: |lambda| < 1");
    CurvatureData c(Kind::point_mass);
    c.lambda_ = lambda;
    c.theta_ = theta;
    return c;
}

CurvatureData CurvatureData::custom(RealField mu) {
    CurvatureData c(Kind::custom);
    c.fn_ = std::move(mu);
    return c;
}

CurvatureData CurvatureData::tabulated(TabulatedGrid grid) {
    auto shared = std::make_shared<TabulatedGrid>(std::move(grid));
    return custom([shared](cd z) { return shared->at(z.real(), z.imag()); });
}

CurvatureData CurvatureData::from_csv(const std::string& text) {
    TabulatedGrid g;
    std::vector<double> xs;
    size_t pos = text.find('\n');  // header line
    if (pos == std::string::npos) throw std::invalid_argument("from_csv: empty grid file");
    double last_x = std::numeric_limits<double>::quiet_NaN();
    while (pos != std::string::npos && pos + 1 < text.size()) {
        size_t end = text.find('\n', pos + 1);
        std::string line = text.substr(pos + 1, end == std::string::npos ? text.npos
                                                                         : end - pos - 1);
        pos = end;
        double x, y, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3) continue;
        if (x != last_x) {
            xs.push_back(x);
            last_x = x;
        }
        g.values.push_back(v);
    }
    g.nx = static_cast<int>(xs.size());
    if (g.nx < 2 || g.values.size() % g.nx != 0)
        throw std::invalid_argument("from_csv: not a row-major lattice");
    g.ny = static_cast<int>(g.values.size()) / g.nx;
    if (g.ny < 2) throw std::invalid_argument("from_csv: not a row-major lattice");
    return tabulated(std::move(g));
}

double CurvatureData::value_d(cd z) const {
    switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::re_part:
            return z.real();
        case Kind::hyperbolic: {
            double u = 1.0 - std::norm(z);
            return 2.0 * alpha_ / (u * u);
        }
        case Kind::dilated_hyperbolic: {
            double u = 1.0 - r_ * r_ * std::norm(z);
            return 2.0 * r_ * r_ * alpha_ / (u * u);
        }
        case Kind::point_mass:
            throw std::domain_error("point-mass data has no pointwise density");
        case Kind::custom:
            return fn_(z);
    }
    throw std::logic_error("CurvatureData: unknown kind");
}

HPReal CurvatureData::value_hp(const HPComplex& z, const PrecisionContext& ctx) const {
    switch (kind_) {
        case Kind::zero:
            return HPReal(ctx);
        case Kind::re_part:
            return z.re();
        case Kind::hyperbolic: {
            HPReal u = HPReal(1.0, ctx) - abs2(z);
            return HPReal(2.0 * alpha_, ctx) / (u * u);
        }
        case Kind::dilated_hyperbolic: {
            HPReal u = HPReal(1.0, ctx) - r_ * r_ * abs2(z);
            return HPReal(2.0 * r_ * r_ * alpha_, ctx) / (u * u);
        }
        case Kind::point_mass:
            throw std::domain_error("point-mass data has no pointwise density");
        case Kind::custom:
            return HPReal(fn_(z.to_complex_double()), ctx);
    }
    throw std::logic_error("CurvatureData: unknown kind");
}

DensityJet3 CurvatureData::jet3(cd z) const {
    DensityJet3 jet;
    switch (kind_) {
        case Kind::zero:
            return jet;
        case Kind::re_part:
            jet.t[0][0] = z.real();
            jet.t[1][0] = 0.5;
            jet.t[0][1] = 0.5;
            return jet;
        case Kind::hyperbolic:
        case Kind::dilated_hyperbolic: {
            DJet3 u = DJet3::constant(1.0) -
                      DJet3::var_w(z) * DJet3::var_wbar(z) * (r_ * r_);
            DJet3 inv = u.reciprocal();
            DJet3 m = inv * inv * (2.0 * r_ * r_ * alpha_);
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; j + k <= 3; ++k) jet.t[j][k] = m.c[j][k];
            return jet;
        }
        case Kind::point_mass:
            throw std::domain_error("point-mass data has no Taylor jet");
        case Kind::custom: {
            // Degree-2 jet by central differences of the density itself.
            const double h = 1e-3;
            auto f = [&](double dx, double dy) { return fn_(z + cd(dx, dy)); };
            double f0 = f(0, 0);
            double fx = (f(h, 0) - f(-h, 0)) / (2 * h);
            double fy = (f(0, h) - f(0, -h)) / (2 * h);
            double fxx = (f(h, 0) - 2 * f0 + f(-h, 0)) / (h * h);
            double fyy = (f(0, h) - 2 * f0 + f(0, -h)) / (h * h);
            double fxy = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
            cd dw(0.5 * fx, -0.5 * fy);
            cd dww(0.25 * (fxx - fyy), -0.5 * fxy);
            jet.t[0][0] = f0;
            jet.t[1][0] = dw;
            jet.t[0][1] = std::conj(dw);
            jet.t[2][0] = dww * 0.5;
            jet.t[0][2] = std::conj(dww) * 0.5;
            jet.t[1][1] = 0.25 * (fxx + fyy);
            return jet;
        }
    }
    throw std::logic_error("CurvatureData: unknown kind");
}

double CurvatureData::alpha_margin(int nr, int ntheta) const {
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nr; ++i) {
        double r = (i + 0.5) / nr;
        for (int k = 0; k < ntheta; ++k) {
            double th = 2.0 * M_PI * k / ntheta;
            cd z = std::polar(r, th);
            double m = value_d(z);
            if (m > 0.0) {
                double p = 1.0 - r * r;
                margin = std::min(margin, 2.0 / (p * p * m));
            }
        }
    }
    return margin;
}

namespace {

// Double-precision Gauss-Legendre nodes/weights on (a, b).
void gauss_legendre_d(double a, double b, int m, std::vector<double>& x,
                      std::vector<double>& w) {
    x.resize(m);
    w.resize(m);
    for (int i = 1; i <= m; ++i) {
        double t = std::cos(M_PI * (i - 0.25) / (m + 0.5));
        double p1 = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i - 1] = a + (b - a) * 0.5 * (t + 1.0);
        w[i - 1] = (b - a) * 0.5 * 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

// The tensor rule's radial lines see a derivative kink of the angularly
// averaged log kernel exactly at s = |z|; splitting the radial panel there
// restores spectral behavior, and the Taylor moments of the density (closed
// forms against G) remove the point singularity itself.
double green_potential_subtracted(const CurvatureData& mu, const DiskRule& rule, cd z) {
    DensityJet3 jet = mu.jet3(z);
    cd closed = 0.0;
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; j + k <= 3; ++k)
            if (jet.t[j][k] != 0.0) closed += jet.t[j][k] * green_shifted_moment(z, j, k);

    const int n = rule.angular_count();
    const int mhalf = std::max(60, rule.radial_count() / 2);
    double rz = std::abs(z);
    std::vector<double> xs, ws, x2, w2;
    if (rz > 1e-12 && rz < 1.0) {
        gauss_legendre_d(0.0, rz, mhalf, xs, ws);
        gauss_legendre_d(rz, 1.0, mhalf, x2, w2);
        xs.insert(xs.end(), x2.begin(), x2.end());
        ws.insert(ws.end(), w2.begin(), w2.end());
    } else {
        gauss_legendre_d(0.0, 1.0, 2 * mhalf, xs, ws);
    }
    // Offset the angular grid so no node angle aligns with z.
    double rot = (rz > 1e-12 ? std::arg(z) : 0.0) + M_PI / n;

    double rem = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double s = xs[i];
        double ring = 0.0;
        for (int k = 0; k < n; ++k) {
            double th = rot + 2.0 * M_PI * (k + 0.5) / n;
            cd w(s * std::cos(th), s * std::sin(th));
            if (std::norm(z - w) < 1e-28) continue;  // remainder vanishes to 4th order
            ring += green_G_d(z, w) * (mu.value_d(w) - eval_jet(jet, z, w));
        }
        rem += ws[i] * 2.0 * s * ring / n;
    }
    return closed.real() + rem;
}

bool CurvatureData::has_closed_omega1() const noexcept {
    return kind_ == Kind::zero || kind_ == Kind::dilated_hyperbolic || kind_ == Kind::point_mass;
}

double CurvatureData::omega1_closed_d(cd z) const {
    switch (kind_) {
        case Kind::zero:
            return 1.0;
        case Kind::dilated_hyperbolic:
            return std::pow((1.0 - r_ * r_ * std::norm(z)) / (1.0 - r_ * r_), alpha_);
        case Kind::point_mass:
            return std::pow(std::norm((z - lambda_) / (1.0 - std::conj(lambda_) * z)),
                            0.5 * theta_);
        default:
            throw std::domain_error("CurvatureData: no closed-form weight for this family");
    }
}

double omega1_log(const CurvatureData& mu, const DiskRule& rule, cd z) {
    if (mu.is_point_mass()) {
        cd l = mu.pm_lambda();
        return 0.5 * mu.pm_theta() * std::log(std::norm((z - l) / (1.0 - std::conj(l) * z)));
    }
    if (mu.kind() == CurvatureData::Kind::zero) return 0.0;
    if (mu.kind() == CurvatureData::Kind::hyperbolic)
        throw std::domain_error(
            "omega1_log: undilated hyperbolic data is not area-integrable; dilate first");
    return -0.5 * green_potential_subtracted(mu, rule, z);
}

double omega1_from_mu(const CurvatureData& mu, const DiskRule& rule, cd z) {
    return std::exp(omega1_log(mu, rule, z));
}

double curvature_from_mu_roundtrip(const CurvatureData& mu, const DiskRule& rule, cd z,
                                   double h) {
    // Fourth-order nine-point Laplacian: the second-order stencil's h^2
    // truncation exceeds the round-trip budget where the data peaks.
    auto L = [&](cd p) { return omega1_log(mu, rule, p); };
    double c0 = L(z);
    auto axis = [&](cd step) {
        return (-L(z + 2.0 * step) + 16.0 * L(z + step) + 16.0 * L(z - step) -
                L(z - 2.0 * step) - 30.0 * c0) /
               (12.0 * h * h);
    };
    double lap = (axis(cd(h, 0)) + axis(cd(0, h))) / 4.0;
    return -2.0 * lap;
}

Omega0 omega0_construct(const RealField& omega1,
                        const std::function<cd(cd)>& kernel_at_zero, const DiskRule& rule) {
    Omega0 out;
    out.kernel00 = kernel_at_zero(cd(0.0, 0.0)).real();
    if (!(out.kernel00 > 0.0))
        throw DegenerateKernelError("omega0_construct: K(0,0) <= 0 at working precision");

    double k00 = out.kernel00;
    auto kfn = kernel_at_zero;
    auto w1 = omega1;
    out.value = [kfn, w1, k00](cd z) { return std::norm(kfn(z)) / k00 * w1(z); };

    // Interior zero scan of the kernel factor: polar modulus minimum plus a
    // real-axis sign-change sweep (kernels here are real on the axis for
    // conjugation-symmetric data).
    double minabs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 101; ++i) {
        double r = 0.999 * (i + 0.5) / 101;
        for (int k = 0; k < 256; ++k) {
            double th = 2.0 * M_PI * k / 256;
            minabs = std::min(minabs, std::abs(kfn(std::polar(r, th))));
        }
    }
    out.min_kernel_abs = minabs;
    bool sign_change = false;
    bool axis_real = true;
    double prev = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        double x = -0.9995 + 1.999 * i / 4000.0;
        cd v = kfn(cd(x, 0.0));
        if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real()))) {
            axis_real = false;
            break;
        }
        if (i > 0 && v.real() * prev < 0.0) sign_change = true;
        prev = v.real();
    }
    out.zero_free = !(axis_real && sign_change) && minabs > 1e-6 * k00;
    out.mass = integrate_disk_real_d(rule, out.value);
    return out;
}

MetricGrid MetricGrid::isothermal(HPField omega, int nx, int ny, const PrecisionContext& ctx,
                                  std::optional<HPReal> fd_step) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("MetricGrid: need at least 3x3");
    MetricGrid g(nx, ny, ctx);
    g.isothermal_ = true;
    g.omega_ = omega;
    g.a_ = omega;
    g.b_ = omega;
    g.c_ = [ctx](const HPComplex&) { return HPReal(ctx); };
    g.h_ = fd_step ? *fd_step : pow_si(HPReal(10.0, ctx), -(ctx.digits() / 4));
    return g;
}

MetricGrid MetricGrid::general(HPField a, HPField b, HPField c, int nx, int ny,
                               const PrecisionContext& ctx, std::optional<HPReal> fd_step) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("MetricGrid: need at least 3x3");
    MetricGrid g(nx, ny, ctx);
    g.isothermal_ = false;
    g.a_ = std::move(a);
    g.b_ = std::move(b);
    g.c_ = std::move(c);
    g.h_ = fd_step ? *fd_step : pow_si(HPReal(10.0, ctx), -(ctx.digits() / 4));
    return g;
}

namespace {

void check_stencil(const HPComplex& z, const HPReal& h) {
    if (!(abs(z) + h < 1.0))
        throw std::domain_error("curvature stencil leaves the disk near the boundary");
}

HPReal laplace5(const std::function<HPReal(const HPComplex&)>& f, const HPComplex& z,
                const HPReal& h) {
    HPComplex hx{h, HPReal(h * 0.0)};
    HPComplex hy{HPReal(h * 0.0), h};
    HPReal sum = f(z + hx) + f(z - hx) + f(z + hy) + f(z - hy) - 4.0 * f(z);
    return sum / (4.0 * h * h);
}

}  // namespace

HPReal curvature_isothermal(const HPField& omega, const HPComplex& z, const HPReal& h) {
    check_stencil(z, h);
    auto logw = [&](const HPComplex& p) { return log(omega(p)); };
    HPReal lap = laplace5(logw, z, h);
    return (-2.0) / omega(z) * lap;
}

HPReal curvature_isothermal(const MetricGrid& grid, const HPComplex& z) {
    if (!grid.is_isothermal())
        throw std::invalid_argument("curvature_isothermal: general metric; use brioschi_curvature");
    return curvature_isothermal(grid.omega(), z, grid.fd_step());
}

namespace {

struct Partials {
    HPReal f, x, y, xx, yy, xy;
};

Partials partials_of(const HPField& f, const HPComplex& z, const HPReal& h) {
    HPComplex hx{h, h * 0.0};
    HPComplex hy{h * 0.0, h};
    HPReal fpx = f(z + hx), fmx = f(z - hx), fpy = f(z + hy), fmy = f(z - hy);
    HPReal fc = f(z);
    HPReal fpp = f(z + hx + hy), fpm = f(z + hx - hy), fmp = f(z - hx + hy), fmm = f(z - hx - hy);
    Partials p{fc,
               (fpx - fmx) / (2.0 * h),
               (fpy - fmy) / (2.0 * h),
               (fpx - 2.0 * fc + fmx) / (h * h),
               (fpy - 2.0 * fc + fmy) / (h * h),
               (fpp - fpm - fmp + fmm) / (4.0 * h * h)};
    return p;
}

HPReal det3(const HPReal m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

HPReal brioschi_curvature(const MetricGrid& grid, const HPComplex& z) {
    const HPReal& h = grid.fd_step();
    check_stencil(z, h);
    Partials a = partials_of(grid.a(), z, h);
    Partials b = partials_of(grid.b(), z, h);
    Partials c = partials_of(grid.c(), z, h);

    HPReal m1[3][3] = {
        {a.yy * (-0.5) - b.xx * 0.5 + c.xy, a.x * 0.5, c.x - a.y * 0.5},
        {c.y - b.x * 0.5, a.f, c.f},
        {b.y * 0.5, c.f, b.f},
    };
    HPReal m2[3][3] = {
        {a.f * 0.0, a.y * 0.5, b.x * 0.5},
        {a.y * 0.5, a.f, c.f},
        {b.x * 0.5, c.f, b.f},
    };
    HPReal g = a.f * b.f - c.f * c.f;
    return (det3(m1) - det3(m2)) / (g * g);
}

HPReal laplace_beltrami_apply(const MetricGrid& grid, const HPField& f, const HPComplex& z) {
    const HPReal& h = grid.fd_step();
    check_stencil(z, 2.0 * h);
    const HPField &A = grid.a(), &B = grid.b(), &C = grid.c();

    auto fx = [&](const HPComplex& p) {
        HPComplex hx{h, h * 0.0};
        return (f(p + hx) - f(p - hx)) / (2.0 * h);
    };
    auto fy = [&](const HPComplex& p) {
        HPComplex hy{h * 0.0, h};
        return (f(p + hy) - f(p - hy)) / (2.0 * h);
    };
    auto flux_x = [&](const HPComplex& p) {
        HPReal s = sqrt(A(p) * B(p) - C(p) * C(p));
        return (B(p) * fx(p) - C(p) * fy(p)) / s;
    };
    auto flux_y = [&](const HPComplex& p) {
        HPReal s = sqrt(A(p) * B(p) - C(p) * C(p));
        return (A(p) * fy(p) - C(p) * fx(p)) / s;
    };

    HPComplex hx{h, h * 0.0};
    HPComplex hy{h * 0.0, h};
    HPReal div = (flux_x(z + hx) - flux_x(z - hx)) / (2.0 * h) +
                 (flux_y(z + hy) - flux_y(z - hy)) / (2.0 * h);
    HPReal s = sqrt(A(z) * B(z) - C(z) * C(z));
    return div / (4.0 * s);
}

double metric_potential(const RealField& omega, const DiskRule& rule, cd z) {
    return potential_via_green(rule, omega, z);
}

double boundary_normal_derivative(const RealField& omega, const DiskRule& rule, cd zeta) {
    cd zhat = zeta / std::abs(zeta);
    double acc = 0.0;
    for (int i = 0; i < rule.radial_count(); ++i) {
        double r = rule.radial_nodes_d()[i];
        cd p = r * zhat;
        cd pbar = std::conj(p);
        // The substituted integrand concentrates on a scale of 1-r; refine the
        // trapezoid count near the boundary so the outermost radii stay
        // resolved for non-radial weights.
        int n = rule.angular_count();
        if (1.0 - r < 24.0 / n)
            n = static_cast<int>(std::min(24.0 / (1.0 - r), 1048576.0)) + 1;
        double ring = 0.0;
        for (int k = 0; k < n; ++k) {
            cd xi(std::cos(2.0 * M_PI * (k + 0.5) / n), std::sin(2.0 * M_PI * (k + 0.5) / n));
            cd w = r * (xi + p) / (1.0 + pbar * xi);
            ring += omega(w);
        }
        acc += ring * (rule.radial_weights_d()[i] / n);
    }
    return 2.0 * acc;
}

double boundary_normal_derivative_fd(const RealField& omega, const DiskRule& rule, cd zeta,
                                     double h) {
    cd zhat = zeta / std::abs(zeta);
    // Phi vanishes on the boundary: one-sided difference of the potential.
    double phi_in = metric_potential(omega, rule, (1.0 - h) * zhat);
    return -phi_in / h;
}

MpotReport verify_mpot_system(const HPField& omega0_hp, const RealField& omega0_d,
                              const CurvatureData& mu, const MetricGrid& grid,
                              const DiskRule& rule, bool claimed_zero_free) {
    if (!claimed_zero_free)
        throw NonPositiveWeightError("verify_mpot_system: weight flagged non-positive");
    const PrecisionContext& ctx = grid.context();
    HPReal h = pow_si(HPReal(10.0, ctx), -(ctx.digits() / 3));

    MpotReport rep;
    for (int i = 0; i < grid.nx(); ++i) {
        double x = grid.x_at(i);
        for (int j = 0; j < grid.ny(); ++j) {
            double y = grid.y_at(j);
            if (!grid.interior(x, y)) continue;
            if (!(omega0_d(cd(x, y)) > 0.0))
                throw NonPositiveWeightError("verify_mpot_system: weight <= 0 at grid point");
            HPComplex z(x, y, ctx);
            auto logw = [&](const HPComplex& p) { return log(omega0_hp(p)); };
            HPReal defect = laplace5(logw, z, h) + mu.value_hp(z, ctx) * 0.5;
            double d = std::abs(defect.to_double());
            rep.pde_defect = std::max(rep.pde_defect, d);
        }
    }

    for (int k = 0; k < 16; ++k) {
        double th = 2.0 * M_PI * k / 16;
        cd zeta = std::polar(1.0, th);
        rep.boundary_defect = std::max(rep.boundary_defect,
                                       std::abs(metric_potential(omega0_d, rule, zeta)));
        rep.normal_defect = std::max(
            rep.normal_defect, std::abs(boundary_normal_derivative(omega0_d, rule, zeta) - 2.0));
    }
    return rep;
}

}  // namespace bergman
