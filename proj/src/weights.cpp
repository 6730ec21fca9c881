#include "bergman/weights.hpp"

#include <cmath>

namespace bergman {

namespace {

PrecisionContext ctx_of(const HPReal& x) {
    return PrecisionContext(std::max(16, static_cast<int>((x.prec() - 4) / 3.3219280948873623)));
}

double blaschke_abs2_d(const std::vector<std::pair<std::complex<double>, int>>& pts,
                       std::complex<double> z) {
    double b = 1.0;
    for (const auto& [a, m] : pts) {
        double f = std::norm(z - a) / std::norm(1.0 - std::conj(a) * z);
        for (int t = 0; t < m; ++t) b *= f;
    }
    return b;
}

}  // namespace

double TabulatedGrid::at(double x, double y) const {
    if (nx < 2 || ny < 2) throw std::invalid_argument("TabulatedGrid: need at least 2x2");
    double fx = (x + 1.0) * 0.5 * (nx - 1);
    double fy = (y + 1.0) * 0.5 * (ny - 1);
    int ix = std::min(std::max(0, static_cast<int>(std::floor(fx))), nx - 2);
    int iy = std::min(std::max(0, static_cast<int>(std::floor(fy))), ny - 2);
    double tx = fx - ix, ty = fy - iy;
    auto v = [&](int i, int j) { return values[static_cast<size_t>(i) * ny + j]; };
    return (1 - tx) * (1 - ty) * v(ix, iy) + tx * (1 - ty) * v(ix + 1, iy) +
           (1 - tx) * ty * v(ix, iy + 1) + tx * ty * v(ix + 1, iy + 1);
}

WeightSpec WeightSpec::standard(const HPReal& alpha) {
    if (!(alpha > -1.0)) throw std::invalid_argument("WeightSpec: alpha must be > -1");
    return WeightSpec(Kind::standard, ctx_of(alpha), alpha);
}

WeightSpec WeightSpec::zero_weighted(const ZeroSet& A) {
    WeightSpec w(Kind::zero_weighted, ctx_of(A.alpha()), A.alpha());
    w.zeros_ = std::make_shared<ZeroSet>(A);
    if (A.all_simple()) w.rep_ = std::make_shared<KernelRep>(kernel_linear_system(A));
    return w;
}

WeightSpec WeightSpec::toy(const HPComplex& lambda, const HPReal& theta) {
    if (!(theta > -2.0)) throw std::invalid_argument("WeightSpec: toy needs theta > -2");
    if (!(abs2(lambda) < 1.0)) throw std::invalid_argument("WeightSpec: toy needs |lambda| < 1");
    WeightSpec w(Kind::toy, ctx_of(theta), HPReal(0.0, ctx_of(theta)));
    w.lambda_ = lambda;
    w.theta_ = theta;
    return w;
}

WeightSpec WeightSpec::tabulated(TabulatedGrid grid, const PrecisionContext& ctx) {
    for (double v : grid.values)
        if (!(v > 0.0)) throw std::invalid_argument("WeightSpec: tabulated values must be positive");
    WeightSpec w(Kind::tabulated, ctx, HPReal(0.0, ctx));
    w.grid_ = std::make_shared<TabulatedGrid>(std::move(grid));
    return w;
}

WeightSpec WeightSpec::scaled(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("WeightSpec: scale must be positive");
    WeightSpec w(*this);
    w.norm_ *= t;
    return w;
}

HPReal WeightSpec::value_hp(const HPComplex& z) const {
    HPReal one(1.0, ctx_);
    switch (kind_) {
        case Kind::standard:
            return (alpha_ + 1.0) * pow(one - abs2(z), alpha_) * norm_;
        case Kind::zero_weighted: {
            HPReal v = (alpha_ + 1.0) * pow(one - abs2(z), alpha_);
            return v * abs2(blaschke_product(*zeros_, z)) * norm_;
        }
        case Kind::toy: {
            HPComplex f = (z - lambda_) / (HPComplex(one) - lambda_.conj() * z);
            return pow(abs2(f), theta_ * 0.5) * norm_;
        }
        case Kind::tabulated:
            return HPReal(grid_->at(z.re().to_double(), z.im().to_double()) * norm_, ctx_);
    }
    throw std::logic_error("WeightSpec: unknown kind");
}

double WeightSpec::value_d(std::complex<double> z) const {
    switch (kind_) {
        case Kind::standard: {
            double a = alpha_.to_double();
            return (a + 1.0) * std::pow(1.0 - std::norm(z), a) * norm_;
        }
        case Kind::zero_weighted: {
            double a = alpha_.to_double();
            std::vector<std::pair<std::complex<double>, int>> pts;
            for (const auto& p : zeros_->points())
                pts.emplace_back(p.location.to_complex_double(), p.multiplicity);
            return (a + 1.0) * std::pow(1.0 - std::norm(z), a) * blaschke_abs2_d(pts, z) * norm_;
        }
        case Kind::toy: {
            std::complex<double> l = lambda_.to_complex_double();
            double t = theta_.to_double();
            return std::pow(std::norm((z - l) / (1.0 - std::conj(l) * z)), 0.5 * t) * norm_;
        }
        case Kind::tabulated:
            return grid_->at(z.real(), z.imag()) * norm_;
    }
    throw std::logic_error("WeightSpec: unknown kind");
}

HPComplex WeightSpec::kernel_at_zero(const HPComplex& z) const {
    HPReal one(1.0, ctx_);
    switch (kind_) {
        case Kind::standard:
            return HPComplex(one / norm_);
        case Kind::zero_weighted: {
            HPComplex k =
                rep_ ? rep_->eval(z) : kernel_with_multiplicity(*zeros_, z, HPComplex(ctx_));
            HPComplex b0 = blaschke_product(*zeros_, HPComplex(ctx_));
            if (b0.is_zero())
                throw DegenerateKernelError("WeightSpec: zero at the origin blocks kernel access");
            return k / (blaschke_product(*zeros_, z) * b0.conj()) / HPReal(norm_, ctx_);
        }
        case Kind::toy:
            return toy_kernel(z, lambda_, theta_) / HPReal(norm_, ctx_);
        case Kind::tabulated:
            throw std::domain_error("WeightSpec: tabulated weights have no kernel access");
    }
    throw std::logic_error("WeightSpec: unknown kind");
}

HPReal WeightSpec::kernel_00() const { return kernel_at_zero(HPComplex(ctx_)).re(); }

HPComplex WeightSpec::kernel_two_point(const HPComplex& z, const HPComplex& w) const {
    switch (kind_) {
        case Kind::standard:
            return bergman_kernel(z, w, alpha_) / HPReal(norm_, ctx_);
        case Kind::toy:
            return toy_kernel_two_point(z, w, lambda_, theta_) / HPReal(norm_, ctx_);
        default:
            throw std::domain_error("WeightSpec: no closed two-point kernel for this kind");
    }
}

std::function<double(std::complex<double>)> WeightSpec::weight_fn_d() const {
    WeightSpec copy(*this);
    return [copy](std::complex<double> z) { return copy.value_d(z); };
}

std::function<std::complex<double>(std::complex<double>)> WeightSpec::kernel_at_zero_fn_d()
    const {
    switch (kind_) {
        case Kind::standard: {
            double n = norm_;
            return [n](std::complex<double>) { return std::complex<double>(1.0 / n, 0.0); };
        }
        case Kind::zero_weighted: {
            if (!rep_)
                throw std::domain_error(
                    "WeightSpec: double kernel path needs simple points (coefficient form)");
            double s = alpha_.to_double() + 2.0;
            double n = norm_;
            std::vector<std::complex<double>> c, a;
            for (const auto& cj : rep_->coeffs) c.push_back(cj.to_complex_double());
            for (const auto& p : zeros_->points()) a.push_back(p.location.to_complex_double());
            std::complex<double> b0 = 1.0;
            for (const auto& aj : a) b0 *= -aj;
            return [s, n, c, a, b0](std::complex<double> z) {
                std::complex<double> k = 1.0;
                for (size_t j = 0; j < c.size(); ++j)
                    k -= c[j] / std::pow(1.0 - z * std::conj(a[j]), s);
                std::complex<double> b = 1.0;
                for (const auto& aj : a) b *= (z - aj) / (1.0 - std::conj(aj) * z);
                return k / (b * std::conj(b0)) / n;
            };
        }
        case Kind::toy: {
            std::complex<double> l = lambda_.to_complex_double();
            double t = theta_.to_double(), n = norm_;
            return [l, t, n](std::complex<double> z) {
                return (1.0 + 0.5 * t * (1.0 - std::norm(l)) / (1.0 - std::conj(l) * z)) / n;
            };
        }
        case Kind::tabulated:
            throw std::domain_error("WeightSpec: tabulated weights have no kernel access");
    }
    throw std::logic_error("WeightSpec: unknown kind");
}

std::function<double(std::complex<double>)> WeightSpec::lambda_multiplier_fn_d() const {
    switch (kind_) {
        case Kind::standard: {
            // |K(z,0)|^2 omega / K(0,0) = omega itself.
            return weight_fn_d();
        }
        case Kind::zero_weighted: {
            // Blaschke moduli cancel: |K_A(z,0)|^2 omega_alpha(z) / K_A(0,0).
            if (!rep_)
                throw std::domain_error(
                    "WeightSpec: double multiplier path needs simple points");
            double s = alpha_.to_double() + 2.0;
            double av = alpha_.to_double();
            std::vector<std::complex<double>> c, a;
            for (const auto& cj : rep_->coeffs) c.push_back(cj.to_complex_double());
            for (const auto& p : zeros_->points()) a.push_back(p.location.to_complex_double());
            double k00 = 1.0;
            for (const auto& cj : c) k00 -= cj.real();
            return [s, av, c, a, k00](std::complex<double> z) {
                std::complex<double> k = 1.0;
                for (size_t j = 0; j < c.size(); ++j)
                    k -= c[j] / std::pow(1.0 - z * std::conj(a[j]), s);
                double wa = (av + 1.0) * std::pow(1.0 - std::norm(z), av);
                return std::norm(k) * wa / k00;
            };
        }
        case Kind::toy: {
            auto kd = kernel_at_zero_fn_d();
            auto wd = weight_fn_d();
            double k00 = kd(0.0).real();
            return [kd, wd, k00](std::complex<double> z) {
                return std::norm(kd(z)) * wd(z) / k00;
            };
        }
        case Kind::tabulated:
            throw std::domain_error("WeightSpec: tabulated weights have no kernel access");
    }
    throw std::logic_error("WeightSpec: unknown kind");
}

HPReal lambda_omega(const HPComplex& z, const WeightSpec& weight) {
    PrecisionContext ctx = weight.context();
    HPReal one(1.0, ctx);
    if (!(abs2(z) < 1.0)) throw std::domain_error("lambda_omega: |z| must be < 1");
    HPComplex k = weight.kernel_at_zero(z);
    HPReal k00 = weight.kernel_00();
    return abs2(k) / k00 * weight.value_hp(z) / (2.0 * (one - abs2(z)));
}

}  // namespace bergman
