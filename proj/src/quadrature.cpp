#include "bergman/quadrature.hpp"

#include <cmath>

#include <json.hpp>

namespace bergman {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(const HPReal& x, int n, HPReal& p, HPReal& dp) {
    HPReal pm1 = x * 0.0 + 1.0;  // exact 1 carrying x's precision
    HPReal pk = x;
    for (int k = 2; k <= n; ++k) {
        HPReal pnext = (x * pk * (2.0 * k - 1.0) - pm1 * (k - 1.0)) / static_cast<double>(k);
        pm1 = pk;
        pk = pnext;
    }
    p = pk;
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    dp = (x * pk - pm1) * static_cast<double>(n) / (x * x - 1.0);
}

}  // namespace

DiskRule::DiskRule(int m_r, int n_theta, const PrecisionContext& ctx)
    : m_r_(m_r), n_theta_(n_theta), ctx_(ctx) {
    HPReal pi = HPReal::pi(ctx);
    HPReal tol = pow_si(HPReal(10.0, ctx), -(ctx.digits() + 3));

    r_.reserve(m_r);
    wr_.reserve(m_r);
    for (int i = 1; i <= m_r; ++i) {
        // Newton on P_{m_r} over [-1,1] from the Chebyshev-angle seed.
        HPReal x(std::cos(M_PI * (i - 0.25) / (m_r + 0.5)), ctx);
        HPReal p(ctx), dp(ctx);
        for (int it = 0; it < 64; ++it) {
            legendre(x, m_r, p, dp);
            HPReal dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        legendre(x, m_r, p, dp);
        HPReal w = 2.0 / ((HPReal(1.0, ctx) - x * x) * dp * dp);
        // Map to r in (0,1) and fold in the 2r Jacobian of dSigma.
        HPReal r = (x + 1.0) * 0.5;
        r_.push_back(r);
        wr_.push_back(w * 0.5 * 2.0 * r);
    }
    // Seeds run from the largest root down; store radii ascending.
    std::reverse(r_.begin(), r_.end());
    std::reverse(wr_.begin(), wr_.end());

    r_d_.reserve(m_r);
    wr_d_.reserve(m_r);
    for (int i = 0; i < m_r; ++i) {
        r_d_.push_back(r_[i].to_double());
        wr_d_.push_back(wr_[i].to_double());
    }
    ang_d_.reserve(n_theta);
    cos_d_.reserve(n_theta);
    sin_d_.reserve(n_theta);
    for (int k = 0; k < n_theta; ++k) {
        double th = 2.0 * M_PI * (k + 0.5) / n_theta;
        ang_d_.push_back(th);
        cos_d_.push_back(std::cos(th));
        sin_d_.push_back(std::sin(th));
    }
}

std::string DiskRule::to_json() const {
    nlohmann::json j;
    j["radial_count"] = m_r_;
    j["angular_count"] = n_theta_;
    j["angular_offset"] = "half-step";
    j["radial_nodes"] = nlohmann::json::array();
    j["radial_weights"] = nlohmann::json::array();
    for (int i = 0; i < m_r_; ++i) {
        j["radial_nodes"].push_back(r_[i].to_string());
        j["radial_weights"].push_back(wr_[i].to_string());
    }
    return j.dump(2);
}

HPComplex integrate_disk(const DiskRule& rule,
                         const std::function<HPComplex(const HPComplex&)>& f) {
    const PrecisionContext& ctx = rule.context();
    HPReal pi = HPReal::pi(ctx);
    const int n = rule.angular_count();
    HPComplex acc(ctx);
    for (int i = 0; i < rule.radial_count(); ++i) {
        HPComplex ring(ctx);
        for (int k = 0; k < n; ++k) {
            HPReal th = pi * (2.0 * (k + 0.5) / n);
            HPReal c(ctx), s(ctx);
            mpfr_sin_cos(s.raw(), c.raw(), th.raw(), MPFR_RNDN);
            ring += f(HPComplex(rule.radial_nodes()[i] * c, rule.radial_nodes()[i] * s));
        }
        acc += ring * (rule.radial_weights()[i] / static_cast<double>(n));
    }
    return acc;
}

std::complex<double> integrate_disk_d(
    const DiskRule& rule, const std::function<std::complex<double>(std::complex<double>)>& f) {
    const int n = rule.angular_count();
    std::complex<double> acc = 0.0;
    for (int i = 0; i < rule.radial_count(); ++i) {
        std::complex<double> ring = 0.0;
        for (int k = 0; k < n; ++k) ring += f(rule.node_d(i, k));
        acc += ring * (rule.radial_weights_d()[i] / n);
    }
    return acc;
}

double integrate_disk_real_d(const DiskRule& rule,
                             const std::function<double(std::complex<double>)>& f) {
    const int n = rule.angular_count();
    double acc = 0.0;
    for (int i = 0; i < rule.radial_count(); ++i) {
        double ring = 0.0;
        for (int k = 0; k < n; ++k) ring += f(rule.node_d(i, k));
        acc += ring * (rule.radial_weights_d()[i] / n);
    }
    return acc;
}

const std::vector<std::pair<std::string, RealField>>& harmonic_test_set() {
    static const std::vector<std::pair<std::string, RealField>> set = {
        {"1", [](std::complex<double>) { return 1.0; }},
        {"Re z", [](std::complex<double> z) { return z.real(); }},
        {"Im z", [](std::complex<double> z) { return z.imag(); }},
        {"Re z^2", [](std::complex<double> z) { return std::real(z * z); }},
        {"Im z^2", [](std::complex<double> z) { return std::imag(z * z); }},
        {"Re z^3", [](std::complex<double> z) { return std::real(z * z * z); }},
    };
    return set;
}

double mvp_check(const DiskRule& rule, const RealField& weight, const RealField& h) {
    double v = integrate_disk_real_d(rule, [&](std::complex<double> z) { return weight(z) * h(z); });
    return std::abs(v - h(std::complex<double>(0.0, 0.0)));
}

double mvp_check(const DiskRule& rule, const WeightSpec& weight, const RealField& h) {
    return mvp_check(rule, weight.weight_fn_d(), h);
}

double mvp_max_defect(const DiskRule& rule, const RealField& weight) {
    double worst = 0.0;
    for (const auto& [name, h] : harmonic_test_set())
        worst = std::max(worst, mvp_check(rule, weight, h));
    return worst;
}

double weighted_norm(const DiskRule& rule,
                     const std::function<std::complex<double>(std::complex<double>)>& f,
                     double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("weighted_norm: alpha must be > -1");
    double v = integrate_disk_real_d(rule, [&](std::complex<double> z) {
        return std::norm(f(z)) * (alpha + 1.0) * std::pow(1.0 - std::norm(z), alpha);
    });
    return std::sqrt(v);
}

double reproducing_check(const DiskRule& rule, const WeightSpec& weight,
                         const std::function<std::complex<double>(std::complex<double>)>& f,
                         std::complex<double> w) {
    std::function<std::complex<double>(std::complex<double>)> kz;
    if (w == std::complex<double>(0.0, 0.0)) {
        kz = weight.kernel_at_zero_fn_d();
    } else if (weight.kind() == WeightSpec::Kind::standard ||
               weight.kind() == WeightSpec::Kind::toy) {
        PrecisionContext ctx = weight.context();
        HPComplex whp(w.real(), w.imag(), ctx);
        WeightSpec copy(weight);
        kz = [copy, whp, ctx](std::complex<double> z) {
            return copy.kernel_two_point(HPComplex(z.real(), z.imag(), ctx), whp)
                .to_complex_double();
        };
    } else {
        throw std::domain_error("reproducing_check: no two-point kernel for this weight kind");
    }
    auto wd = weight.weight_fn_d();
    std::complex<double> v = integrate_disk_d(rule, [&](std::complex<double> z) {
        return f(z) * std::conj(kz(z)) * wd(z);
    });
    return std::abs(v - f(w));
}

double expansive_check(const DiskRule& rule, const RealField& u, const RealField& multiplier) {
    double with_m = integrate_disk_real_d(rule, [&](std::complex<double> z) {
        return multiplier(z) * u(z) * 2.0 * (1.0 - std::norm(z));
    });
    double without = integrate_disk_real_d(
        rule, [&](std::complex<double> z) { return u(z) * 2.0 * (1.0 - std::norm(z)); });
    return with_m - without;
}

double potential_via_green(const DiskRule& rule, const RealField& f, std::complex<double> z) {
    const int n = rule.angular_count();
    double acc = 0.0;
    for (int i = 0; i < rule.radial_count(); ++i) {
        double ring = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> w = rule.node_d(i, k);
            if (std::norm(z - w) < 1e-24)
                throw std::invalid_argument("potential_via_green: z coincides with a node");
            ring += green_G_d(z, w) * f(w);
        }
        acc += ring * (rule.radial_weights_d()[i] / n);
    }
    return acc;
}

}  // namespace bergman
