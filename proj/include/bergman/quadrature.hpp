#pragma once

// Tensor quadrature over the unit disk against the normalized area measure
// dxdy/pi: Gauss-Legendre in radius (Jacobian 2r folded into the weights,
// nodes built at context precision) times a midpoint-offset trapezoid rule in
// angle. Double-precision mirrors carry the bulk integration work; every
// check on this path has a tolerance of 1e-8 or looser.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "bergman/green.hpp"
#include "bergman/weights.hpp"

namespace bergman {

class DiskRule {
public:
    DiskRule(int m_r, int n_theta, const PrecisionContext& ctx);

    int radial_count() const noexcept { return m_r_; }
    int angular_count() const noexcept { return n_theta_; }
    const PrecisionContext& context() const noexcept { return ctx_; }

    const std::vector<HPReal>& radial_nodes() const noexcept { return r_; }
    const std::vector<HPReal>& radial_weights() const noexcept { return wr_; }
    const std::vector<double>& radial_nodes_d() const noexcept { return r_d_; }
    const std::vector<double>& radial_weights_d() const noexcept { return wr_d_; }
    double angle_d(int k) const noexcept { return ang_d_[k]; }
    std::complex<double> node_d(int i, int k) const noexcept {
        return {r_d_[i] * cos_d_[k], r_d_[i] * sin_d_[k]};
    }

    std::string to_json() const;

private:
    int m_r_, n_theta_;
    PrecisionContext ctx_;
    std::vector<HPReal> r_, wr_;
    std::vector<double> r_d_, wr_d_, ang_d_, cos_d_, sin_d_;
};

inline DiskRule build_disk_rule(int m_r, int n_theta, const PrecisionContext& ctx) {
    if (m_r < 2 || n_theta < 4)
        throw std::invalid_argument("build_disk_rule: need m_r >= 2 and n_theta >= 4");
    return DiskRule(m_r, n_theta, ctx);
}

// Full-precision weighted sum, deterministic order. Angular nodes are
// evaluated on demand at context precision.
HPComplex integrate_disk(const DiskRule& rule,
                         const std::function<HPComplex(const HPComplex&)>& f);

std::complex<double> integrate_disk_d(
    const DiskRule& rule, const std::function<std::complex<double>(std::complex<double>)>& f);
double integrate_disk_real_d(const DiskRule& rule,
                             const std::function<double(std::complex<double>)>& f);

// The fixed harmonic battery: 1, Re z, Im z, Re z^2, Im z^2, Re z^3.
using RealField = std::function<double(std::complex<double>)>;
const std::vector<std::pair<std::string, RealField>>& harmonic_test_set();

// | integral of h * weight dSigma - h(0) |.
double mvp_check(const DiskRule& rule, const RealField& weight, const RealField& h);
double mvp_check(const DiskRule& rule, const WeightSpec& weight, const RealField& h);
// Worst defect over the harmonic battery.
double mvp_max_defect(const DiskRule& rule, const RealField& weight);

// (integral of |f|^2 omega_alpha dSigma)^(1/2).
double weighted_norm(const DiskRule& rule,
                     const std::function<std::complex<double>(std::complex<double>)>& f,
                     double alpha);

// | integral of f conj(K_omega(., w)) omega dSigma - f(w) |.
double reproducing_check(const DiskRule& rule, const WeightSpec& weight,
                         const std::function<std::complex<double>(std::complex<double>)>& f,
                         std::complex<double> w);

// integral of multiplier * u * 2(1-|z|^2) dSigma minus the same without the
// multiplier; nonnegative (up to rule error) for subharmonic u.
double expansive_check(const DiskRule& rule, const RealField& u, const RealField& multiplier);

// integral of G(z, .) f dSigma by the plain rule; z must stay away from the
// nodes (no singularity subtraction on this path).
double potential_via_green(const DiskRule& rule, const RealField& f, std::complex<double> z);

}  // namespace bergman
