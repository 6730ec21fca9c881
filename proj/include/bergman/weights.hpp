#pragma once

// Tagged weight descriptions: the standard radial family, the standard family
// times a squared Blaschke modulus (even zero exponents), the closed-form
// Moebius-power toy weight, and tabulated grids. Where the reproducing kernel
// at w = 0 has a usable form it is exposed here; the normalization scale
// rides along with homogeneity index -1.

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "bergman/kernels.hpp"

namespace bergman {

struct TabulatedGrid {
    int nx = 0, ny = 0;
    std::vector<double> values;  // row-major over [-1,1]^2, y fastest

    double at(double x, double y) const;  // bilinear
};

class WeightSpec {
public:
    enum class Kind { standard, zero_weighted, toy, tabulated };

    static WeightSpec standard(const HPReal& alpha);
    // omega_alpha(z) * prod |(z-a_k)/(1-conj(a_k) z)|^{rho_k}; multiplicities
    // in A encode rho_k = 2 * multiplicity.
    static WeightSpec zero_weighted(const ZeroSet& A);
    static WeightSpec toy(const HPComplex& lambda, const HPReal& theta);
    static WeightSpec tabulated(TabulatedGrid grid, const PrecisionContext& ctx);

    WeightSpec scaled(double t) const;

    Kind kind() const noexcept { return kind_; }
    double normalization() const noexcept { return norm_; }
    const PrecisionContext& context() const noexcept { return ctx_; }

    HPReal value_hp(const HPComplex& z) const;
    double value_d(std::complex<double> z) const;

    bool has_kernel() const noexcept { return kind_ != Kind::tabulated; }
    // K_omega(z, 0), normalization included.
    HPComplex kernel_at_zero(const HPComplex& z) const;
    HPReal kernel_00() const;
    // Full two-point kernel; available for the standard and toy families.
    HPComplex kernel_two_point(const HPComplex& z, const HPComplex& w) const;

    std::function<double(std::complex<double>)> weight_fn_d() const;
    std::function<std::complex<double>(std::complex<double>)> kernel_at_zero_fn_d() const;
    // |K_omega(z,0)|^2 omega(z) / K_omega(0,0) == Lambda_omega(z) * 2(1-|z|^2),
    // with the Blaschke factors cancelled analytically for zero_weighted kinds.
    std::function<double(std::complex<double>)> lambda_multiplier_fn_d() const;

private:
    WeightSpec(Kind k, const PrecisionContext& ctx, HPReal alpha)
        : kind_(k), ctx_(ctx), alpha_(std::move(alpha)) {}

    Kind kind_;
    PrecisionContext ctx_;
    HPReal alpha_;                         // standard / zero_weighted
    std::shared_ptr<const ZeroSet> zeros_; // zero_weighted
    std::shared_ptr<const KernelRep> rep_; // zero_weighted, simple points
    HPComplex lambda_;                     // toy
    HPReal theta_;                         // toy
    std::shared_ptr<const TabulatedGrid> grid_;
    double norm_ = 1.0;
};

// |K_omega(z,0)|^2 / K_omega(0,0) * omega(z) / (2 (1-|z|^2)); needs |z| < 1
// and kernel access on the weight.
HPReal lambda_omega(const HPComplex& z, const WeightSpec& weight);

}  // namespace bergman
