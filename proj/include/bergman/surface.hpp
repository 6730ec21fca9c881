#pragma once

// Geometry layer: curvature from weights (isothermal and general Brioschi
// form), the Laplace-Beltrami operator, reconstruction of a weight from
// curvature data through the Green log-potential, assembly of the extremal
// weight, metric potentials, and the clamped boundary-value verification.

#include <array>
#include <optional>

#include "bergman/quadrature.hpp"

namespace bergman {

struct NonPositiveWeightError : std::runtime_error {
    explicit NonPositiveWeightError(const std::string& what) : std::runtime_error(what) {}
};

using HPField = std::function<HPReal(const HPComplex&)>;

// Taylor data of a smooth real density at a point: coefficients t[j][k] of
// (w-z)^j (conj(w)-conj(z))^k for j+k <= 3.
struct DensityJet3 {
    std::array<std::array<std::complex<double>, 4>, 4> t{};
};

class CurvatureData {
public:
    enum class Kind { zero, re_part, hyperbolic, dilated_hyperbolic, point_mass, custom };

    static CurvatureData zero();
    static CurvatureData re_part();  // mu(z) = Re z
    static CurvatureData hyperbolic(double alpha);  // 2 alpha / (1-|z|^2)^2
    static CurvatureData dilated_hyperbolic(double r, double alpha);
    // mu = -theta * delta_lambda; handled by closed forms, never quadrature.
    static CurvatureData point_mass(std::complex<double> lambda, double theta);
    // Generic callable; subtraction jets fall back to finite differences of mu.
    static CurvatureData custom(RealField mu);
    // Bilinear lattice over [-1,1]^2; same jet treatment as custom data.
    static CurvatureData tabulated(TabulatedGrid grid);
    // Lattice "x,y,value" CSV as written by the grid exporters.
    static CurvatureData from_csv(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_point_mass() const noexcept { return kind_ == Kind::point_mass; }

    double value_d(std::complex<double> z) const;
    HPReal value_hp(const HPComplex& z, const PrecisionContext& ctx) const;
    DensityJet3 jet3(std::complex<double> z) const;

    std::complex<double> pm_lambda() const { return lambda_; }
    double pm_theta() const { return theta_; }

    // inf over a polar sample of 2 / ((1-|z|^2)^2 mu(z)^+); a value >= 1
    // certifies the hyperbolic comparison hypothesis at level 1 (and >= 1/a
    // certifies it at level a). +inf when mu <= 0 everywhere on the sample.
    double alpha_margin(int nr = 64, int ntheta = 128) const;

    // Families whose log-potential has a closed form (zero, dilated, point
    // mass); integrating the quadrature-backed weight over the disk should go
    // through these instead of nesting rules.
    bool has_closed_omega1() const noexcept;
    double omega1_closed_d(std::complex<double> z) const;

private:
    explicit CurvatureData(Kind k) : kind_(k) {}
    Kind kind_;
    double r_ = 0.0, alpha_ = 0.0;  // dilated_hyperbolic
    std::complex<double> lambda_ = 0.0;
    double theta_ = 0.0;  // point_mass
    RealField fn_;        // custom
};

// integral of G(z,.) mu dSigma with the degree-3 Taylor moments of mu pulled
// out in closed form; safe to differentiate in z at small steps.
double green_potential_subtracted(const CurvatureData& mu, const DiskRule& rule,
                                  std::complex<double> z);

// Weight solving Delta log omega1 = -mu/2 through the log-potential; point
// masses take the closed Moebius-power form.
double omega1_from_mu(const CurvatureData& mu, const DiskRule& rule, std::complex<double> z);
double omega1_log(const CurvatureData& mu, const DiskRule& rule, std::complex<double> z);

// -2 Delta_h log omega1 at z (five-point stencil, step h); recovers mu for
// consistent data.
double curvature_from_mu_roundtrip(const CurvatureData& mu, const DiskRule& rule,
                                   std::complex<double> z, double h);

struct Omega0 {
    std::function<double(std::complex<double>)> value;
    double kernel00 = 0.0;
    double mass = 0.0;  // integral against dSigma
    bool zero_free = true;
    double min_kernel_abs = 0.0;
};

// omega0(z) = |K(z,0)|^2 / K(0,0) * omega1(z); scans the kernel factor for
// interior zeros (modulus minimum plus a real-axis sign-change sweep).
Omega0 omega0_construct(const RealField& omega1,
                        const std::function<std::complex<double>(std::complex<double>)>& kernel_at_zero,
                        const DiskRule& rule);

class MetricGrid {
public:
    static MetricGrid isothermal(HPField omega, int nx, int ny, const PrecisionContext& ctx,
                                 std::optional<HPReal> fd_step = std::nullopt);
    static MetricGrid general(HPField a, HPField b, HPField c, int nx, int ny,
                              const PrecisionContext& ctx,
                              std::optional<HPReal> fd_step = std::nullopt);

    bool is_isothermal() const noexcept { return isothermal_; }
    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    double x_at(int i) const { return -1.0 + 2.0 * i / (nx_ - 1); }
    double y_at(int j) const { return -1.0 + 2.0 * j / (ny_ - 1); }
    bool interior(double x, double y, double margin = 1e-6) const {
        return x * x + y * y < (1.0 - margin) * (1.0 - margin);
    }
    const HPField& omega() const { return omega_; }
    const HPField& a() const { return a_; }
    const HPField& b() const { return b_; }
    const HPField& c() const { return c_; }
    const HPReal& fd_step() const { return h_; }
    const PrecisionContext& context() const { return ctx_; }

private:
    MetricGrid(int nx, int ny, const PrecisionContext& ctx) : nx_(nx), ny_(ny), ctx_(ctx), h_(ctx) {}
    int nx_, ny_;
    PrecisionContext ctx_;
    bool isothermal_ = true;
    HPField omega_, a_, b_, c_;
    HPReal h_;
};

// kappa = -(2/omega) Delta log omega with the normalized Laplacian, five-point
// stencil of step h. Throws std::domain_error when the stencil leaves the disk.
HPReal curvature_isothermal(const HPField& omega, const HPComplex& z, const HPReal& h);
HPReal curvature_isothermal(const MetricGrid& grid, const HPComplex& z);

// Brioschi two-determinant expression with all partials by centered
// differences at the grid's step.
HPReal brioschi_curvature(const MetricGrid& grid, const HPComplex& z);

// Divergence-form Laplace-Beltrami operator applied to f at z by nested
// centered differences; equals (Delta f)/omega for isothermal metrics.
HPReal laplace_beltrami_apply(const MetricGrid& grid, const HPField& f, const HPComplex& z);

// Green potential of the weight (plain rule; boundary values vanish with the
// integrand).
double metric_potential(const RealField& omega, const DiskRule& rule, std::complex<double> z);

// 2 * integral of P(w, zeta) omega(w) dSigma(w) via the harmonic-measure
// substitution in the angular variable (spectrally accurate for smooth
// weights); equals the outward normal derivative of the metric potential.
double boundary_normal_derivative(const RealField& omega, const DiskRule& rule,
                                  std::complex<double> zeta);

// Cross-check variant: one-sided radial difference of the quadrature potential.
double boundary_normal_derivative_fd(const RealField& omega, const DiskRule& rule,
                                     std::complex<double> zeta, double h);

struct MpotReport {
    double pde_defect = 0.0;       // max | Delta_h log(Delta Phi0) + mu/2 |, Delta Phi0 = omega0
    double boundary_defect = 0.0;  // max |Phi0| on the 16-point boundary set
    double normal_defect = 0.0;    // max |dPhi0/dn - 2| on the same set
};

// Verifies the clamped system for the metric potential of omega0. Throws
// NonPositiveWeightError when omega0 is not positive on the grid (or the
// caller's kernel scan already failed).
MpotReport verify_mpot_system(const HPField& omega0_hp, const RealField& omega0_d,
                              const CurvatureData& mu, const MetricGrid& grid,
                              const DiskRule& rule, bool claimed_zero_free = true);

}  // namespace bergman
