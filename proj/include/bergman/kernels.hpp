#pragma once

// Reproducing kernels of the weighted Bergman spaces on the unit disk and of
// their zero-based invariant subspaces: closed forms, the one-point-at-a-time
// recursion (with a derivative step for repeated points), the coefficient
// representation obtained from the Gram linear system, Blaschke products,
// Moebius transformation rules, and the closed-form toy weight.

#include <functional>
#include <vector>

#include "bergman/linalg.hpp"
#include "bergman/zero_set.hpp"

namespace bergman {

struct DegenerateKernelError : std::runtime_error {
    explicit DegenerateKernelError(const std::string& what) : std::runtime_error(what) {}
};

// K(z,w) = (1 - z conj(w))^{-(alpha+2)} for the weight (alpha+1)(1-|z|^2)^alpha.
HPComplex bergman_kernel(const HPComplex& z, const HPComplex& w, const HPReal& alpha);

// Kernel of the subspace vanishing at lambda.
HPComplex one_point_kernel(const HPComplex& z, const HPComplex& w, const HPComplex& lambda,
                           const HPReal& alpha);

// Canonical divisor of a single zero: the normalized extremal function.
HPComplex extremal_function(const HPComplex& z, const HPComplex& lambda, const HPReal& alpha);
HPComplex extremal_function_derivative(const HPComplex& z, const HPComplex& lambda,
                                       const HPReal& alpha);

// Double-precision twins for the quadrature paths.
std::complex<double> extremal_function_d(std::complex<double> z, std::complex<double> lambda,
                                         double alpha);
std::complex<double> extremal_function_derivative_d(std::complex<double> z,
                                                    std::complex<double> lambda, double alpha);

// One-point-at-a-time recursion over distinct simple zeros (fold in input
// order). Throws DegenerateKernelError when an intermediate diagonal value
// collapses (duplicated points).
HPComplex kernel_recursive(const ZeroSet& A, const HPComplex& z, const HPComplex& w);

// Same recursion extended with Taylor-coefficient pivots for repeated points;
// reduces to kernel_recursive when every multiplicity is 1.
HPComplex kernel_with_multiplicity(const ZeroSet& A, const HPComplex& z, const HPComplex& w);

// Closed form for n copies of one point (rising-factorial coefficients).
HPComplex kernel_multipoint_closed(const HPComplex& a, int n, const HPComplex& z,
                                   const HPComplex& w, const HPReal& alpha);

// Coefficient form of K_A(z,0) = 1 - sum_j c_j (1 - z conj(a_j))^{-(alpha+2)}.
struct KernelRep {
    HPReal alpha;
    ZeroSet zeros;
    std::vector<HPComplex> coeffs;
    HPReal solve_residual;  // max-norm residual of the Gram solve
    HPReal zero_residual;   // max |K(a_j, 0)| over the prescribed zeros

    HPComplex eval(const HPComplex& z) const;
    std::string to_json() const;
};

// Builds the Gram matrix M_ij = (1 - a_i conj(a_j))^{-(alpha+2)}, solves
// M c = 1, and re-substitutes to measure both residuals. Distinct simple
// points only.
KernelRep kernel_linear_system(const ZeroSet& A);

HPComplex kernel_eval_coeffs(const KernelRep& rep, const HPComplex& z);

// Finite Blaschke product with multiplicities.
HPComplex blaschke_product(const ZeroSet& A, const HPComplex& z);

// K for the weight omega_alpha |B_A|^2 out of the zero-based kernel:
// K_A(z,w) / (B_A(z) conj(B_A(w))). Throws at prescribed zeros.
HPComplex weighted_kernel_from_zero_kernel(const ZeroSet& A, const HPComplex& z,
                                           const HPComplex& w);

struct MobiusAutomorphism {
    HPComplex gamma;  // unimodular rotation
    HPComplex zeta;   // pole parameter, |zeta| < 1

    // gamma (z - zeta) / (1 - conj(zeta) z)
    HPComplex apply(const HPComplex& z) const;
    HPComplex derivative(const HPComplex& z) const;

    static MobiusAutomorphism identity(const PrecisionContext& ctx);
    // z -> (lambda - z)/(1 - conj(lambda) z), an involution exchanging 0 and lambda.
    static MobiusAutomorphism involution(const HPComplex& lambda);
};

using KernelFn = std::function<HPComplex(const HPComplex&, const HPComplex&)>;

// K_{omega o phi}(z,w) = phi'(z) conj(phi'(w)) K_omega(phi(z), phi(w)).
HPComplex mobius_kernel_transform(const KernelFn& kernel, const MobiusAutomorphism& phi,
                                  const HPComplex& z, const HPComplex& w);

// Reproducing kernels scale with homogeneity index -1: K_{t omega} = K_omega / t.
HPComplex homogeneity_scale(const HPComplex& kernel_value, const HPReal& t);

// Kernel at w = 0 for the weight |(z-lambda)/(1-conj(lambda) z)|^theta:
// 1 + (theta/2)(1-|lambda|^2)/(1-conj(lambda) z).
HPComplex toy_kernel(const HPComplex& z, const HPComplex& lambda, const HPReal& theta);
HPComplex toy_kernel_two_point(const HPComplex& z, const HPComplex& w, const HPComplex& lambda,
                               const HPReal& theta);
// The kernel above has a zero in the open disk exactly when
// -2 < theta < -2/(1+|lambda|).
bool toy_has_disk_zero(const HPComplex& lambda, const HPReal& theta);
// Solves 1 + (theta/2)(1-|lambda|^2)/(1-conj(lambda) z) = 0; lambda != 0.
HPComplex toy_zero_location(const HPComplex& lambda, const HPReal& theta);

}  // namespace bergman
