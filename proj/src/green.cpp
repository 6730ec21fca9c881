#include "bergman/green.hpp"

#include <cmath>

namespace bergman {

namespace {

PrecisionContext ctx_of(const HPReal& x) {
    return PrecisionContext(std::max(16, static_cast<int>((x.prec() - 4) / 3.3219280948873623)));
}

// log |(z-w)/(1-z conj(w))|^2 as a difference of logs; callers vet z != w.
HPReal log_ratio_sq(const HPComplex& z, const HPComplex& w) {
    return log(abs2(z - w)) - log(abs2(HPComplex(HPReal(1.0, ctx_of(z.re()))) - z * w.conj()));
}

}  // namespace

HPReal green_G(const HPComplex& z, const HPComplex& w) {
    if (z == w) throw std::domain_error("green_G: z = w is the logarithmic singularity");
    return log_ratio_sq(z, w);
}

HPReal biharmonic_gamma(const HPComplex& z, const HPComplex& w) {
    PrecisionContext ctx = ctx_of(z.re());
    HPReal one(1.0, ctx);
    HPReal tail = (one - abs2(z)) * (one - abs2(w));
    if (z == w) return tail;  // |z-w|^2 log(...) -> 0
    return abs2(z - w) * log_ratio_sq(z, w) + tail;
}

HPReal weighted_gamma1(const HPComplex& z, const HPComplex& w) {
    PrecisionContext ctx = ctx_of(z.re());
    HPReal one(1.0, ctx);
    HPComplex cone(one);

    HPReal az = abs2(z), aw = abs2(w);
    HPReal azw = abs2(z * w);
    HPComplex d = cone - z * w.conj();
    HPReal dd = abs2(d);
    HPReal rezw = (z * w.conj()).re();

    HPReal second = (one - az) * (one - aw) *
                    (HPReal(7.0, ctx) - az - aw - azw - 4.0 * rezw -
                     2.0 * (one - az) * (one - aw) * (one - azw) / dd) /
                    8.0;
    if (z == w) return second;
    HPReal lead = abs2(z - w) - abs2(z * z - w * w) / 4.0;
    return lead * log_ratio_sq(z, w) + second;
}

Gamma1Bounds gamma1_bounds(const HPComplex& z, const HPComplex& w) {
    PrecisionContext ctx = ctx_of(z.re());
    HPReal one(1.0, ctx);
    if (!(abs2(z) < 1.0) || !(abs2(w) < 1.0))
        throw std::domain_error("gamma1_bounds: interior points required");
    HPReal pz = one - abs2(z), pw = one - abs2(w);
    HPReal cube = pz * pz * pz * pw * pw * pw / 8.0;
    HPReal dd = abs2(HPComplex(one) - z * w.conj());
    HPReal lower = cube / dd;
    HPReal upper = cube * (dd + 4.0 - abs2(z + w)) / (dd * dd);
    return {std::move(lower), std::move(upper)};
}

HPReal h1_harmonic(const HPComplex& z, const HPComplex& w) {
    PrecisionContext ctx = ctx_of(z.re());
    HPReal one(1.0, ctx);
    HPComplex cone(one);
    HPReal aw = abs2(w);
    HPComplex d = cone - z * w.conj();
    HPReal dd = abs2(d);
    HPReal first = (HPReal(3.0, ctx) - aw) * (one - abs2(z * w)) / dd * 0.5;
    HPReal second = (one - aw) * ((z * w.conj()) / (d * d)).re();
    return (one - aw) * (first + second);
}

HPReal poisson_kernel(const HPComplex& w, const HPComplex& zeta) {
    PrecisionContext ctx = ctx_of(w.re());
    HPReal one(1.0, ctx);
    if (!(abs2(w) < 1.0)) throw std::domain_error("poisson_kernel: |w| must be < 1");
    return (one - abs2(w)) / abs2(zeta - w);
}

double green_G_d(std::complex<double> z, std::complex<double> w) {
    return std::log(std::norm(z - w) / std::norm(1.0 - z * std::conj(w)));
}

double biharmonic_gamma_d(std::complex<double> z, std::complex<double> w) {
    double tail = (1.0 - std::norm(z)) * (1.0 - std::norm(w));
    if (z == w) return tail;
    return std::norm(z - w) * green_G_d(z, w) + tail;
}

double weighted_gamma1_d(std::complex<double> z, std::complex<double> w) {
    double az = std::norm(z), aw = std::norm(w);
    double azw = std::norm(z * w);
    double dd = std::norm(1.0 - z * std::conj(w));
    double rezw = std::real(z * std::conj(w));
    double second = (1.0 - az) * (1.0 - aw) *
                    (7.0 - az - aw - azw - 4.0 * rezw -
                     2.0 * (1.0 - az) * (1.0 - aw) * (1.0 - azw) / dd) /
                    8.0;
    if (z == w) return second;
    double lead = std::norm(z - w) - 0.25 * std::norm(z * z - w * w);
    return lead * green_G_d(z, w) + second;
}

double h1_harmonic_d(std::complex<double> z, std::complex<double> w) {
    double aw = std::norm(w);
    std::complex<double> d = 1.0 - z * std::conj(w);
    double first = 0.5 * (3.0 - aw) * (1.0 - std::norm(z * w)) / std::norm(d);
    double second = (1.0 - aw) * std::real(z * std::conj(w) / (d * d));
    return (1.0 - aw) * (first + second);
}

double poisson_kernel_d(std::complex<double> w, std::complex<double> zeta) {
    return (1.0 - std::norm(w)) / std::norm(zeta - w);
}

}  // namespace bergman
