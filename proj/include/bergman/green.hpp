#pragma once

// Closed-form Green functions on the unit disk: the Laplacian Green function
// G, the biharmonic Green function, the weighted biharmonic Green function
// with its harmonic companion and two-sided bounds, and the Poisson kernel.
// The removable z = w singularities of the biharmonic kernels return their
// analytic limit.

#include <complex>

#include "bergman/hp.hpp"

namespace bergman {

// G(z,w) = log |(z-w)/(1-z conj(w))|^2, negative inside, zero on |z|=1.
HPReal green_G(const HPComplex& z, const HPComplex& w);

// |z-w|^2 log|(z-w)/(1-z conj(w))|^2 + (1-|z|^2)(1-|w|^2), clamped-plate kernel.
HPReal biharmonic_gamma(const HPComplex& z, const HPComplex& w);

// Green function of Delta (1-|z|^2)^{-1} Delta with clamped boundary data.
HPReal weighted_gamma1(const HPComplex& z, const HPComplex& w);

struct Gamma1Bounds {
    HPReal lower;
    HPReal upper;
};
Gamma1Bounds gamma1_bounds(const HPComplex& z, const HPComplex& w);

// Harmonic-in-z companion: Delta_z Gamma1(z,w) = (1-|z|^2)(G(z,w) + H1(z,w)).
HPReal h1_harmonic(const HPComplex& z, const HPComplex& w);

// (1-|w|^2)/|zeta-w|^2 for an interior w and boundary zeta.
HPReal poisson_kernel(const HPComplex& w, const HPComplex& zeta);

// Double-precision twins for quadrature-grade work.
double green_G_d(std::complex<double> z, std::complex<double> w);
double biharmonic_gamma_d(std::complex<double> z, std::complex<double> w);
double weighted_gamma1_d(std::complex<double> z, std::complex<double> w);
double h1_harmonic_d(std::complex<double> z, std::complex<double> w);
double poisson_kernel_d(std::complex<double> w, std::complex<double> zeta);

}  // namespace bergman
