#pragma once

// Dense Hermitian matrices over HPComplex and an LU solver with partial
// pivoting. The solver reports the max-norm residual of the returned
// solution instead of assuming it is zero; near-singular Gram matrices are
// the expected workload.

#include <span>
#include <vector>

#include "bergman/hp.hpp"

namespace bergman {

struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

class HermitianMatrix {
public:
    HermitianMatrix(int order, const PrecisionContext& ctx)
        : n_(order), ctx_(ctx), e_(static_cast<size_t>(order) * order, HPComplex(ctx)) {
        if (order < 0) throw std::invalid_argument("HermitianMatrix: negative order");
    }

    int order() const noexcept { return n_; }
    const PrecisionContext& context() const noexcept { return ctx_; }

    const HPComplex& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    // Stores v at (i,j) and conj(v) at (j,i); diagonal entries drop their
    // imaginary part.
    void set(int i, int j, const HPComplex& v) {
        if (i == j) {
            e_[static_cast<size_t>(i) * n_ + i] = HPComplex(v.re());
        } else {
            e_[static_cast<size_t>(i) * n_ + j] = v;
            e_[static_cast<size_t>(j) * n_ + i] = v.conj();
        }
    }

private:
    int n_;
    PrecisionContext ctx_;
    std::vector<HPComplex> e_;
};

struct SolveResult {
    std::vector<HPComplex> solution;
    HPReal residual_norm;  // max_i |(M x - rhs)_i|
};

// LU with partial pivoting at full operand precision. Throws
// SingularMatrixError when a pivot is exactly zero at working precision
// (duplicated rows / degenerate configurations).
SolveResult hermitian_solve(const HermitianMatrix& M, std::span<const HPComplex> rhs);

}  // namespace bergman
