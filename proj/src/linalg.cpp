#include "bergman/linalg.hpp"

#include <numeric>

namespace bergman {

SolveResult hermitian_solve(const HermitianMatrix& M, std::span<const HPComplex> rhs) {
    const int n = M.order();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("hermitian_solve: rhs length != order");
    const PrecisionContext& ctx = M.context();

    if (n == 0) return {{}, HPReal(ctx)};

    std::vector<HPComplex> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = M.at(i, j);
    std::vector<HPComplex> x(rhs.begin(), rhs.end());

    auto A = [&](int i, int j) -> HPComplex& { return a[static_cast<size_t>(i) * n + j]; };

    for (int k = 0; k < n; ++k) {
        int piv = k;
        HPReal best = abs2(A(k, k));
        for (int i = k + 1; i < n; ++i) {
            HPReal m = abs2(A(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best.is_zero())
            throw SingularMatrixError("hermitian_solve: zero pivot at column " +
                                      std::to_string(k));
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(x[k], x[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            HPComplex f = A(i, k) / A(k, k);
            for (int j = k + 1; j < n; ++j) A(i, j) = A(i, j) - f * A(k, j);
            x[i] = x[i] - f * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        HPComplex s = x[i];
        for (int j = i + 1; j < n; ++j) s = s - A(i, j) * x[j];
        x[i] = s / A(i, i);
    }

    HPReal res(ctx);
    for (int i = 0; i < n; ++i) {
        HPComplex r(ctx);
        for (int j = 0; j < n; ++j) r += M.at(i, j) * x[j];
        r -= rhs[i];
        res = max(res, abs(r));
    }
    return {std::move(x), std::move(res)};
}

}  // namespace bergman
