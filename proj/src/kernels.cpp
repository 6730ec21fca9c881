#include "bergman/kernels.hpp"

#include <json.hpp>

namespace bergman {

namespace {

PrecisionContext ctx_of(const HPReal& x) {
    return PrecisionContext(std::max(16, static_cast<int>((x.prec() - 4) / 3.3219280948873623)));
}

void check_disk_pair(const HPComplex& z, const HPComplex& w) {
    HPReal az = abs2(z), aw = abs2(w);
    if (az > 1.0 || aw > 1.0)
        throw std::domain_error("kernel: arguments must lie in the closed disk");
    if (az >= 1.0 && aw >= 1.0)
        throw std::domain_error("kernel: both arguments on the boundary");
}

HPReal power_of_ten(const PrecisionContext& ctx, long e) {
    return pow_si(HPReal(10.0, ctx), e);
}

void check_distinct(const ZeroSet& A) {
    const auto& p = A.points();
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i].location == p[j].location)
                throw std::invalid_argument(
                    "kernel: repeated location in point list; use a multiplicity instead");
}

}  // namespace

HPComplex bergman_kernel(const HPComplex& z, const HPComplex& w, const HPReal& alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("bergman_kernel: alpha must be > -1");
    check_disk_pair(z, w);
    PrecisionContext ctx = ctx_of(alpha);
    HPComplex one(HPReal(1.0, ctx));
    return one / cpow_real(one - z * w.conj(), alpha + 2.0);
}

HPComplex one_point_kernel(const HPComplex& z, const HPComplex& w, const HPComplex& lambda,
                           const HPReal& alpha) {
    check_disk_pair(z, w);
    if (!(abs2(lambda) < 1.0)) throw std::domain_error("one_point_kernel: |lambda| must be < 1");
    PrecisionContext ctx = ctx_of(alpha);
    HPReal s = alpha + 2.0;
    HPComplex one(HPReal(1.0, ctx));
    HPComplex k = one / cpow_real(one - z * w.conj(), s);
    HPReal t = pow(HPReal(1.0, ctx) - abs2(lambda), s);
    HPComplex d = cpow_real(one - z * lambda.conj(), s) * cpow_real(one - lambda * w.conj(), s);
    return k - HPComplex(t) / d;
}

HPComplex extremal_function(const HPComplex& z, const HPComplex& lambda, const HPReal& alpha) {
    if (lambda.is_zero())
        throw std::domain_error("extremal_function: lambda = 0 degenerates the normalizer");
    if (!(abs2(lambda) < 1.0)) throw std::domain_error("extremal_function: |lambda| must be < 1");
    PrecisionContext ctx = ctx_of(alpha);
    HPReal s = alpha + 2.0;
    HPReal t = pow(HPReal(1.0, ctx) - abs2(lambda), s);
    HPReal norm = 1.0 / sqrt(HPReal(1.0, ctx) - t);
    HPComplex one(HPReal(1.0, ctx));
    return (one - HPComplex(t) / cpow_real(one - z * lambda.conj(), s)) * norm;
}

HPComplex extremal_function_derivative(const HPComplex& z, const HPComplex& lambda,
                                       const HPReal& alpha) {
    if (lambda.is_zero())
        throw std::domain_error("extremal_function: lambda = 0 degenerates the normalizer");
    PrecisionContext ctx = ctx_of(alpha);
    HPReal s = alpha + 2.0;
    HPReal t = pow(HPReal(1.0, ctx) - abs2(lambda), s);
    HPReal norm = 1.0 / sqrt(HPReal(1.0, ctx) - t);
    HPComplex one(HPReal(1.0, ctx));
    // d/dz of -t (1 - z conj(lambda))^{-s} = -t s conj(lambda) (1 - z conj(lambda))^{-s-1}
    return HPComplex(-(t * s) * norm) * lambda.conj() / cpow_real(one - z * lambda.conj(), s + 1.0);
}

std::complex<double> extremal_function_d(std::complex<double> z, std::complex<double> lambda,
                                         double alpha) {
    double t = std::pow(1.0 - std::norm(lambda), alpha + 2.0);
    return (1.0 - t / std::pow(1.0 - z * std::conj(lambda), alpha + 2.0)) / std::sqrt(1.0 - t);
}

std::complex<double> extremal_function_derivative_d(std::complex<double> z,
                                                    std::complex<double> lambda, double alpha) {
    double t = std::pow(1.0 - std::norm(lambda), alpha + 2.0);
    return -t * (alpha + 2.0) * std::conj(lambda) /
           std::pow(1.0 - z * std::conj(lambda), alpha + 3.0) / std::sqrt(1.0 - t);
}

namespace {

// Grid of current kernel values over rows {z} u A and columns {w} u A.
// Each pivot step projects out the evaluation at one configuration point.
HPComplex recursive_grid(const ZeroSet& A, const HPComplex& z, const HPComplex& w) {
    const HPReal& alpha = A.alpha();
    PrecisionContext ctx = ctx_of(alpha);
    const auto& pts = A.points();
    const int n = static_cast<int>(pts.size());

    std::vector<HPComplex> rowpt, colpt;
    rowpt.reserve(n + 1);
    colpt.reserve(n + 1);
    rowpt.push_back(z);
    colpt.push_back(w);
    for (const auto& p : pts) {
        rowpt.push_back(p.location);
        colpt.push_back(p.location);
    }

    std::vector<std::vector<HPComplex>> M(n + 1, std::vector<HPComplex>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) M[i][j] = bergman_kernel(rowpt[i], colpt[j], alpha);

    HPReal floor = power_of_ten(ctx, 5 - ctx.digits());
    for (int t = 1; t <= n; ++t) {
        HPComplex piv = M[t][t];
        HPReal scale = bergman_kernel(pts[t - 1].location, pts[t - 1].location, alpha).re();
        if (abs(piv) < floor * scale)
            throw DegenerateKernelError("kernel_recursive: diagonal collapse at point " +
                                        std::to_string(t - 1));
        std::vector<HPComplex> prow = M[t], pcol(n + 1);
        for (int i = 0; i <= n; ++i) pcol[i] = M[i][t];
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) M[i][j] = M[i][j] - pcol[i] * prow[j] / piv;
    }
    return M[0][0];
}

// Taylor coefficients of (1 - z conj(w))^{-s} at (x, y) in the variables
// (z - x) and (conj(w) - conj(y)), orders i <= P, j <= Q.
std::vector<std::vector<HPComplex>> base_kernel_jet(const HPComplex& x, const HPComplex& y,
                                                    const HPReal& s, int P, int Q) {
    PrecisionContext ctx = ctx_of(s);
    HPComplex one(HPReal(1.0, ctx));
    HPComplex yb = y.conj();
    HPComplex c00 = one - x * yb;
    HPComplex c10 = -yb, c01 = -x, c11 = -one;

    std::vector<std::vector<HPComplex>> T(P + 1, std::vector<HPComplex>(Q + 1, HPComplex(ctx)));

    // (1+v)^{-s} with v = (c10 Z + c01 W + c11 Z W)/c00; v has no constant
    // term, so order k contributes only to total degree >= k.
    std::vector<HPComplex> p10{one}, p01{one}, p11{one}, p00{one};
    for (int k = 1; k <= P + Q; ++k) {
        p10.push_back(p10.back() * c10);
        p01.push_back(p01.back() * c01);
        p11.push_back(p11.back() * c11);
        p00.push_back(p00.back() * c00);
    }
    HPReal bin(1.0, ctx);
    for (int k = 0; k <= P + Q; ++k) {
        if (k > 0) bin = bin * (-(s + static_cast<double>(k - 1))) / static_cast<double>(k);
        for (int k1 = 0; k1 <= k; ++k1) {
            for (int k3 = 0; k3 + k1 <= k; ++k3) {
                int k2 = k - k1 - k3;
                int i = k1 + k3, j = k2 + k3;
                if (i > P || j > Q) continue;
                double multinom = 1.0;
                for (int t = 0; t < k1; ++t) multinom *= static_cast<double>(k - t) / (k1 - t);
                for (int t = 0; t < k2; ++t) multinom *= static_cast<double>(k - k1 - t) / (k2 - t);
                HPComplex term = p10[k1] * p01[k2] * p11[k3] / p00[k];
                T[i][j] += term * (bin * multinom);
            }
        }
    }
    HPComplex f0 = cpow_real(c00, -s);
    for (auto& row : T)
        for (auto& v : row) v = v * f0;
    return T;
}

struct JetNode {
    int point;  // -1 for the evaluation argument
    int order;
};

}  // namespace

HPComplex kernel_recursive(const ZeroSet& A, const HPComplex& z, const HPComplex& w) {
    if (!A.all_simple())
        throw std::invalid_argument(
            "kernel_recursive: multiplicities present; use kernel_with_multiplicity");
    check_distinct(A);
    check_disk_pair(z, w);
    return recursive_grid(A, z, w);
}

HPComplex kernel_with_multiplicity(const ZeroSet& A, const HPComplex& z, const HPComplex& w) {
    check_distinct(A);
    check_disk_pair(z, w);
    if (A.all_simple()) return recursive_grid(A, z, w);

    const HPReal& alpha = A.alpha();
    PrecisionContext ctx = ctx_of(alpha);
    HPReal s = alpha + 2.0;
    const auto& pts = A.points();
    const int np = static_cast<int>(pts.size());

    std::vector<JetNode> nodes;
    nodes.push_back({-1, 0});
    std::vector<int> first(np);
    for (int t = 0; t < np; ++t) {
        first[t] = static_cast<int>(nodes.size());
        for (int r = 0; r < pts[t].multiplicity; ++r) nodes.push_back({t, r});
    }
    const int N = static_cast<int>(nodes.size());
    auto point_of = [&](int idx, bool row) -> const HPComplex& {
        if (nodes[idx].point < 0) return row ? z : w;
        return pts[nodes[idx].point].location;
    };
    auto maxord = [&](int t) { return (t < 0) ? 0 : pts[t].multiplicity - 1; };

    // Fill the mixed Taylor-coefficient table of the base kernel.
    std::vector<std::vector<HPComplex>> M(N, std::vector<HPComplex>(N));
    std::vector<int> group;  // node index of order 0 per group: -1 group is node 0
    group.push_back(0);
    for (int t = 0; t < np; ++t) group.push_back(first[t]);
    for (int gi = 0; gi < np + 1; ++gi) {
        int it = gi - 1;  // point index, -1 for argument group
        for (int gj = 0; gj < np + 1; ++gj) {
            int jt = gj - 1;
            auto T = base_kernel_jet(point_of(group[gi], true), point_of(group[gj], false), s,
                                     maxord(it), maxord(jt));
            for (int i = 0; i <= maxord(it); ++i)
                for (int j = 0; j <= maxord(jt); ++j) M[group[gi] + i][group[gj] + j] = T[i][j];
        }
    }

    HPReal floor = power_of_ten(ctx, 5 - ctx.digits());
    for (int t = 0; t < np; ++t) {
        for (int r = 0; r < pts[t].multiplicity; ++r) {
            int p = first[t] + r;
            HPComplex piv = M[p][p];
            if (abs(piv) < floor)
                throw DegenerateKernelError("kernel_with_multiplicity: pivot collapse");
            std::vector<HPComplex> prow = M[p], pcol(N);
            for (int i = 0; i < N; ++i) pcol[i] = M[i][p];
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) M[i][j] = M[i][j] - pcol[i] * prow[j] / piv;
        }
    }
    return M[0][0];
}

HPComplex kernel_multipoint_closed(const HPComplex& a, int n, const HPComplex& z,
                                   const HPComplex& w, const HPReal& alpha) {
    if (n < 1) throw std::invalid_argument("kernel_multipoint_closed: n must be >= 1");
    if (!(abs2(a) < 1.0)) throw std::domain_error("kernel_multipoint_closed: |a| must be < 1");
    check_disk_pair(z, w);
    PrecisionContext ctx = ctx_of(alpha);
    HPReal s = alpha + 2.0;
    HPComplex one(HPReal(1.0, ctx));

    HPComplex k = one / cpow_real(one - z * w.conj(), s);
    HPComplex dz = one - z * a.conj();
    HPComplex dw = one - a * w.conj();
    HPComplex pre = HPComplex(pow(HPReal(1.0, ctx) - abs2(a), s)) /
                    (cpow_real(dz, s) * cpow_real(dw, s));
    HPComplex mz = (z - a) / dz;
    HPComplex mw = (w.conj() - a.conj()) / dw;
    HPComplex q = mz * mw;
    HPComplex sum(ctx), qpow = one;
    for (int j = 0; j < n; ++j) {
        sum += qpow * pochhammer_coeff(alpha, static_cast<unsigned>(j));
        qpow = qpow * q;
    }
    return k - pre * sum;
}

HPComplex KernelRep::eval(const HPComplex& z) const { return kernel_eval_coeffs(*this, z); }

std::string KernelRep::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha.to_string();
    j["zeros"] = nlohmann::json::parse(zeros.to_json());
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : coeffs) j["coeffs"].push_back(c.to_string());
    j["solve_residual"] = solve_residual.to_string();
    j["zero_residual"] = zero_residual.to_string();
    return j.dump(2);
}

KernelRep kernel_linear_system(const ZeroSet& A) {
    if (!A.all_simple())
        throw std::invalid_argument("kernel_linear_system: distinct simple points only");
    check_distinct(A);
    const HPReal& alpha = A.alpha();
    PrecisionContext ctx = ctx_of(alpha);
    const auto& pts = A.points();
    const int n = static_cast<int>(pts.size());

    KernelRep rep{alpha, A, {}, HPReal(ctx), HPReal(ctx)};
    if (n == 0) return rep;

    HPReal s = alpha + 2.0;
    HPComplex one(HPReal(1.0, ctx));
    HermitianMatrix M(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            M.set(i, j, one / cpow_real(one - pts[i].location * pts[j].location.conj(), s));
    std::vector<HPComplex> rhs(n, one);
    SolveResult sol = hermitian_solve(M, rhs);
    rep.coeffs = std::move(sol.solution);
    rep.solve_residual = std::move(sol.residual_norm);
    for (int j = 0; j < n; ++j) rep.zero_residual = max(rep.zero_residual, abs(rep.eval(pts[j].location)));
    return rep;
}

HPComplex kernel_eval_coeffs(const KernelRep& rep, const HPComplex& z) {
    if (abs2(z) > 1.0) throw std::domain_error("kernel_eval_coeffs: |z| must be <= 1");
    PrecisionContext ctx = ctx_of(rep.alpha);
    HPReal s = rep.alpha + 2.0;
    HPComplex one(HPReal(1.0, ctx));
    HPComplex acc = one;
    const auto& pts = rep.zeros.points();
    for (size_t j = 0; j < rep.coeffs.size(); ++j)
        acc -= rep.coeffs[j] / cpow_real(one - z * pts[j].location.conj(), s);
    return acc;
}

HPComplex blaschke_product(const ZeroSet& A, const HPComplex& z) {
    if (abs2(z) > 1.0) throw std::domain_error("blaschke_product: |z| must be <= 1");
    PrecisionContext ctx = ctx_of(A.alpha());
    HPComplex one(HPReal(1.0, ctx));
    HPComplex b = one;
    for (const auto& p : A.points()) {
        HPComplex f = (z - p.location) / (one - p.location.conj() * z);
        for (int m = 0; m < p.multiplicity; ++m) b = b * f;
    }
    return b;
}

HPComplex weighted_kernel_from_zero_kernel(const ZeroSet& A, const HPComplex& z,
                                           const HPComplex& w) {
    HPComplex bz = blaschke_product(A, z);
    HPComplex bw = blaschke_product(A, w);
    if (bz.is_zero() || bw.is_zero())
        throw std::domain_error("weighted_kernel_from_zero_kernel: argument is a prescribed zero");
    HPComplex k = kernel_with_multiplicity(A, z, w);
    return k / (bz * bw.conj());
}

HPComplex MobiusAutomorphism::apply(const HPComplex& z) const {
    PrecisionContext ctx = ctx_of(gamma.re());
    HPComplex one(HPReal(1.0, ctx));
    return gamma * (z - zeta) / (one - zeta.conj() * z);
}

HPComplex MobiusAutomorphism::derivative(const HPComplex& z) const {
    PrecisionContext ctx = ctx_of(gamma.re());
    HPComplex one(HPReal(1.0, ctx));
    HPComplex d = one - zeta.conj() * z;
    return gamma * HPComplex(HPReal(1.0, ctx) - abs2(zeta)) / (d * d);
}

MobiusAutomorphism MobiusAutomorphism::identity(const PrecisionContext& ctx) {
    return {HPComplex(HPReal(1.0, ctx)), HPComplex(ctx)};
}

MobiusAutomorphism MobiusAutomorphism::involution(const HPComplex& lambda) {
    PrecisionContext ctx = ctx_of(lambda.re());
    return {HPComplex(HPReal(-1.0, ctx)), lambda};
}

HPComplex mobius_kernel_transform(const KernelFn& kernel, const MobiusAutomorphism& phi,
                                  const HPComplex& z, const HPComplex& w) {
    return phi.derivative(z) * phi.derivative(w).conj() * kernel(phi.apply(z), phi.apply(w));
}

HPComplex homogeneity_scale(const HPComplex& kernel_value, const HPReal& t) {
    if (!(t > 0.0)) throw std::domain_error("homogeneity_scale: t must be positive");
    return kernel_value / t;
}

HPComplex toy_kernel(const HPComplex& z, const HPComplex& lambda, const HPReal& theta) {
    if (!(theta > -2.0)) throw std::domain_error("toy_kernel: theta must be > -2");
    PrecisionContext ctx = ctx_of(theta);
    HPComplex one(HPReal(1.0, ctx));
    HPReal c = (theta * 0.5) * (HPReal(1.0, ctx) - abs2(lambda));
    return one + HPComplex(c) / (one - lambda.conj() * z);
}

HPComplex toy_kernel_two_point(const HPComplex& z, const HPComplex& w, const HPComplex& lambda,
                               const HPReal& theta) {
    if (!(theta > -2.0)) throw std::domain_error("toy_kernel: theta must be > -2");
    PrecisionContext ctx = ctx_of(theta);
    HPComplex one(HPReal(1.0, ctx));
    HPComplex dzw = one - z * w.conj();
    HPReal c = (theta * 0.5) * (HPReal(1.0, ctx) - abs2(lambda));
    return one / (dzw * dzw) +
           HPComplex(c) / ((one - lambda.conj() * z) * (one - lambda * w.conj()) * dzw);
}

bool toy_has_disk_zero(const HPComplex& lambda, const HPReal& theta) {
    if (!(theta > -2.0)) return false;
    PrecisionContext ctx = ctx_of(theta);
    HPReal bound = -2.0 / (HPReal(1.0, ctx) + abs(lambda));
    return theta < bound;
}

HPComplex toy_zero_location(const HPComplex& lambda, const HPReal& theta) {
    if (lambda.is_zero()) throw std::domain_error("toy_zero_location: lambda must be nonzero");
    PrecisionContext ctx = ctx_of(theta);
    HPReal num = HPReal(1.0, ctx) + (theta * 0.5) * (HPReal(1.0, ctx) - abs2(lambda));
    return HPComplex(num) / lambda.conj();
}

}  // namespace bergman
