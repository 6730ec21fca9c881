#include "bergman/hp.hpp"

#include <complex>
#include <cstdlib>

namespace bergman {

PrecisionContext PrecisionContext::from_env() {
    if (const char* s = std::getenv("BERGMAN_DIGITS")) {
        char* end = nullptr;
        long d = std::strtol(s, &end, 10);
        if (end != s && d >= 16) return PrecisionContext(static_cast<int>(d));
    }
    return PrecisionContext(40);
}

HPReal::HPReal(const std::string& s, const PrecisionContext& ctx) {
    mpfr_init2(v_, ctx.bits());
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("HPReal: cannot parse '" + s + "'");
    }
}

std::string HPReal::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(e - 1));
}

HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(nullptr, HPReal::join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(nullptr, HPReal::join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(nullptr, HPReal::join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
HPReal operator/(const HPReal& a, const HPReal& b) {
    HPReal r(nullptr, HPReal::join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
HPReal operator+(const HPReal& a, double b) {
    HPReal r(nullptr, a.prec());
    mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
HPReal operator-(const HPReal& a, double b) {
    HPReal r(nullptr, a.prec());
    mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
HPReal operator*(const HPReal& a, double b) {
    HPReal r(nullptr, a.prec());
    mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
HPReal operator/(const HPReal& a, double b) {
    HPReal r(nullptr, a.prec());
    mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
HPReal operator-(double a, const HPReal& b) {
    HPReal r(nullptr, b.prec());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
HPReal operator/(double a, const HPReal& b) {
    HPReal r(nullptr, b.prec());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define BERGMAN_HP_UNARY(name, fn)                 \
    HPReal name(const HPReal& a) {                 \
        HPReal r(nullptr, a.prec());               \
        fn(r.raw(), a.raw(), MPFR_RNDN);           \
        return r;                                  \
    }

BERGMAN_HP_UNARY(abs, mpfr_abs)
BERGMAN_HP_UNARY(sqrt, mpfr_sqrt)
BERGMAN_HP_UNARY(log, mpfr_log)
BERGMAN_HP_UNARY(exp, mpfr_exp)
BERGMAN_HP_UNARY(sin, mpfr_sin)
BERGMAN_HP_UNARY(cos, mpfr_cos)

#undef BERGMAN_HP_UNARY

HPReal atan2(const HPReal& y, const HPReal& x) {
    HPReal r(nullptr, HPReal::join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
HPReal hypot(const HPReal& x, const HPReal& y) {
    HPReal r(nullptr, HPReal::join(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
HPReal pow(const HPReal& base, const HPReal& e) {
    HPReal r(nullptr, HPReal::join(base, e));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}
HPReal pow_si(const HPReal& base, long e) {
    HPReal r(nullptr, base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

HPReal HPReal::pi(const PrecisionContext& ctx) {
    HPReal r(nullptr, ctx.bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

HPComplex::HPComplex(const std::string& s, const PrecisionContext& ctx) {
    auto sp = s.find(' ');
    if (sp == std::string::npos)
        throw std::invalid_argument("HPComplex: expected '<re> <im>', got '" + s + "'");
    re_ = HPReal(s.substr(0, sp), ctx);
    im_ = HPReal(s.substr(sp + 1), ctx);
}

HPComplex exp(const HPComplex& a) {
    HPReal m = exp(a.re_);
    HPReal c(nullptr, a.im_.prec()), s(nullptr, a.im_.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.im_.raw(), MPFR_RNDN);
    return {m * c, m * s};
}

HPComplex cpow_real(const HPComplex& base, const HPReal& p) {
    if (base.re().sign() <= 0)
        throw std::domain_error("cpow_real: base must have positive real part");
    if (base.im().is_zero()) {
        // Real positive base: stays exactly on the real axis.
        return HPComplex(pow(base.re(), p));
    }
    HPReal lr = log(abs2(base)) * 0.5;
    HPReal th = arg(base);
    HPReal m = exp(p * lr);
    HPReal a = p * th;
    HPReal c(nullptr, a.prec()), s(nullptr, a.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
    return {m * c, m * s};
}

HPComplex cpow_real(const HPComplex& base, double p) {
    return cpow_real(base, HPReal(p, PrecisionContext(
                               std::max(16, static_cast<int>(base.re().prec() / 3.32)))));
}

HPReal pochhammer_coeff(const HPReal& alpha, unsigned j) {
    if (!(alpha > -1.0)) throw std::domain_error("pochhammer_coeff: alpha must be > -1");
    HPReal c = alpha * 0.0 + 1.0;  // exact 1 carrying alpha's precision
    for (unsigned t = 0; t < j; ++t)
        c = c * (alpha + static_cast<double>(t + 2)) / static_cast<double>(t + 1);
    return c;
}

}  // namespace bergman
