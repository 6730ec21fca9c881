#pragma once

// Arbitrary-precision real/complex scalars on top of MPFR with an explicit
// decimal-digit precision context. Values are immutable after construction
// as far as the library is concerned: every operation returns a fresh value
// carrying the larger precision of its operands, so mixed-precision
// expressions never silently truncate.

#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace bergman {

class PrecisionContext {
public:
    explicit PrecisionContext(int digits = 40) : digits_(digits) {
        if (digits < 16)
            throw std::invalid_argument("PrecisionContext: digits must be >= 16");
        // 4 guard bits on top of the decimal request.
        bits_ = static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1.0) + 4;
    }

    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept { return bits_; }

    // Reads BERGMAN_DIGITS when set, otherwise 40.
    static PrecisionContext from_env();

    bool operator==(const PrecisionContext& o) const noexcept { return digits_ == o.digits_; }

private:
    int digits_;
    mpfr_prec_t bits_;
};

class HPComplex;

class HPReal {
public:
    HPReal() {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_set_zero(v_, 1);
    }
    explicit HPReal(const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_zero(v_, 1);
    }
    HPReal(double x, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    HPReal(long x, const PrecisionContext& ctx) {
        mpfr_init2(v_, ctx.bits());
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    HPReal(int x, const PrecisionContext& ctx) : HPReal(static_cast<long>(x), ctx) {}
    HPReal(const std::string& s, const PrecisionContext& ctx);

    HPReal(const HPReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    HPReal& operator=(const HPReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    // Minimal decimal string that reads back to the identical value.
    std::string to_string() const;

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

    HPReal operator-() const {
        HPReal r(nullptr, prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend HPReal operator+(const HPReal& a, const HPReal& b);
    friend HPReal operator-(const HPReal& a, const HPReal& b);
    friend HPReal operator*(const HPReal& a, const HPReal& b);
    friend HPReal operator/(const HPReal& a, const HPReal& b);
    friend HPReal operator+(const HPReal& a, double b);
    friend HPReal operator-(const HPReal& a, double b);
    friend HPReal operator*(const HPReal& a, double b);
    friend HPReal operator/(const HPReal& a, double b);
    friend HPReal operator+(double a, const HPReal& b) { return b + a; }
    friend HPReal operator*(double a, const HPReal& b) { return b * a; }
    friend HPReal operator-(double a, const HPReal& b);
    friend HPReal operator/(double a, const HPReal& b);

    HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
    HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
    HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
    HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    friend HPReal abs(const HPReal& a);
    friend HPReal sqrt(const HPReal& a);
    friend HPReal log(const HPReal& a);
    friend HPReal exp(const HPReal& a);
    friend HPReal sin(const HPReal& a);
    friend HPReal cos(const HPReal& a);
    friend HPReal atan2(const HPReal& y, const HPReal& x);
    friend HPReal hypot(const HPReal& x, const HPReal& y);
    friend HPReal pow(const HPReal& base, const HPReal& e);
    friend HPReal pow_si(const HPReal& base, long e);
    friend HPReal max(const HPReal& a, const HPReal& b) { return a >= b ? a : b; }
    friend HPReal min(const HPReal& a, const HPReal& b) { return a <= b ? a : b; }

    static HPReal pi(const PrecisionContext& ctx);

private:
    // Internal: uninitialized-to-zero value at a raw bit precision.
    HPReal(std::nullptr_t, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    static mpfr_prec_t join(const HPReal& a, const HPReal& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

    mpfr_t v_;

    friend class HPComplex;
    friend HPComplex exp(const HPComplex& a);
    friend HPComplex cpow_real(const HPComplex& base, const HPReal& p);
};

class HPComplex {
public:
    HPComplex() = default;
    explicit HPComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
    HPComplex(const HPReal& re, const HPReal& im) : re_(re), im_(im) {}
    explicit HPComplex(const HPReal& re) : re_(re), im_(HPReal(nullptr, re.prec())) {}
    HPComplex(double re, double im, const PrecisionContext& ctx) : re_(re, ctx), im_(im, ctx) {}
    // Parses "<re> <im>".
    HPComplex(const std::string& s, const PrecisionContext& ctx);

    const HPReal& re() const noexcept { return re_; }
    const HPReal& im() const noexcept { return im_; }

    std::string to_string() const { return re_.to_string() + " " + im_.to_string(); }
    std::complex<double> to_complex_double() const { return {re_.to_double(), im_.to_double()}; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

    HPComplex operator-() const { return {-re_, -im_}; }
    HPComplex conj() const { return {re_, -im_}; }

    friend HPComplex operator+(const HPComplex& a, const HPComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend HPComplex operator-(const HPComplex& a, const HPComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend HPComplex operator/(const HPComplex& a, const HPComplex& b) {
        HPReal d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    friend HPComplex operator+(const HPComplex& a, const HPReal& b) { return {a.re_ + b, a.im_}; }
    friend HPComplex operator-(const HPComplex& a, const HPReal& b) { return {a.re_ - b, a.im_}; }
    friend HPComplex operator-(const HPReal& a, const HPComplex& b) { return {a - b.re_, -b.im_}; }
    friend HPComplex operator+(const HPReal& a, const HPComplex& b) { return b + a; }
    friend HPComplex operator*(const HPComplex& a, const HPReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend HPComplex operator*(const HPReal& a, const HPComplex& b) { return b * a; }
    friend HPComplex operator/(const HPComplex& a, const HPReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend HPComplex operator/(const HPReal& a, const HPComplex& b) { return HPComplex(a) / b; }
    friend HPComplex operator*(const HPComplex& a, double b) { return {a.re_ * b, a.im_ * b}; }
    friend HPComplex operator*(double a, const HPComplex& b) { return b * a; }

    HPComplex& operator+=(const HPComplex& o) { return *this = *this + o; }
    HPComplex& operator-=(const HPComplex& o) { return *this = *this - o; }
    HPComplex& operator*=(const HPComplex& o) { return *this = *this * o; }

    friend bool operator==(const HPComplex& a, const HPComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend HPReal abs(const HPComplex& a) { return hypot(a.re_, a.im_); }
    friend HPReal abs2(const HPComplex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
    friend HPReal arg(const HPComplex& a) { return atan2(a.im_, a.re_); }
    friend HPComplex conj(const HPComplex& a) { return a.conj(); }
    friend HPComplex exp(const HPComplex& a);

private:
    HPReal re_, im_;
};

// Principal-branch complex power with a real exponent, restricted to bases in
// the right half plane (the 1 - z*conj(w) factors of disk geometry live there).
// Throws std::domain_error when re(base) <= 0.
HPComplex cpow_real(const HPComplex& base, const HPReal& p);
HPComplex cpow_real(const HPComplex& base, double p);

// Rising-factorial coefficient (alpha+2)(alpha+3)...(alpha+1+j)/j!; the j = 0
// value is 1 (empty product). Requires alpha > -1.
HPReal pochhammer_coeff(const HPReal& alpha, unsigned j);

}  // namespace bergman
