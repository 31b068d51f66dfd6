#include "sixv/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace sixv {

BigReal::BigReal(long precision_bits) {
    mpfr_init2(v_, clamp(precision_bits));
    mpfr_set_nan(v_);
}

BigReal::BigReal(double x, long precision_bits) {
    mpfr_init2(v_, clamp(precision_bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
}

BigReal::BigReal(long x, long precision_bits) {
    mpfr_init2(v_, clamp(precision_bits));
    mpfr_set_si(v_, x, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

std::string BigReal::to_string() const {
    // ceil(P log10 2) + 2 digits guarantees distinct representables round-trip
    long digits = static_cast<long>(std::ceil(precision() * 0.30102999566398120)) + 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
    return std::string(buf.data());
}

namespace {
long min_prec(const BigReal& a, const BigReal& b) {
    return std::min(a.precision(), b.precision());
}
} // namespace

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define SIXV_BINOP(op, fn)                                   \
    BigReal BigReal::operator op(const BigReal& o) const {   \
        BigReal r(min_prec(*this, o));                       \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                       \
        return r;                                            \
    }

SIXV_BINOP(+, mpfr_add)
SIXV_BINOP(-, mpfr_sub)
SIXV_BINOP(*, mpfr_mul)
SIXV_BINOP(/, mpfr_div)
#undef SIXV_BINOP

BigReal BigReal::operator*(long k) const {
    BigReal r(precision());
    mpfr_mul_si(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator/(long k) const {
    BigReal r(precision());
    mpfr_div_si(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

#define SIXV_UNFUN(name, fn)                 \
    BigReal name(const BigReal& x) {         \
        BigReal r(x.precision());            \
        fn(r.v_, x.v_, MPFR_RNDN);           \
        return r;                            \
    }

SIXV_UNFUN(abs, mpfr_abs)
SIXV_UNFUN(sqrt, mpfr_sqrt)
SIXV_UNFUN(exp, mpfr_exp)
SIXV_UNFUN(log, mpfr_log)
SIXV_UNFUN(sinh, mpfr_sinh)
SIXV_UNFUN(cosh, mpfr_cosh)
SIXV_UNFUN(sin, mpfr_sin)
SIXV_UNFUN(cos, mpfr_cos)
#undef SIXV_UNFUN

BigReal pow_int(const BigReal& x, long k) {
    if (k < 0) throw domain_error("pow_int: negative exponent");
    BigReal base(x);
    BigReal r(1L, x.precision());
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

BigReal BigReal::pi(long precision_bits) {
    BigReal r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::factorial(unsigned long n, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
}

BigReal BigReal::rel_diff(const BigReal& x, const BigReal& y) {
    BigReal r = x / y;
    mpfr_sub_si(r.v_, r.v_, 1, MPFR_RNDN);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

} // namespace sixv
