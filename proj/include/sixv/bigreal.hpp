#ifndef SIXV_BIGREAL_HPP
#define SIXV_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "sixv/errors.hpp"

namespace sixv {

// Arbitrary-precision real with an explicit bit precision.  Binary operations
// carry the minimum precision of their operands; unary functions keep the
// operand's precision.  Minimum supported precision is 64 bits.
class BigReal {
public:
    static constexpr long min_precision = 64;

    BigReal() = delete;
    explicit BigReal(long precision_bits);
    BigReal(double x, long precision_bits);
    BigReal(long x, long precision_bits);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    long precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Decimal scientific notation with enough digits for a lossless
    // round-trip at the stated precision.
    std::string to_string() const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    BigReal operator-() const;
    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal operator*(long k) const;
    BigReal operator/(long k) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);

    bool operator<(const BigReal& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigReal& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator==(const BigReal& o) const { return mpfr_cmp(v_, o.v_) == 0; }

    friend BigReal abs(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal exp(const BigReal& x);
    friend BigReal log(const BigReal& x);
    friend BigReal sinh(const BigReal& x);
    friend BigReal cosh(const BigReal& x);
    friend BigReal sin(const BigReal& x);
    friend BigReal cos(const BigReal& x);

    // x^k for k >= 0 by binary exponentiation.
    friend BigReal pow_int(const BigReal& x, long k);

    static BigReal pi(long precision_bits);
    static BigReal factorial(unsigned long n, long precision_bits);

    // Relative difference |x/y - 1|; y must be nonzero.
    static BigReal rel_diff(const BigReal& x, const BigReal& y);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static long clamp(long p) { return p < min_precision ? min_precision : p; }
    mpfr_t v_;
};

} // namespace sixv

#endif
