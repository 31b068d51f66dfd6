#include <doctest.h>

#include <cmath>

#include "sixv/bigreal.hpp"

using sixv::BigReal;

TEST_CASE("precision propagation takes the minimum of the operands") {
    BigReal a(1.5, 128), b(2.25, 256);
    CHECK((a * b).precision() == 128);
    CHECK((a + b).precision() == 128);
    CHECK((b / a).precision() == 128);
    CHECK(BigReal(1.0, 32).precision() == 64); // clamped to the floor
}

TEST_CASE("arithmetic basics") {
    BigReal a(3.0, 128), b(4.0, 128);
    CHECK((a + b).to_double() == doctest::Approx(7.0));
    CHECK((a * b).to_double() == doctest::Approx(12.0));
    CHECK((-a).to_double() == doctest::Approx(-3.0));
    CHECK(abs(BigReal(-2.5, 128)).to_double() == doctest::Approx(2.5));
    CHECK(BigReal(2L, 128).sign() == 1);
    CHECK(BigReal(0L, 128).sign() == 0);
}

TEST_CASE("pow_int by binary exponentiation") {
    BigReal two(2L, 128);
    CHECK(pow_int(two, 10).to_double() == doctest::Approx(1024.0));
    CHECK(pow_int(two, 0).to_double() == doctest::Approx(1.0));
    CHECK(pow_int(BigReal(3L, 128), 5).to_double() == doctest::Approx(243.0));
    CHECK_THROWS_AS((void)pow_int(two, -1), sixv::domain_error);
}

TEST_CASE("factorial and pi") {
    CHECK(BigReal::factorial(5, 128).to_double() == doctest::Approx(120.0));
    CHECK(BigReal::factorial(0, 128).to_double() == doctest::Approx(1.0));
    CHECK(BigReal::pi(128).to_double() == doctest::Approx(M_PI));
}

TEST_CASE("log(exp(x)) round trip at full precision") {
    const long P = 256;
    BigReal x(1.7320508, P);
    BigReal y = log(exp(x));
    CHECK(BigReal::rel_diff(y, x).to_double() < std::ldexp(1.0, -int(P) + 8));
}

TEST_CASE("decimal serialization round-trips at stated precision") {
    const long P = 192;
    BigReal x = sqrt(BigReal(2L, P));
    std::string s = x.to_string();
    BigReal back(P);
    mpfr_set_str(back.raw(), s.c_str(), 10, MPFR_RNDN);
    CHECK(BigReal::rel_diff(back, x).to_double() < std::ldexp(1.0, -int(P) + 4));
}

TEST_CASE("rel_diff") {
    BigReal a(1.0, 128), b(1.0 + 1e-12, 128);
    CHECK(BigReal::rel_diff(b, a).to_double() == doctest::Approx(1e-12).epsilon(1e-3));
}
