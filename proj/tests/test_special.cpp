#include <cmath>

#include "doctest.h"
#include "gnse/special.hpp"
#include "gnse/errors.hpp"

using namespace gnse;

TEST_CASE("beta function against closed forms") {
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_function(0.5, 1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(beta_function(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(beta_function(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    // Gamma(a)Gamma(b)/Gamma(a+b) identity on a non-integer pair
    CHECK(beta_function(0.25, 1.75) ==
          doctest::Approx(std::tgamma(0.25) * std::tgamma(1.75) / std::tgamma(2.0))
              .epsilon(1e-12));
    CHECK_THROWS_AS(beta_function(0.0, 1.0), ArgumentError);
}

TEST_CASE("kernel constant combines beta and gamma branches") {
    CHECK(beta_kernel_constant(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(beta_kernel_constant(0.5, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
    // large-b branch dominated by Gamma(1-c) when B(1-c,1-d) is smaller
    CHECK(beta_kernel_constant(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
}

TEST_CASE("kernel integral: exact b=0 cases") {
    // b=0, c=d=0: integral of 1 over [0,1]
    CHECK(beta_kernel_integral(0.0, 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // b=0, c=1/2, d=0, t=1: equality with B(1/2,1) = 2
    CHECK(beta_kernel_integral(0.0, 0.5, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-11));
    // b=0, c=d=1/2, t=1: the integral is exactly pi
    CHECK(beta_kernel_integral(0.0, 0.5, 0.5, 1.0) == doctest::Approx(M_PI).epsilon(1e-11));
    // scaling t^{1-c-d}
    CHECK(beta_kernel_integral(0.0, 0.5, 0.25, 2.0) ==
          doctest::Approx(std::pow(2.0, 0.25) * beta_function(0.5, 0.75)).epsilon(1e-11));
}

TEST_CASE("kernel integral bounded by the stated constant") {
    for (double b : {0.0, 0.5, 1.0, 10.0, 250.0})
        for (double c : {0.0, 0.3, 0.5, 0.9})
            for (double d : {0.0, 0.2, 0.5, 0.85})
                for (double t : {0.05, 1.0, 7.0}) {
                    const double lhs = beta_kernel_integral(b, c, d, t);
                    const double tb = b == 0.0 ? t : std::min(t, 1.0 / b);
                    const double rhs =
                        beta_kernel_constant(c, d) * std::pow(tb, 1.0 - c - d);
                    CHECK(lhs <= rhs * (1.0 + 1e-10));
                }
}
