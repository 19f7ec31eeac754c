#pragma once

namespace gnse {

// Euler beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_function(double a, double b);

// max{ B(1-c,1-d), Gamma(1-c) } for 0 <= c,d < 1: the constant bounding the
// singular Duhamel kernel integral (see beta_kernel_integral).
double beta_kernel_constant(double c, double d);

// int_0^t e^{-b(t-s)} (t-s)^{-c} (s ^ b^{-1})^{-d} ds with (x ^ b^{-1}) = min,
// read as x itself when b = 0.  Endpoint singularities are removed by power
// substitutions before Gauss-Kronrod quadrature; relative accuracy ~1e-12.
double beta_kernel_integral(double b, double c, double d, double t);

}  // namespace gnse
