#pragma once

#include <complex>

namespace besselwell::specfun {

using Complex = std::complex<double>;

/// Cylinder Bessel function J_nu(x) of real order nu, or its x-derivative.
/// Supports negative non-integer orders through the J/Y connection formula.
/// Domain: x in (0, 1e4], |nu| <= 200.
double bessel_j(double nu, double x, bool derivative = false);

/// Weber function Y_nu(x) of real order, or its x-derivative. Same domain.
double bessel_y(double nu, double x, bool derivative = false);

/// Hankel function H^(1) = J + iY or H^(2) = J - iY, or its x-derivative.
/// H^(2) is computed as the exact floating-point conjugate of H^(1).
Complex hankel(int kind, double nu, double x, bool derivative = false);

/// Modified Bessel function of imaginary order, K_{i nu}(x), real-valued for
/// real nu >= 0 and x > 0. Evaluated from the integral representation
///   K_{i nu}(x) = int_0^inf exp(-x cosh t) cos(nu t) dt
/// by iterated-Richardson (Romberg) refinement of the trapezoid rule.
/// Accuracy is absolute at the scale exp(-x); the function itself shrinks
/// like exp(-pi nu / 2), so relative accuracy degrades for large nu.
/// Domain: x in (0, 705], nu in [0, 100].
double bessel_k_imag(double nu, double x, bool derivative = false);

/// Real-order K_nu(x) from the same quadrature with the cosh(nu t) kernel.
/// Cross-check path for the Hankel-rotation identity; nu in [0, 30].
double bessel_k_real(double nu, double x, bool derivative = false);

/// Modified Bessel function of imaginary order, I_{i nu}(x), from the
/// ascending series sum_k (x/2)^{i nu + 2k} / (k! Gamma(i nu + k + 1)).
/// I_{-i nu}(x) is the complex conjugate for real nu, x.
/// Domain: x > 0, nu in [0, 100].
Complex bessel_i_imag(double nu, double x, bool derivative = false);

/// Gamma function for complex argument (Lanczos, g = 7, 9 coefficients,
/// reflection formula for Re z < 0.5). Relative accuracy ~1e-13.
Complex gamma_complex(Complex z);

/// Max deviations seen by the internal identity suite.
struct SelfTestReport {
    double wronskian_dev;    // |H1 H2' - H2 H1' + 4i/(pi x)|
    double conjugation_dev;  // |H2 - conj(H1)|
    double kh_identity_dev;  // |K_nu(x) - (i pi/2) e^{i nu pi/2} H1_nu(ix)|
    double small_z_dev;      // |J_nu(z) Gamma(nu+1) / (z/2)^nu - 1| at z = 1e-3
    double derivative_dev;   // analytic derivative vs central difference (rel)
    double gamma_dev;        // | |Gamma(1+iy)|^2 sinh(pi y)/(pi y) - 1 |
    bool pass;
};
SelfTestReport self_test();

namespace detail {

// Plain ascending series for complex arguments. Test/cross-check paths only:
// accurate for |z| up to ~15, independent of the real-axis production code.
Complex bessel_j_series(double nu, Complex z);
Complex bessel_i_series(double nu, Complex z);
Complex bessel_y_series(double nu, Complex z);     // non-integer nu
Complex hankel1_series(double nu, Complex z);      // J + iY, non-integer nu

// sin(pi x), cos(pi x) with the integer part reduced exactly.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace detail

}  // namespace besselwell::specfun
