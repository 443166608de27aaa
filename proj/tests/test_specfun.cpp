#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "besselwell/specfun.hpp"
#include "test_refs.hpp"

using namespace besselwell::specfun;
namespace det = besselwell::specfun::detail;
constexpr double kPi = std::numbers::pi;
using Cx = std::complex<double>;

TEST_CASE("bessel_j small-argument and half-integer anchors") {
    CHECK(bessel_j(0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(bessel_j(0.5, kPi)) < 1e-10);  // sqrt(2/(pi x)) sin(pi)
    // J_{1/2} closed form across all evaluation regimes
    for (double x : {0.3, 1.7, 5.0, 40.0, 300.0}) {
        const double want = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
        CHECK(bessel_j(0.5, x) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("bessel_j against the independent ascending series") {
    for (double nu : {0.0, 0.3, 1.0, 2.5, 5.6026, 9.2}) {
        for (double x : {0.05, 0.9, 1.999, 2.001, 4.0}) {
            const double ref = test_refs::j_series(nu, x);
            CHECK(bessel_j(nu, x) == doctest::Approx(ref).epsilon(1e-11));
            const double refp = test_refs::j_series(nu, x, true);
            CHECK(bessel_j(nu, x, true) == doctest::Approx(refp).epsilon(1e-10));
        }
    }
}

TEST_CASE("bessel_j and bessel_y against libstdc++ across regimes") {
    test_refs::Lcg rng;
    for (int i = 0; i < 300; ++i) {
        const double nu = rng.in(0.0, 20.0);
        const double x = std::exp(rng.in(std::log(1e-2), std::log(2e3)));
        const double scale = std::sqrt(2.0 / (kPi * x));
        const double jr = std::cyl_bessel_j(nu, x);
        CHECK(std::abs(bessel_j(nu, x) - jr) < 3e-11 * (scale + std::abs(jr)));
        const double yr = std::cyl_neumann(nu, x);
        CHECK(std::abs(bessel_y(nu, x) - yr) < 3e-11 * (scale + std::abs(yr)));
    }
}

TEST_CASE("negative non-integer order via the connection formula") {
    for (double nu : {0.3, 1.7, 2.5}) {
        for (double x : {0.8, 3.0, 11.0}) {
            const double want = std::cos(nu * kPi) * std::cyl_bessel_j(nu, x) -
                                std::sin(nu * kPi) * std::cyl_neumann(nu, x);
            CHECK(bessel_j(-nu, x) == doctest::Approx(want).epsilon(1e-10));
        }
    }
    // integer order reduces to (-1)^n J_n
    CHECK(bessel_j(-3.0, 2.7) == doctest::Approx(-std::cyl_bessel_j(3.0, 2.7)).epsilon(1e-12));
}

TEST_CASE("Jprime vanishes at the even special energy of the figure") {
    // nu = sqrt(50 - 18.611), z0 = sqrt(50); energy quoted to 3 decimals
    const double nu = std::sqrt(50.0 - 18.611);
    const double z0 = std::sqrt(50.0);
    CHECK(std::abs(bessel_j(nu, z0, true)) < 2e-5);
}

TEST_CASE("K vanishes at the odd valley special energy of the figure") {
    const double nu = std::sqrt(17.537 + 5.0);
    const double z0 = std::sqrt(5.0);
    CHECK(std::abs(bessel_k_imag(nu, z0)) < 2e-5);
}

TEST_CASE("hankel Wronskian and conjugation") {
    const Cx iu(0.0, 1.0);
    for (double nu : {0.0, 0.5, 1.3, 1.7, 5.6}) {
        for (double x : {0.5, 2.0, 7.0, 50.0}) {
            const Cx h1 = hankel(1, nu, x), h1p = hankel(1, nu, x, true);
            const Cx h2 = hankel(2, nu, x), h2p = hankel(2, nu, x, true);
            CHECK(std::abs(h1 * h2p - h2 * h1p + 4.0 * iu / (kPi * x)) < 1e-10);
            CHECK(h2 == std::conj(h1));
            CHECK(h2p == std::conj(h1p));
        }
    }
}

TEST_CASE("hankel conjugation at a generic point") {
    CHECK(hankel(2, 2.7, 5.0) == std::conj(hankel(1, 2.7, 5.0)));
}

TEST_CASE("hankel modulus approaches the travelling-wave asymptote") {
    const double x = 100.0;
    CHECK(std::abs(hankel(1, 1.0, x)) * std::sqrt(kPi * x / 2.0) ==
          doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("K0(1) against the independent log-series oracle") {
    CHECK(bessel_k_imag(0.0, 1.0) == doctest::Approx(test_refs::k0_series(1.0)).epsilon(1e-12));
    CHECK(bessel_k_real(0.0, 1.0) == doctest::Approx(test_refs::k0_series(1.0)).epsilon(1e-12));
}

TEST_CASE("K_inu quadrature vs the ascending-series route") {
    for (double nu : {0.5, 2.0, 4.7473, 8.0}) {
        for (double x : {0.8, 2.236, 7.0}) {
            const double quad = bessel_k_imag(nu, x);
            const Cx iv = bessel_i_imag(nu, x);
            const double series = -kPi * iv.imag() / std::sinh(kPi * nu);
            // the series route cancels against the e^{+x} growth of I when
            // pi nu/2 < x; budget the rounding it can leave behind
            const double cancel =
                40.0 * 2.3e-16 * kPi * (std::exp(x) / std::sqrt(x) + 1.0) / std::sinh(kPi * nu);
            CHECK(std::abs(quad - series) < 1e-13 * std::exp(-x) + 1e-15 + cancel);
        }
    }
}

TEST_CASE("I_inu series anchors") {
    CHECK(std::abs(bessel_i_imag(0.0, 1e-12) - 1.0) < 1e-10);
    for (double nu : {0.5, 2.0, 4.7473}) {
        const double want = std::sqrt(std::sinh(kPi * nu) / (kPi * nu));
        CHECK(std::abs(bessel_i_imag(nu, 1e-8)) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("rotated-argument proportionality between I and J") {
    // I_nu(-i qa) = e^{-i nu pi/2} J_nu(qa) at kappa = 1, qa = 2
    const Cx got = det::bessel_i_series(1.0, Cx(0.0, -2.0));
    const Cx want = std::exp(Cx(0.0, -0.5 * kPi)) * bessel_j(1.0, 2.0);
    CHECK(std::abs(got - want) < 1e-10);
}

TEST_CASE("gamma_complex anchors and reflection identity") {
    CHECK(gamma_complex(Cx(1.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(gamma_complex(Cx(1.0, 0.0)).imag()) < 1e-15);
    CHECK(gamma_complex(Cx(0.5, 0.0)).real() ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    for (double y : {0.5, 1.5, 4.0}) {
        const double got = std::norm(gamma_complex(Cx(1.0, y)));
        const double want = kPi * y / std::sinh(kPi * y);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    // reflection side (Re z < 0.5)
    CHECK(gamma_complex(Cx(-1.5, 0.0)).real() ==
          doctest::Approx(std::tgamma(-1.5)).epsilon(1e-12));
}

TEST_CASE("K vs rotated Hankel cross-path identity") {
    const Cx iu(0.0, 1.0);
    for (double nu : {0.3, 0.7}) {
        for (double x : {0.7, 1.5, 2.5}) {
            const Cx rhs = 0.5 * iu * kPi * std::exp(iu * (0.5 * kPi * nu)) *
                           det::hankel1_series(nu, iu * x);
            CHECK(std::abs(bessel_k_real(nu, x) - rhs) < 1e-9);
        }
    }
}

TEST_CASE("small-z law") {
    for (double nu : {0.3, 2.5}) {
        const double z = 1e-3;
        const double lead = std::pow(0.5 * z, nu) / std::tgamma(nu + 1.0);
        CHECK(bessel_j(nu, z) / lead == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("analytic derivatives match central differences") {
    const double h = 1e-6;
    auto fd_ok = [&](auto f, double x, double got) {
        const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
        CHECK(std::abs(got - fd) < 1e-6 * (std::abs(fd) + 1e-12));
    };
    for (double nu : {-2.3, 0.0, 1.7, 5.6}) {
        for (double x : {0.9, 3.3, 30.0}) {
            fd_ok([&](double t) { return bessel_j(nu, t); }, x, bessel_j(nu, x, true));
            fd_ok([&](double t) { return bessel_y(nu, t); }, x, bessel_y(nu, x, true));
        }
    }
    for (double nu : {0.0, 2.4, 6.1}) {
        const double x = 1.9;
        fd_ok([&](double t) { return bessel_k_imag(nu, t); }, x, bessel_k_imag(nu, x, true));
        const double nr = std::min(nu, 4.0);
        fd_ok([&](double t) { return bessel_k_real(nr, t); }, x, bessel_k_real(nr, x, true));
        const Cx fdi = (bessel_i_imag(nu, x + h) - bessel_i_imag(nu, x - h)) / (2.0 * h);
        CHECK(std::abs(bessel_i_imag(nu, x, true) - fdi) < 1e-6 * std::abs(fdi));
        const Cx fdh = (hankel(1, nu, x + h) - hankel(1, nu, x - h)) / (2.0 * h);
        CHECK(std::abs(hankel(1, nu, x, true) - fdh) < 1e-6 * std::abs(fdh));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_j(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(201.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(1.0, 2e4), std::domain_error);
    CHECK_THROWS_AS(hankel(3, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_imag(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_imag(101.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_imag(1.0, 800.0), std::underflow_error);
    CHECK_THROWS_AS(bessel_i_imag(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_complex(Cx(-2.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(gamma_complex(Cx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("internal self test") {
    const auto rep = self_test();
    CHECK(rep.pass);
    CHECK(rep.wronskian_dev < 1e-10);
    CHECK(rep.conjugation_dev == 0.0);
    CHECK(rep.kh_identity_dev < 1e-9);
    CHECK(rep.small_z_dev < 1e-6);
    CHECK(rep.derivative_dev < 1e-6);
    CHECK(rep.gamma_dev < 1e-12);
}
