#include <doctest.h>

#include <cmath>
#include <random>

#include "logconcave/discrete_laplace.hpp"
#include "oracles.hpp"

using logconcave::AsymLaplaceD;
using logconcave::q_max_for_maximum;
using logconcave::sigma4_closed;
using logconcave::sigma4_derivative;
using logconcave::solve_pq;
using logconcave::variance_reparam;

TEST_CASE("pmf closed form") {
    CHECK(AsymLaplaceD(0, 0, 0).pmf(0) == 1.0);
    CHECK(AsymLaplaceD(0, 0, 0).pmf(1) == 0.0);
    CHECK(AsymLaplaceD(0, 0.5, 0).pmf(2) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(AsymLaplaceD(0, 0.5, 0).pmf(-1) == 0.0);
    CHECK(AsymLaplaceD(1.0 / 3.0, 0.5, 0).pmf(0) == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(AsymLaplaceD(0.25, 0.5, 3).pmf(3) == doctest::Approx(AsymLaplaceD(0.25, 0.5, 3).normalizer()));
}

TEST_CASE("pmf sums to one") {
    for (double p : {0.0, 0.3, 0.9, 0.99}) {
        for (double q : {0.0, 0.5, 0.99}) {
            const AsymLaplaceD d(p, q, 0);
            long double total = d.pmf(0);
            for (int k = 1; k < 20000; ++k) {
                total += d.pmf(-k) + d.pmf(k);
                if (d.pmf(-k) + d.pmf(k) < 1e-18L && k > 4) break;
            }
            CHECK(static_cast<double>(total) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("mean and variance formulas vs series") {
    CHECK(AsymLaplaceD(0, 0.5, 0).mean() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(AsymLaplaceD(0, 0.5, 0).variance() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(AsymLaplaceD(1.0 / 3.0, 0.5, 0).mean() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(AsymLaplaceD(1.0 / 3.0, 0.5, 0).variance() == doctest::Approx(2.75).epsilon(1e-12));
    CHECK(AsymLaplaceD(0.4, 0.4, 7).mean() == doctest::Approx(7.0));
    CHECK(AsymLaplaceD(0.4, 0.4, 7).variance() == doctest::Approx(2.0 * 0.4 / 0.36).epsilon(1e-12));

    for (double p : {0.0, 0.2, 0.7}) {
        for (double q : {0.1, 0.5, 0.85}) {
            const auto brute = oracles::discrete_brute_force(p, q);
            const AsymLaplaceD d(p, q, 0);
            CHECK(d.mean() == doctest::Approx(brute.mean).epsilon(1e-12));
            CHECK(d.variance() == doctest::Approx(brute.variance).epsilon(1e-12));
        }
    }
}

TEST_CASE("solve_pq examples") {
    const AsymLaplaceD point = solve_pq(1.0, 0.0);
    CHECK(point.p() == 0.0);
    CHECK(point.q() == 0.0);

    for (double g0 : {0.2, 0.5, 0.9}) {
        const AsymLaplaceD sym = solve_pq(g0, 0.0);
        CHECK(sym.p() == doctest::Approx((1.0 - g0) / (1.0 + g0)).epsilon(1e-14));
        CHECK(sym.q() == doctest::Approx(sym.p()).epsilon(1e-14));
        CHECK(sym.normalizer() == doctest::Approx(g0).epsilon(1e-13));
    }

    // geometric consistency at q0 = 1/2
    const double q0 = 0.5;
    const AsymLaplaceD geo = solve_pq(1.0 - q0, q0 / (1.0 - q0));
    CHECK(geo.p() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(geo.q() == doctest::Approx(q0).epsilon(1e-14));

    CHECK_THROWS_AS(solve_pq(0.9, 5.0), std::domain_error);   // infeasible pair
    CHECK_THROWS_AS(solve_pq(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(solve_pq(1.5, 0.0), std::domain_error);
}

TEST_CASE("solve_pq round trip") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 0.9);
    for (int i = 0; i < 1000; ++i) {
        const double p = u(rng), q = u(rng);
        const AsymLaplaceD d(p, q, 0);
        const AsymLaplaceD back = solve_pq(d.pmf(0), d.mean());
        CHECK(back.p() == doctest::Approx(p).epsilon(1e-10));
        CHECK(back.q() == doctest::Approx(q).epsilon(1e-10));
    }
}

TEST_CASE("variance reparameterization") {
    CHECK(variance_reparam(0.5, 0.0) == doctest::Approx((1.0 - 0.5) / 0.25).epsilon(1e-14));
    CHECK(variance_reparam(1.0, 0.0) == doctest::Approx(0.0));
    CHECK(q_max_for_maximum(0.5) == doctest::Approx(1.0 / 3.0));
    CHECK(variance_reparam(0.5, 1.0 / 3.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(AsymLaplaceD(1.0 / 3.0, 1.0 / 3.0, 0).variance() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK_THROWS_AS(variance_reparam(0.5, 0.9), std::domain_error);

    // matches the (p, q) variance across the feasible strip
    for (double M : {0.2, 0.5, 0.8}) {
        for (double f : {0.0, 0.3, 0.7, 1.0}) {
            const double q = f * q_max_for_maximum(M);
            const double p = (1.0 - q - M) / (1.0 - q - M * q);
            CHECK(variance_reparam(M, q) ==
                  doctest::Approx(AsymLaplaceD(p, q, 0).variance()).epsilon(1e-12));
        }
    }
}

TEST_CASE("sigma4 closed form") {
    CHECK(sigma4_closed(1.0, 0.0) == doctest::Approx(0.0));
    CHECK(sigma4_closed(0.5, 0.0) == doctest::Approx(38.0).epsilon(1e-13));
    for (double M : {0.3, 0.6}) {
        const double expect = (9.0 - 18.0 * M + 10.0 * M * M - M * M * M) / (M * M * M * M);
        CHECK(sigma4_closed(M, 0.0) == doctest::Approx(expect).epsilon(1e-13));
    }

    // brute-force series across a (M, q) lattice
    for (int im = 1; im <= 9; ++im) {
        const double M = im / 10.0;
        for (int iq = 0; iq <= 4; ++iq) {
            const double q = iq / 4.0 * q_max_for_maximum(M);
            const double p = (1.0 - q - M) / (1.0 - q - M * q);
            const auto brute = oracles::discrete_brute_force(p, q);
            CHECK(sigma4_closed(M, q) == doctest::Approx(brute.sigma4).epsilon(1e-9));
        }
    }
}

TEST_CASE("sigma4 derivative") {
    // vanishes exactly at the symmetric end of the strip
    for (double M : {0.2, 0.5, 0.8})
        CHECK(sigma4_derivative(M, q_max_for_maximum(M)) == doctest::Approx(0.0).epsilon(1e-9));

    // negative at q = 0 (printed cubic in M)
    CHECK(sigma4_derivative(0.5, 0.0) < 0.0);
    for (double M : {0.1, 0.4, 0.9}) CHECK(sigma4_derivative(M, 0.0) < 0.0);

    // central differences of the closed form
    const double h = 1e-6;
    for (double M : {0.3, 0.5, 0.7}) {
        for (double f : {0.1, 0.45, 0.8}) {
            const double q = f * q_max_for_maximum(M);
            const double fd =
                oracles::central_difference([&](double x) { return sigma4_closed(M, x); }, q, h);
            CHECK(sigma4_derivative(M, q) == doctest::Approx(fd).epsilon(1e-6));
        }
    }

    // strictly negative on the open interval
    for (int im = 1; im <= 9; ++im) {
        const double M = im / 10.0;
        for (int iq = 1; iq <= 19; ++iq) {
            const double q = iq / 20.0 * q_max_for_maximum(M);
            CHECK(sigma4_derivative(M, q) < 0.0);
        }
    }
}

TEST_CASE("geometric identities") {
    for (int i = 1; i <= 9; ++i) {
        const double M = i / 10.0;
        CHECK(M * M * variance_reparam(M, 0.0) + M == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(M * M * M * M * sigma4_closed(M, 0.0) + M * (M * M - 10.0 * M + 18.0) ==
              doctest::Approx(9.0).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(AsymLaplaceD(1.0, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(AsymLaplaceD(-0.1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(AsymLaplaceD(0.5, 1.0, 0), std::invalid_argument);
}
