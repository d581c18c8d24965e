#include <doctest.h>

#include <cmath>
#include <random>

#include <mourre/chebyshev.hpp>
#include <mourre/errors.hpp>

using namespace mourre;

namespace {
constexpr double PI = 3.14159265358979323846;
}

TEST_CASE("eval_T matches cos(n acos x)") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> theta(0.0, PI);
    for (int n = 0; n <= 16; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const double t = theta(rng);
            CHECK(cheb::eval_T(n, std::cos(t)) == doctest::Approx(std::cos(n * t)).epsilon(1e-12));
        }
    }
    CHECK(cheb::eval_T(3, 1.0) == 1.0);
    CHECK(cheb::eval_T(3, -1.0) == -1.0);
    CHECK(cheb::eval_T(4, 0.0) == 1.0);
}

TEST_CASE("eval_U matches sin(n theta)/sin(theta)") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> theta(0.05, PI - 0.05);
    for (int n = 1; n <= 24; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const double t = theta(rng);
            const double want = std::sin(n * t) / std::sin(t);
            CHECK(cheb::eval_U(n, std::cos(t)) == doctest::Approx(want).epsilon(1e-11));
        }
    }
    CHECK(cheb::eval_U(0, 0.3) == 0.0);
    CHECK(cheb::eval_U(5, 1.0) == 5.0);  // U_{n-1}(1) = n
    // roots of U_{n-1} are cos(l pi / n)
    for (int l = 1; l < 6; ++l)
        CHECK(std::abs(cheb::eval_U(6, std::cos(l * PI / 6.0))) < 1e-12);
}

TEST_CASE("derivative identities, finite differences up to order 12") {
    // A central difference with h=1e-6 carries an h^2/6 * f''' truncation
    // term; for T_n that third derivative grows like n^3/(1-x^2)^{3/2}, so
    // the sample domain stays away from the edges to keep the comparison
    // deterministic at this tolerance.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> xs(-0.8, 0.8);
    const double h = 1e-6;
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const double x = xs(rng);
            const double fd_T = (cheb::eval_T(n, x + h) - cheb::eval_T(n, x - h)) / (2 * h);
            CHECK(cheb::eval_T_derivative(n, x) == doctest::Approx(fd_T).epsilon(2e-9));
            const double fd_U = (cheb::eval_U(n, x + h) - cheb::eval_U(n, x - h)) / (2 * h);
            CHECK(cheb::eval_U_derivative(n, x) == doctest::Approx(fd_U).epsilon(1e-8));
        }
    }
}

TEST_CASE("derivative identities, exact relation up to order 24") {
    // (x^2 - 1) U'_{n-1}(x) = n T_n(x) - x U_{n-1}(x) holds exactly, so it
    // validates the high orders the finite difference cannot reach.
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> xs(-0.999, 0.999);
    for (int n = 1; n <= 24; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const double x = xs(rng);
            const double lhs = (x * x - 1.0) * cheb::eval_U_derivative(n, x);
            const double rhs = n * cheb::eval_T(n, x) - x * cheb::eval_U(n, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    // T'_n = n U_{n-1}
    for (int n = 1; n <= 24; ++n)
        CHECK(cheb::eval_T_derivative(n, 0.37) ==
              doctest::Approx(n * cheb::eval_U(n, 0.37)).epsilon(1e-12));
}

TEST_CASE("branch domains partition [-1, 1]") {
    for (int kappa = 1; kappa <= 12; ++kappa) {
        double prev_upper = -1.0;
        for (int j = kappa - 1; j >= 0; --j) {
            cheb::BranchIndex b(kappa, j);
            CHECK(b.lower() == doctest::Approx(std::cos((j + 1) * PI / kappa)).epsilon(1e-15));
            CHECK(b.upper() == doctest::Approx(std::cos(j * PI / kappa)).epsilon(1e-15));
            CHECK(b.lower() == doctest::Approx(prev_upper).epsilon(1e-15));
            prev_upper = b.upper();
            CHECK(b.increasing() == (j % 2 == 0));
        }
        CHECK(prev_upper == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(cheb::BranchIndex(3, 3), domain_error);
    CHECK_THROWS_AS(cheb::BranchIndex(3, -1), domain_error);
}

TEST_CASE("branch_inverse round-trips on every branch") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ys(-1.0, 1.0);
    for (int kappa = 2; kappa <= 12; ++kappa) {
        for (int j = 0; j < kappa; ++j) {
            cheb::BranchIndex b(kappa, j);
            for (int trial = 0; trial < 100; ++trial) {
                const double y = ys(rng);
                const double x = cheb::branch_inverse(b, y);
                CHECK(x >= b.lower() - 1e-12);
                CHECK(x <= b.upper() + 1e-12);
                CHECK(cheb::eval_T(kappa, x) == doctest::Approx(y).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("branch_inverse is monotone, alternating direction") {
    for (int kappa = 2; kappa <= 8; ++kappa) {
        for (int j = 0; j < kappa; ++j) {
            cheb::BranchIndex b(kappa, j);
            double prev = cheb::branch_inverse(b, -1.0);
            for (int i = 1; i <= 64; ++i) {
                const double x = cheb::branch_inverse(b, -1.0 + 2.0 * i / 64.0);
                if (b.increasing())
                    CHECK(x >= prev);
                else
                    CHECK(x <= prev);
                prev = x;
            }
        }
    }
}

TEST_CASE("branch_inverse clamps near the edge and rejects beyond it") {
    cheb::BranchIndex b(3, 1);
    CHECK(cheb::branch_inverse(b, 1.0 + 1e-13) ==
          doctest::Approx(cheb::branch_inverse(b, 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(cheb::branch_inverse(b, 1.1), domain_error);
    CHECK_THROWS_AS(cheb::branch_inverse(b, -1.1), domain_error);
}

TEST_CASE("t_extrema lists cos(l pi / kappa) descending") {
    for (int kappa = 2; kappa <= 10; ++kappa) {
        const auto ext = cheb::t_extrema(kappa);
        REQUIRE(ext.size() == static_cast<std::size_t>(kappa) + 1);
        CHECK(ext.front() == 1.0);
        CHECK(ext.back() == -1.0);
        for (std::size_t i = 0; i + 1 < ext.size(); ++i) CHECK(ext[i] > ext[i + 1]);
        for (int l = 0; l <= kappa; ++l)
            CHECK(ext[static_cast<std::size_t>(l)] ==
                  doctest::Approx(std::cos(l * PI / kappa)).epsilon(1e-15));
        // extrema are the T_kappa critical points: |T_kappa| = 1 there
        for (int l = 1; l < kappa; ++l)
            CHECK(std::abs(std::abs(cheb::eval_T(kappa, ext[static_cast<std::size_t>(l)])) - 1.0) <
                  1e-12);
    }
    const auto e8 = cheb::t_extrema(8);
    CHECK(e8[3] == doctest::Approx(std::cos(3 * PI / 8)).epsilon(1e-15));
}

TEST_CASE("bracket and bracket_U") {
    auto f = [](double v) { return v * v; };
    auto g = [](double v) { return v + 1.0; };
    CHECK(cheb::bracket(f, g, 2.0, 3.0) == doctest::Approx(4.0 * 4.0 - 9.0 * 3.0));
    CHECK(cheb::bracket_U(3, 5, 0.4, 0.7) ==
          doctest::Approx(cheb::eval_U(3, 0.4) * cheb::eval_U(5, 0.7) -
                          cheb::eval_U(3, 0.7) * cheb::eval_U(5, 0.4))
              .epsilon(1e-15));
    // antisymmetry
    CHECK(cheb::bracket_U(4, 9, 0.2, -0.6) ==
          doctest::Approx(-cheb::bracket_U(4, 9, -0.6, 0.2)).epsilon(1e-15));
}

TEST_CASE("level-matched points kill every bracket of U multiples of kappa") {
    // If T_3(x) = T_3(y) with x != y then [U_{3a-1}(x), U_{3b-1}(y)] = 0 for
    // all a, b; conversely a bracket zero for visibly generic points forces
    // the level match.  Sampled both ways.
    const int kappa = 3;
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> ys(-0.999, 0.999);
    for (int trial = 0; trial < 60; ++trial) {
        const double level = ys(rng);
        const double x = cheb::branch_inverse(cheb::BranchIndex(kappa, 0), level);
        const double y = cheb::branch_inverse(cheb::BranchIndex(kappa, 1), level);
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b)
                CHECK(std::abs(cheb::bracket_U(a * kappa, b * kappa, x, y)) < 1e-9);
    }
    // different levels: the (1,1) bracket must separate the points unless
    // U_{kappa-1} vanishes at one of them
    for (int trial = 0; trial < 60; ++trial) {
        const double x = ys(rng), y = ys(rng);
        if (std::abs(cheb::eval_T(kappa, x) - cheb::eval_T(kappa, y)) < 1e-3) continue;
        if (std::abs(cheb::eval_U(kappa, x)) < 1e-2 || std::abs(cheb::eval_U(kappa, y)) < 1e-2)
            continue;
        bool all_zero = true;
        for (int a = 1; a <= 5 && all_zero; ++a)
            for (int b = 1; b <= 5 && all_zero; ++b)
                if (std::abs(cheb::bracket_U(a * kappa, b * kappa, x, y)) > 1e-9) all_zero = false;
        CHECK_FALSE(all_zero);
    }
}
