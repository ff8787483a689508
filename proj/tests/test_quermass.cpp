#include <doctest.h>

#include <cmath>
#include <vector>

#include "capflow/errors.hpp"
#include "capflow/geometry.hpp"
#include "capflow/quermass.hpp"
#include "capflow/spline.hpp"

using namespace capflow;

// Reference values below were frozen from an independent prototype
// implementation (17 significant digits).

TEST_CASE("sine power integrals") {
    CHECK(sine_power_integral(1, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sine_power_integral(2, M_PI / 2) == doctest::Approx(M_PI / 4).epsilon(1e-14));
    // int_0^a sin^3 = 2/3 - cos(a) + cos^3(a)/3
    const double a = 0.8;
    const double ref = 2.0 / 3.0 - std::cos(a) + std::pow(std::cos(a), 3) / 3.0;
    CHECK(sine_power_integral(3, a) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("spherical ball quermassintegrals: frozen reference values") {
    {
        const double ref[] = {1.4775401137225912, 2.0238695535385371, 3.1415926535897931};
        for (int l = 0; l <= 2; ++l)
            CHECK(spherical_ball_W(2, 0.7, l) == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    {
        const double ref[] = {2.5954342135788657, 2.5702460567718721, 2.9047664464481295,
                              4.1887902047863905};
        for (int l = 0; l <= 3; ++l)
            CHECK(spherical_ball_W(3, 0.9, l) == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    {
        const double ref[] = {0.11107894583126257, 0.3658162326956888, 1.2196107461588295,
                              4.1887902047863896};
        for (int l = 0; l <= 3; ++l)
            CHECK(spherical_ball_W(3, 0.3, l) == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    // hemisphere: W_l = |S^{n-1}|/n / (products), check the clean n=2 values
    CHECK(spherical_ball_W(2, M_PI / 2, 1) == doctest::Approx(M_PI).epsilon(1e-14));
    // small-alpha limits: W_l -> 0 for l < n; W_n tends to the ball volume
    // constant |S^{n-1}|/n instead (the recursion's l = n fixed point)
    for (int n : {2, 3}) {
        for (int l = 0; l < n; ++l) CHECK(spherical_ball_W(n, 1e-4, l) < 1e-3);
        CHECK(spherical_ball_W(n, 1e-4, n) ==
              doctest::Approx(sphere_area(n) / n).epsilon(1e-6));
    }
    CHECK_THROWS_AS(spherical_ball_W(2, -0.1, 0), invalid_input);
    CHECK_THROWS_AS(spherical_ball_W(2, 0.5, 3), invalid_input);
}

TEST_CASE("analytic cap quermassintegrals: frozen reference values") {
    {
        const QuermassVector qv = quermass_theta_cap(2, M_PI / 2, 1.0);
        const double ref[] = {0.48638775632108555, 0.6134341230070729, 0.92015118451060951,
                              2.0943951023931948};
        for (int l = 0; l <= 3; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
        CHECK(qv.alpha == doctest::Approx(0.78539816339744839).epsilon(1e-14));
    }
    {
        const QuermassVector qv = quermass_theta_cap(2, M_PI / 3, 0.8);
        const double ref[] = {0.075379056061937136, 0.11622983692531953, 0.21576293870509591,
                              1.0471975511965972};
        for (int l = 0; l <= 3; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
        CHECK(qv.alpha == doctest::Approx(0.45953652634524494).epsilon(1e-14));
    }
    {
        const QuermassVector qv = quermass_theta_cap(3, M_PI / 6, 0.8);
        const double ref[] = {0.0012435417650869768, 0.0018564431248450919,
                              0.003137539830212463, 0.0069202891610330511,
                              0.14229227183628146};
        for (int l = 0; l <= 4; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
        CHECK(qv.alpha == doctest::Approx(0.23203604710455905).epsilon(1e-14));
    }
    {
        const QuermassVector qv = quermass_theta_cap(3, M_PI / 2, 1.0);
        const double ref[] = {0.37300599787914401, 0.44830238673872108, 0.59773651565162822,
                              0.97190116233702006, 2.4674011002723391};
        for (int l = 0; l <= 4; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    {
        const QuermassVector qv = quermass_theta_cap(2, M_PI / 6, 0.5);
        const double ref[] = {0.0021202806194281693, 0.0049150323318981615,
                              0.013141254309083852, 0.28059573815897693};
        for (int l = 0; l <= 3; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    {
        const QuermassVector qv = quermass_theta_cap(3, M_PI / 3, 1.3);
        const double ref[] = {0.093766007629868031, 0.094673663926466686,
                              0.11385784246253459, 0.1905980445812957,
                              0.96475930526039444};
        for (int l = 0; l <= 4; ++l)
            CHECK(qv.W[l] == doctest::Approx(ref[l]).epsilon(1e-13));
    }
    CHECK_THROWS_AS(quermass_theta_cap(2, M_PI / 3, -1.0), invalid_input);
}

TEST_CASE("flat ball quermassintegrals") {
    // frozen enclosed volumes of the flat disk {z = cos(theta)}, n = 2
    CHECK(quermass_theta_flat(2, M_PI / 2).W[0] ==
          doctest::Approx(2.0943951023931948).epsilon(1e-13));
    CHECK(quermass_theta_flat(2, M_PI / 3).W[0] ==
          doctest::Approx(0.65449846949787316).epsilon(1e-13));
    CHECK(quermass_theta_flat(2, M_PI / 6).W[0] ==
          doctest::Approx(0.053870817629700238).epsilon(1e-13));
    // flat disks close the R -> infinity end of the cap family
    for (int n : {2, 3})
        for (double theta : {M_PI / 6, M_PI / 3, M_PI / 2}) {
            const QuermassVector flat = quermass_theta_flat(n, theta);
            const QuermassVector big = quermass_theta_cap(n, theta, 2e4);
            for (int l = 0; l <= n + 1; ++l)
                CHECK(big.W[l] == doctest::Approx(flat.W[l])
                                      .epsilon(1e-3)
                                      .scale(std::max(1.0, std::abs(flat.W[l]))));
        }
}

TEST_CASE("discrete quermass agrees with analytic caps and converges") {
    const int n = 2;
    const double theta = M_PI / 3, R = 0.8;
    const QuermassVector exact = quermass_theta_cap(n, theta, R);
    double prev = 0.0;
    for (int M : {200, 400, 800}) {
        const QuermassVector qv = quermass_theta(make_cap(n, theta, R, M));
        double err = 0.0;
        for (int l = 0; l <= n + 1; ++l)
            err = std::max(err, std::abs(qv.W[l] - exact.W[l]) /
                                    std::max(1.0, std::abs(exact.W[l])));
        if (prev > 0.0) CHECK(prev / err > 3.0); // second order
        prev = err;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("discrete quermass on a flat ball matches the closed form") {
    const QuermassVector qv = quermass_theta(make_flat_ball(2, M_PI / 3, 400));
    const QuermassVector exact = quermass_theta_flat(2, M_PI / 3);
    for (int l = 0; l <= 3; ++l)
        CHECK(qv.W[l] == doctest::Approx(exact.W[l]).epsilon(1e-10).scale(1.0));
}

TEST_CASE("variation identity certifies the assembly conventions") {
    // admissible speed fields are generated as the difference quotient of the
    // constrained perturbation family at desk scale, then transferred to a
    // finer evaluation grid (the discretization noise of the speed field
    // itself would otherwise dominate the finite-difference derivative)
    const int n = 2, Mc = 400, Mf = 3200;
    const double theta = M_PI / 3, R = 0.8, eps = 1e-4;
    const ProfileCurve base = make_cap(n, theta, R, Mc);
    const ProfileCurve bumped = make_perturbed_cap(n, theta, R, 2, eps, Mc);
    const SurfaceFrame fr = frame(base);
    std::vector<double> fc(Mc + 1), sc(Mc + 1);
    for (int j = 0; j <= Mc; ++j) {
        fc[j] = ((bumped.r[j] - base.r[j]) * fr.nr[j] +
                 (bumped.z[j] - base.z[j]) * fr.nz[j]) /
                eps;
        sc[j] = double(j) / Mc;
    }
    const CubicSpline fsp(sc, fc);
    const ProfileCurve fine = make_cap(n, theta, R, Mf);
    std::vector<double> ff(Mf + 1);
    for (int j = 0; j <= Mf; ++j) ff[j] = fsp(double(j) / Mf);
    for (int k = 0; k <= n; ++k)
        CHECK(std::abs(variation_check(fine, ff, k, 1e-5)) < 1e-3);
    // f == 0 is exactly stationary (absolute residual path)
    std::vector<double> zero(Mc + 1, 0.0);
    CHECK(std::abs(variation_check(base, zero, 1, 1e-5)) < 1e-6);
}
