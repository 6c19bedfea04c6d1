#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minsupp/norms.hpp"
#include "minsupp/verify.hpp"

using namespace minsupp;

namespace {

GridFunction sine(GridPtr g) {
    return GridFunction::sample_dirichlet(g, [](double x) { return std::sin(M_PI * x); });
}

Potential const_potential(GridPtr g, double c) {
    return Potential(GridFunction::constant(g, c), [c](double) { return c; });
}

}  // namespace

TEST_CASE("pde_residual: exact pair second order, wrong potential O(1)") {
    double prev_exact = kInf;
    for (std::size_t size : {129, 257, 513}) {
        auto g = RadialGrid::make(Domain::segment(0.0, 1.0), size);
        GridFunction u = sine(g);
        double h = g->max_spacing();

        double good = pde_residual(u, const_potential(g, M_PI * M_PI));
        CHECK(good <= 10.0 * h * h);
        CHECK(good < prev_exact);
        prev_exact = good;

        double bad = pde_residual(u, const_potential(g, 2.0 * M_PI * M_PI));
        CHECK(bad > 0.2);  // bounded away from 0 under refinement
    }
}

TEST_CASE("green identity gap") {
    auto g = RadialGrid::make(Domain::segment(0.0, 1.0), 257);
    GridFunction u = sine(g);
    double h = g->max_spacing();
    CHECK(green_identity_gap(u, const_potential(g, M_PI * M_PI)) <= 10.0 * h * h);

    // hat: int |u'|^2 = 2/b exactly against the atom pairing
    ConstructionRecord hat = hat_1d(1.0);
    CHECK(green_identity_gap(hat.u, hat.V) <= 1e-13);
    CHECK(gradient_norm_sq(hat.u) == doctest::Approx(2.0).epsilon(1e-14));

    // non-solutions are refused, reporting the measured residual
    CHECK_THROWS_AS(green_identity_gap(u, const_potential(g, 2.0 * M_PI * M_PI)),
                    std::runtime_error);

    // truncated bubble (boundary flux at R_hat is zero since u vanishes there)
    ConstructionRecord tb = truncated_bubble(3, 10.0);
    double htb = tb.u.grid().max_spacing();
    CHECK(green_identity_gap(tb.u, tb.V) <= 10.0 * htb * htb *
                                                gradient_norm_sq(tb.u));
}

TEST_CASE("minigreen gap") {
    auto g = RadialGrid::make(Domain::interval(1.0), 257);
    GridFunction u = GridFunction::sample_dirichlet(
        g, [](double x) { return std::sin(M_PI * 0.5 * (x + 1.0)); });
    double h = g->max_spacing();

    CHECK(minigreen_gap(u, nullptr, nullptr) == 0.0);
    CHECK(minigreen_gap(u, [](double x) { return x; }, [](double) { return 1.0; }) <=
          10.0 * h * h);

    auto g3 = RadialGrid::make(Domain::ball(3, 1.0), 257);
    GridFunction u3 = GridFunction::sample(
        g3, [](double r) { return std::cos(0.5 * M_PI * r) + 0.3 * std::sin(2.0 * r); },
        false, true);
    double h3 = g3->max_spacing();
    CHECK(minigreen_gap(u3, [](double r) { return r * r; },
                        [](double r) { return 2.0 * r; }) <= 10.0 * h3 * h3);

    // halving the grid shrinks the gap at second order
    auto g3f = g3->refine();
    GridFunction u3f = GridFunction::sample(
        g3f, [](double r) { return std::cos(0.5 * M_PI * r) + 0.3 * std::sin(2.0 * r); },
        false, true);
    double c0 = minigreen_gap(u3, [](double r) { return r * r; },
                              [](double r) { return 2.0 * r; });
    double c1 = minigreen_gap(u3f, [](double r) { return r * r; },
                              [](double r) { return 2.0 * r; });
    CHECK(c0 / c1 >= 3.5);  // at least second order under halving

    CHECK_THROWS_AS(minigreen_gap(u, [](double x) { return x; }, nullptr),
                    std::invalid_argument);
}

TEST_CASE("main certificate on the exact eigenpair") {
    auto g = RadialGrid::make(Domain::segment(0.0, 1.0), 513);
    VerifyInput in;
    in.u = sine(g);
    in.V = const_potential(g, M_PI * M_PI);
    in.r = kInf;
    in.tol = 1e-3;
    Certificate c = check_certificate("main", in);
    CHECK(c.pass);
    CHECK_FALSE(c.vacuous);
    CHECK(c.quantity("K") == doctest::Approx(1.0 / M_PI).epsilon(1e-3));
    CHECK(c.quantity("V_plus_norm_r") == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
    CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(c.slack == c.lhs - c.rhs);
}

TEST_CASE("zero potential is vacuous and fails") {
    auto g = RadialGrid::make(Domain::segment(0.0, 1.0), 129);
    VerifyInput in;
    in.u = sine(g);
    in.V = Potential(GridFunction::constant(g, 0.0));
    in.r = 2.0;
    Certificate c = check_certificate("main", in);
    CHECK_FALSE(c.pass);
    CHECK(c.vacuous);
    bool noted = false;
    for (const auto& [k, v] : c.metadata)
        if (v.find("vacuous-or-trivial") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("first_order with no W reproduces main bit-for-bit") {
    ConstructionRecord rec = instantiate("small_support_counterexample");
    VerifyInput in = input_from_record(rec);
    in.r = 1.5;
    Certificate a = check_certificate("main", in);
    Certificate b = check_certificate("first_order", in);
    REQUIRE(a.quantities.size() == b.quantities.size());
    for (std::size_t i = 0; i < a.quantities.size(); ++i) {
        CHECK(a.quantities[i].first == b.quantities[i].first);
        CHECK(a.quantities[i].second == b.quantities[i].second);  // bitwise
    }
    CHECK(a.lhs == b.lhs);
    CHECK(a.pass);
    CHECK(b.pass);
}

TEST_CASE("eigen_shift: lhs nonincreasing as E decreases") {
    auto g = RadialGrid::make(Domain::segment(0.0, 1.0), 257);
    GridFunction u = sine(g);
    double prev = kInf;
    for (double E : {0.0, -1.0, -4.0}) {
        VerifyInput in;
        in.u = u;
        in.V = const_potential(g, M_PI * M_PI - E);  // -u'' = V u + E u stays exact
        in.E = E;
        in.r = 2.0;
        in.tol = 1e-3;
        Certificate c = check_certificate("eigen_shift", in);
        CHECK_FALSE(c.vacuous);
        CHECK(c.lhs <= prev + 1e-12);
        CHECK(c.pass);
        prev = c.lhs;
    }
    VerifyInput bad;
    bad.u = u;
    bad.V = const_potential(g, M_PI * M_PI);
    bad.E = 0.5;
    CHECK_THROWS_AS(check_certificate("eigen_shift", bad), std::invalid_argument);
}

TEST_CASE("dilation covariance of the volume form") {
    // (u, V, D) -> (u(./t), t^-2 V(./t), tD) leaves the volume-form lhs invariant
    double lhs[2];
    int idx = 0;
    for (double t : {1.0, 3.0}) {
        auto g = RadialGrid::make(Domain::ball(3, t), 513);
        GridFunction u = GridFunction::sample(
            g, [t](double r) { return std::cos(0.5 * M_PI * r / t); }, false, true);
        ConstructionRecord rec = manufactured_solution(u);
        VerifyInput in = input_from_record(rec);
        in.r = 2.0;
        Certificate c = check_certificate("volume", in);
        CHECK_FALSE(c.vacuous);
        lhs[idx++] = c.lhs;
    }
    CHECK(lhs[0] == doctest::Approx(lhs[1]).epsilon(1e-8));
}

TEST_CASE("hardy certificates") {
    // 100 seeded random boundary-vanishing profiles on Ball(3,1)
    auto g = RadialGrid::make(Domain::ball(3, 1.0), 257);
    for (unsigned seed = 1; seed <= 100; ++seed) {
        VerifyInput in;
        in.u = random_trial(g, seed);
        in.hardy_kind = HardyKind::Origin;
        Certificate c = check_certificate("hardy", in);
        CHECK(c.slack >= -1e-8);
    }
    // distance form on the interval carries the diameter remainder bound
    auto gi = RadialGrid::make(Domain::interval(1.0), 257);
    for (unsigned seed = 1; seed <= 100; ++seed) {
        VerifyInput in;
        in.u = random_trial(gi, seed);
        in.hardy_kind = HardyKind::Boundary;
        Certificate c = check_certificate("hardy", in);
        CHECK(c.rhs == doctest::Approx(c.quantity("u_l2_sq") / 16.0).epsilon(1e-12));
        CHECK(c.slack >= -1e-8);
    }
    // reduced margin leaves a strictly positive remainder
    VerifyInput half;
    half.u = random_trial(g, 5);
    half.hardy_margin = 0.5;
    Certificate c = check_certificate("hardy", half);
    CHECK(c.slack > 0.0);
}

TEST_CASE("chain coherence of the recorded quantities") {
    ConstructionRecord rec = instantiate("small_support_counterexample");
    VerifyInput in = input_from_record(rec);
    in.r = 1.5;
    Certificate c = check_certificate("main", in);
    double K = c.quantity("K");
    double grad = c.quantity("grad_norm_sq");
    double unorm = c.quantity("u_norm_2q");
    double vnorm = c.quantity("V_plus_norm_r");
    // Sobolev step: ||u||_{2q} <= K ||grad u||
    CHECK(unorm <= K * std::sqrt(grad) * (1.0 + 1e-9));
    // Green step: int V u^2 == grad within the residual scale
    CHECK(c.quantity("int_V_u2") == doctest::Approx(grad).epsilon(1e-4));
    // Hoelder step: int V+ u^2 <= ||u||_{2q}^2 ||V+||_r
    CHECK(c.quantity("int_Vplus_u2") <= unorm * unorm * vnorm * (1.0 + 1e-9));
    // headline slack is the composition
    CHECK(c.lhs == doctest::Approx(K * K * vnorm));
}

TEST_CASE("one_d_measure certificate") {
    VerifyInput hat = input_from_record(instantiate("hat_1d"));
    Certificate c = check_certificate("one_d_measure", hat);
    CHECK(c.lhs == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(c.slack) <= 1e-12);
    CHECK(c.pass);
    CHECK_FALSE(c.strict);  // equality is attainable with the atom

    VerifyInput mh = input_from_record(instantiate("mollified_hat"));
    Certificate m = check_certificate("one_d_measure", mh);
    CHECK(m.pass);
    CHECK(m.strict);
    CHECK(m.lhs > 2.0);
    CHECK(m.quantity("right_mass") > m.quantity("right_bound"));
}

TEST_CASE("weighted and exact_W certificates close exactly on extremal pairs") {
    auto phi = [](double x) { return 0.3 * std::sin(2.0 * x); };
    auto ew = [phi](double x) { return std::exp(phi(x)); };
    WeightPair w{ew, ew};
    Domain dom = Domain::segment(0.0, 1.0);
    ExtremalResult res = maximize_constant(dom, 2.0, w);
    Potential V = euler_lagrange_potential(res, 2.0, w);

    VerifyInput in;
    in.u = res.u;
    in.V = V;
    in.r = 2.0;
    in.weights = w;
    Certificate cw = check_certificate("weighted", in);
    CHECK_FALSE(cw.vacuous);
    CHECK(std::abs(cw.slack) <= 1e-6);

    in.phi = phi;
    Certificate ce = check_certificate("exact_W", in);
    CHECK_FALSE(ce.vacuous);
    CHECK(std::abs(ce.slack) <= 1e-3);
}

TEST_CASE("annulus_radial certificate") {
    int n = 3;
    Domain annulus = Domain::annulus(n, 0.5, 1.0);
    Domain seg = Domain::segment(0.5, 1.0);
    auto rw = [n](double rho) { return std::pow(rho, n - 1); };
    ExtremalResult r1 = maximize_constant(seg, 2.0, WeightPair{rw, rw});

    // radial profile on the annulus paired with its own Euler-Lagrange potential
    auto ga = r1.u.grid_ptr();
    Potential V = euler_lagrange_potential(r1, 2.0, WeightPair{rw, rw});
    auto g_ann = RadialGrid::from_nodes(annulus, ga->nodes());
    GridFunction ua(g_ann, r1.u.values(), true, true);
    Potential Va(GridFunction(g_ann, V.density().values(), false, false));

    VerifyInput in;
    in.u = ua;
    in.V = Va;
    in.r = 2.0;
    Certificate c = check_certificate("annulus_radial", in);
    CHECK_FALSE(c.vacuous);
    CHECK(std::abs(c.slack) <= 1e-4);
}

TEST_CASE("kind registry and input validation") {
    const auto& kinds = certificate_kinds();
    for (std::size_t i = 1; i < kinds.size(); ++i) CHECK(kinds[i - 1] < kinds[i]);

    VerifyInput empty;
    CHECK_THROWS_AS(check_certificate("main", empty), std::invalid_argument);

    auto g = RadialGrid::make(Domain::segment(0.0, 1.0), 65);
    VerifyInput in;
    in.u = sine(g);
    in.V = const_potential(g, M_PI * M_PI);
    CHECK_THROWS_AS(check_certificate("definitely_not_a_kind", in),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_certificate("critical", in), std::invalid_argument);  // n = 1
    CHECK_THROWS_AS(check_certificate("one_d_measure",
                                      [&] {
                                          VerifyInput b;
                                          auto gb = RadialGrid::make(Domain::ball(3, 1), 65);
                                          b.u = GridFunction::constant(gb, 1.0);
                                          return b;
                                      }()),
                    std::invalid_argument);
}
