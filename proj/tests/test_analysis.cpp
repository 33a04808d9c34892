#include <doctest.h>

#include <algorithm>

#include "legendrian/analysis.hpp"
#include "legendrian/expr_parser.hpp"
#include "support/generators.hpp"

using namespace legendrian;

namespace {
RationalFunction rf(const std::string& s) { return parse_expression(s); }
GaussianRational q(long n, long d = 1) { return GaussianRational(make_rational(n, d)); }
DomainPoint origin() { return DomainPoint(q(0)); }

RationalFunction monomial_power(int e) {
    RationalFunction acc(GaussianRational(1));
    for (int k = 0; k < std::abs(e); ++k) acc = acc * parse_expression("z");
    return e >= 0 ? acc : acc.inverse();
}

bool matches_row(const std::array<int, 4>& got, const std::array<int, 4>& row,
                 const std::array<bool, 4>& lower_bound) {
    for (int k = 0; k < 4; ++k) {
        std::size_t i = static_cast<std::size_t>(k);
        if (lower_bound[i]) {
            if (got[i] < row[i]) return false;
        } else if (got[i] != row[i]) {
            return false;
        }
    }
    return true;
}
}  // namespace

TEST_CASE("formula orders reproduce the monomial order table at 0") {
    struct Row {
        int a, b;
        std::array<int, 4> orders;
        std::array<bool, 4> lower_bound;
        bool immersed;
    };
    // Orders of (dg, f dg - g df/2, g dg, df/2) for f = z^a, g = z^b.
    const Row rows[] = {
        {0, 1, {0, 0, 1, 0}, {false, false, false, true}, true},
        {2, 1, {0, 3, 1, 1}, {false, true, false, false}, true},
        {3, 1, {0, 3, 1, 2}, {false, false, false, false}, true},
        {0, -1, {-2, -2, -3, 0}, {false, false, false, true}, true},
        {-2, -1, {-2, -3, -3, -3}, {false, true, false, false}, true},
        {4, -1, {-2, 2, -3, 3}, {false, false, false, false}, true},
        {1, 3, {2, 3, 5, 0}, {false, false, false, false}, false},
        {3, 4, {3, 6, 7, 2}, {false, false, false, false}, true},
    };
    for (const Row& row : rows) {
        CAPTURE(row.a);
        CAPTURE(row.b);
        RationalFunction f = monomial_power(row.a);
        RationalFunction g = monomial_power(row.b);
        std::array<int, 4> got = bryant_formula_orders(f, g, origin());
        // A sentinel for an identically vanishing component satisfies any
        // lower bound row.
        CHECK(matches_row(got, row.orders, row.lower_bound));

        ProjectiveCurve C = bryant_curve(f, g);
        CHECK(is_immersed_at(C, origin()) == row.immersed);

        // Cleared orders are the raw row shifted to minimum zero.
        std::array<int, 4> cleared = component_orders(C, origin());
        int min_cleared = *std::min_element(cleared.begin(), cleared.end());
        CHECK(min_cleared == 0);
        int min_raw = *std::min_element(got.begin(), got.end());
        for (int k = 0; k < 4; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            if (got[i] == kOrderInfinity) CHECK(cleared[i] == kOrderInfinity);
            else CHECK(cleared[i] == got[i] - min_raw);
        }
        // On these centred rows the order-gap reading agrees with the exact
        // rank test.
        CHECK(order_gap_immersed(got) == row.immersed);
        CHECK(order_gap_immersed(cleared) == row.immersed);
    }
}

TEST_CASE("component orders at infinity via the reversed tuple") {
    ProjectiveCurve C = bryant_curve(rf("1/z"), rf("z"));
    // Tuple (2z^2, 3z, 2z^3, -1): orders at infinity are degree complements.
    std::array<int, 4> at_inf = component_orders(C, DomainPoint::infinity());
    CHECK(at_inf == std::array<int, 4>{1, 2, 0, 3});
}

TEST_CASE("rank test handles uncentred curves where the raw gap reading fails") {
    // B((2/3)z^3, 1+z) at 0 has cleared orders (0, 2, 0, 2) yet is immersed;
    // recentring g at g(0) restores the tabulated situation.
    ProjectiveCurve C = bryant_curve(rf("2/3*z^3"), rf("1+z"));
    std::array<int, 4> orders = component_orders(C, origin());
    CHECK(orders == std::array<int, 4>{0, 2, 0, 2});
    CHECK(!order_gap_immersed(orders));
    CHECK(is_immersed_at(C, origin()));
    std::array<int, 4> centred = bryant_formula_orders(rf("2/3*z^3"), rf("z"), origin());
    CHECK(order_gap_immersed(centred));
}

TEST_CASE("constant curves rejected by the immersion test") {
    PolyTuple4 constant{rf("2").num(), rf("1").num(), rf("3").num(), rf("5").num()};
    CHECK_THROWS_AS(is_immersed_at(ProjectiveCurve(std::move(constant)), origin()), Undefined);
}

TEST_CASE("pole diagnostics for a simple data pole") {
    ProjectiveCurve C = bryant_curve(rf("1/z"), rf("z"));
    CurveAnalysisReport rep = analyze(C);

    REQUIRE(rep.data_poles.size() == 2);  // z = 0 from f, z = inf from g
    bool found_zero = false, found_inf = false;
    for (const auto& dp : rep.data_poles) {
        if (dp.location.at_infinity) {
            found_inf = true;
            CHECK(dp.order_second == 1);
            CHECK(dp.simple);
            CHECK(dp.immersed);
        } else {
            REQUIRE(dp.location.exact);
            CHECK(dp.location.point.value == q(0));
            found_zero = true;
            CHECK(dp.order_first == 1);
            CHECK(dp.order_second == 0);
            CHECK(dp.simple);
            CHECK(dp.immersed);
        }
    }
    CHECK(found_zero);
    CHECK(found_inf);

    // Exact hyperplane contact: order 2 at the pole of f, order 1 at the
    // pole of g.
    REQUIRE(rep.hyperplane_points.size() == 2);
    for (const auto& hp : rep.hyperplane_points) {
        if (hp.location.at_infinity) {
            CHECK(hp.z0_contact_order == 1);
            CHECK(hp.transverse);
        } else {
            CHECK(hp.location.point.value == q(0));
            CHECK(hp.z0_contact_order == 2);
            CHECK(!hp.transverse);
            CHECK(hp.immersed);
        }
    }
    CHECK(rep.immersed_everywhere);
}

TEST_CASE("double data pole is flagged non-simple") {
    ProjectiveCurve C = bryant_curve(rf("1/z^2"), rf("z"));
    CurveAnalysisReport rep = analyze(C);
    bool found = false;
    for (const auto& dp : rep.data_poles) {
        if (dp.location.at_infinity || !dp.location.exact) continue;
        if (dp.location.point.value == q(0)) {
            found = true;
            CHECK(dp.order_first == 2);
            CHECK(!dp.simple);
        }
    }
    CHECK(found);
    for (const auto& hp : rep.hyperplane_points)
        if (!hp.location.at_infinity) CHECK(hp.z0_contact_order == 3);
}

TEST_CASE("non-rational pole locations are analyzed numerically and flagged") {
    ProjectiveCurve C = bryant_curve(rf("1/(z^2 - 2)"), rf("z"));
    CurveAnalysisReport rep = analyze(C);
    int numeric_poles = 0;
    for (const auto& dp : rep.data_poles) {
        if (dp.location.at_infinity || dp.location.exact) continue;
        ++numeric_poles;
        CHECK(std::abs(std::abs(dp.location.approx.real()) - std::sqrt(2.0)) < 1e-9);
        CHECK(dp.order_first == 1);
        CHECK(dp.simple);
        CHECK(dp.immersed);
    }
    CHECK(numeric_poles == 2);
}

TEST_CASE("analysis of an exceptional line") {
    CurveAnalysisReport rep = analyze(exceptional_line(q(0), q(1)));
    CHECK(rep.base_points.empty());
    CHECK(rep.immersion_failures.empty());
    CHECK(rep.immersed_everywhere);
    REQUIRE(rep.hyperplane_points.size() == 1);
    CHECK(rep.hyperplane_points[0].location.at_infinity);
    CHECK(rep.hyperplane_points[0].transverse);
}

TEST_CASE("base points recorded from construction clearing") {
    ProjectiveCurve C = bryant_curve(rf("z^2"), rf("z^3"));
    REQUIRE(C.cleared_factor().degree() == 1);
    CurveAnalysisReport rep = analyze(C);
    REQUIRE(rep.base_points.size() == 1);
    CHECK(rep.base_points[0].location.point.value == q(0));
    CHECK(rep.base_points[0].multiplicity == 1);
}

TEST_CASE("clearing common factors leaves the analysis invariant") {
    testgen::Rng rng(1122);
    for (int trial = 0; trial < 10; ++trial) {
        RationalFunction f = testgen::random_ratfunc(rng, 2);
        RationalFunction g = testgen::random_nonconstant_ratfunc(rng, 2);
        ProjectiveCurve C = bryant_curve(f, g);
        Polynomial junk = testgen::random_nonzero_polynomial(rng, 2);
        PolyTuple4 blown;
        for (int i = 0; i < 4; ++i)
            blown[static_cast<std::size_t>(i)] = C.components()[static_cast<std::size_t>(i)] * junk;
        ProjectiveCurve D(std::move(blown));
        CHECK(D == C);
        DomainPoint p = testgen::random_point(rng);
        CHECK(component_orders(D, p) == component_orders(C, p));
        if (!C.is_constant()) CHECK(is_immersed_at(D, p) == is_immersed_at(C, p));
    }
}

TEST_CASE("exactness report examples") {
    ExactnessReport pass = exactness_check(rf("1/z"), rf("z^2"));
    CHECK(pass.pass);
    for (const auto& e : pass.entries) CHECK(e.vanishes);

    ExactnessReport fail = exactness_check(rf("1/z + z"), rf("1/z"));
    CHECK(!fail.pass);
    bool found = false;
    for (const auto& e : fail.entries) {
        if (!e.pole.at_infinity && e.pole.exact && e.pole.point.value == q(0)) {
            found = true;
            CHECK(e.residue == q(-1));
            CHECK(e.fast_path_checked);
            CHECK(e.fast_path_value == q(-1));
            CHECK(e.fast_path_agrees);
        }
    }
    CHECK(found);

    // Simple pole of h at a regular point of g: residue g'(0) res_0 h = 1.
    ExactnessReport mixed = exactness_check(rf("1/z"), rf("z + z^2"));
    CHECK(!mixed.pass);
    for (const auto& e : mixed.entries)
        if (e.pole.exact && !e.pole.at_infinity && e.pole.point.value == q(0))
            CHECK(e.residue == q(1));
}

TEST_CASE("fast path agrees with the residue at random simple poles") {
    testgen::Rng rng(2211);
    for (int trial = 0; trial < 30; ++trial) {
        RationalFunction h = testgen::random_simple_pole_function(rng);
        RationalFunction g = testgen::random_simple_pole_function(rng);
        ExactnessReport rep = exactness_check(h, g);
        for (const auto& e : rep.entries)
            if (e.fast_path_checked) CHECK(e.fast_path_agrees);
    }
}

TEST_CASE("pair immersion test") {
    CHECK(hg_immersion_check(rf("z"), rf("z^2")).immersion);

    PairImmersionResult bad = hg_immersion_check(rf("z^2"), rf("z^3 + 1/2"));
    CHECK(!bad.immersion);
    bool fails_at_zero = false;
    for (const auto& p : bad.failures)
        fails_at_zero = fails_at_zero || (!p.at_infinity && p.exact && p.point.value == q(0));
    CHECK(fails_at_zero);

    // A simple pole keeps the pair immersive through the reciprocal chart.
    CHECK(hg_immersion_check(rf("1/z"), rf("z")).immersion);

    CHECK_THROWS_AS(hg_immersion_check(rf("1/z^2"), rf("z")), HypothesisViolation);
}

TEST_CASE("simple pole certificates") {
    CHECK(simple_pole_certificate(rf("1/z"), rf("z")));
    CHECK(!simple_pole_certificate(rf("1/z^2"), rf("z")));
    CHECK(simple_pole_certificate(rf("z"), rf("z")));
    CHECK(!simple_pole_certificate(rf("z^2"), rf("z")));
}

TEST_CASE("an immersed g makes the Bryant curve immersed") {
    testgen::Rng rng(3344);
    int checked = 0;
    for (int trial = 0; trial < 120 && checked < 25; ++trial) {
        RationalFunction f = testgen::random_ratfunc(rng, 2);
        // Moebius g: an immersion of all of CP^1.
        GaussianRational a = testgen::random_gaussian(rng), b = testgen::random_gaussian(rng);
        GaussianRational c = testgen::random_gaussian(rng), d = testgen::random_gaussian(rng);
        if ((a * d - b * c).is_zero()) continue;
        RationalFunction g(Polynomial(std::vector<GaussianRational>{b, a}),
                           Polynomial(std::vector<GaussianRational>{d, c}));
        if (g.is_constant()) continue;
        ProjectiveCurve C = bryant_curve(f, g);
        if (C.is_constant()) continue;
        ++checked;
        for (int pt = 0; pt < 6; ++pt) CHECK(is_immersed_at(C, testgen::random_point(rng)));
        CHECK(is_immersed_at(C, DomainPoint::infinity()));
    }
    CHECK(checked == 25);
}

TEST_CASE("pair immersion matches the pointwise curve test on exact pairs") {
    testgen::Rng rng(4455);
    int pairs = 0;
    for (int trial = 0; trial < 300 && pairs < 12; ++trial) {
        RationalFunction f = testgen::random_polynomial(rng, 3);
        RationalFunction g = testgen::random_nonconstant_ratfunc(rng, 1);
        RationalFunction h = -(f.derivative() / g.derivative());
        if (h.is_zero()) continue;
        if (!simple_pole_certificate(h, g)) continue;
        if (!exactness_check(h, g).pass) continue;
        ProjectiveCurve C = f_curve(h, g, q(0));
        if (C.is_constant()) continue;
        ++pairs;
        PairImmersionResult pair = hg_immersion_check(h, g);

        // Simple data poles keep the curve immersed there.
        for (const auto& pole : pole_set(h)) {
            if (!pole.location.exact) continue;
            DomainPoint p = pole.location.at_infinity ? DomainPoint::infinity() : pole.location.point;
            CHECK(is_immersed_at(C, p));
        }
        // At sample points the pair verdict matches the curve verdict.
        for (int pt = 0; pt < 50; ++pt) {
            DomainPoint p = testgen::random_point(rng);
            bool pair_ok = true;
            for (const auto& failure : pair.failures) {
                if (failure.at_infinity || !failure.exact) continue;
                if (failure.point.value == p.value) pair_ok = false;
            }
            CHECK(pair_ok == is_immersed_at(C, p));
        }
    }
    CHECK(pairs == 12);
}

TEST_CASE("curve immersed near every simple data pole") {
    testgen::Rng rng(6677);
    for (int trial = 0; trial < 15; ++trial) {
        RationalFunction f = testgen::random_simple_pole_function(rng, 2, 1);
        RationalFunction g = testgen::random_simple_pole_function(rng, 2, 1);
        if (g.is_constant()) continue;
        ProjectiveCurve C = bryant_curve(f, g);
        if (C.is_constant()) continue;
        for (const auto& r : {f, g}) {
            for (const auto& pole : pole_set(r)) {
                if (!pole.location.exact) continue;
                DomainPoint p =
                    pole.location.at_infinity ? DomainPoint::infinity() : pole.location.point;
                CHECK(is_immersed_at(C, p));
            }
        }
    }
}
