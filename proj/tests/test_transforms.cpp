#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "klein/transforms.hpp"
#include "oracles.hpp"

using namespace klein;

namespace {

CReal cr(long num, long den) { return CReal(rat_from(num, den)); }

FinitePoint fp(long xn, long xd, long yn, long yd) { return FinitePoint(cr(xn, xd), cr(yn, yd)); }

Rimpoint rim(const Rat& t) { return rimpoint_from_parameter(t); }
Rimpoint rim_inf() { return rimpoint_from_parameter(std::nullopt); }

Rat rand_rat(std::mt19937_64& g, long lim) {
    std::uniform_int_distribution<long> num(-lim, lim);
    std::uniform_int_distribution<long> den(1, lim);
    return rat_from(num(g), den(g));
}

FinitePoint rand_interior(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-9, 9);
    return fp(num(g), 20, num(g), 20);
}

Line rand_line(std::mt19937_64& g) {
    for (;;) {
        Rat t1 = rand_rat(g, 9), t2 = rand_rat(g, 9);
        if (t1 != t2) return Line(rim(t1), rim(t2));
    }
}

Line x_axis() { return line_through(rim(Rat(0)), rim_inf()); }
Line y_axis() { return Line(rim(Rat(1)), rim(Rat(-1))); }
Line vert(long n, long d) { return line_from_coeffs(CReal(1), CReal(0), CReal(0) - cr(n, d)); }
Line horiz(long n, long d) { return line_from_coeffs(CReal(0), CReal(1), CReal(0) - cr(n, d)); }

std::optional<Rat> param_of(const Rimpoint& p) { return oracle::rim_parameter(p); }

}  // namespace

TEST_CASE("half-turn action on rimpoints") {
    CHECK(rims_equal(motion_apply(half_turn(fp(0, 1, 0, 1)), rim(Rat(1))), rim(Rat(-1))));
    CHECK(rims_equal(motion_apply(half_turn(fp(1, 2, 0, 1)), rim(Rat(0))), rim_inf()));
    CHECK(rims_equal(motion_apply(half_turn(fp(1, 3, 0, 1)), rim(Rat(-1))),
                     Rimpoint(cr(3, 5), cr(4, 5))));

    std::mt19937_64 g(41);
    for (int i = 0; i < 15; ++i) {
        FinitePoint p = rand_interior(g);
        Rimpoint x = rim(rand_rat(g, 9));
        Rimpoint y = motion_apply(half_turn(p), x);
        CHECK_FALSE(rims_equal(x, y));  // no fixed rimpoints
        CHECK(rims_equal(motion_apply(half_turn(p), y), x));
    }

    // boundary-parameter oracle for centers on the horizontal diameter
    std::uniform_int_distribution<long> a_num(-7, 7);
    std::uniform_int_distribution<int> at_inf(0, 6);
    for (int i = 0; i < 20; ++i) {
        Rat a = rat_from(a_num(g), 9);
        std::optional<Rat> u =
            at_inf(g) == 0 ? std::optional<Rat>() : std::optional<Rat>(rand_rat(g, 9));
        Rimpoint img = motion_apply(half_turn(FinitePoint(CReal(a), CReal(0))),
                                    rimpoint_from_parameter(u));
        CHECK(param_of(img) == oracle::halfturn_on_params(a, u));
    }
}

TEST_CASE("motion words compose, invert and compare") {
    Motion id;
    CHECK(rims_equal(motion_apply(id, rim(Rat(2))), rim(Rat(2))));
    CHECK(motion_is_identity(id));

    Motion two_steps = motion_compose(half_turn(fp(0, 1, 0, 1)), half_turn(fp(1, 3, 0, 1)));
    CHECK(rims_equal(motion_apply(two_steps, rim(Rat(1))), Rimpoint(cr(3, 5), cr(4, 5))));

    Motion mirror = reflection(x_axis());
    CHECK(rims_equal(motion_apply(mirror, rim(Rat(1))), rim(Rat(-1))));
    CHECK(mirror.parity() == 1);
    CHECK(two_steps.parity() == 0);
    CHECK(motion_compose(mirror, reflection(y_axis())).parity() == 0);

    CHECK(motion_is_identity(motion_compose(two_steps, motion_inverse(two_steps))));
    CHECK(motion_is_identity(motion_compose(mirror, mirror)));

    CHECK(motion_equal(half_turn(fp(1, 3, 0, 1)), motion_compose(half_turn(fp(1, 3, 0, 1)), id)));
    CHECK_FALSE(motion_equal(half_turn(fp(0, 1, 0, 1)), half_turn(fp(1, 3, 0, 1))));

    // two perpendicular mirrors make the half-turn about their meet
    Motion both = motion_compose(reflection(x_axis()), reflection(y_axis()));
    CHECK_FALSE(motion_equal(both, half_turn(fp(1, 3, 0, 1))));
    CHECK(motion_equal(both, half_turn(fp(0, 1, 0, 1))));
}

TEST_CASE("motions transport finite points and lines") {
    CHECK(points_equal(motion_apply(half_turn(fp(0, 1, 0, 1)), fp(1, 3, 0, 1)), fp(-1, 3, 0, 1)));
    CHECK(points_equal(motion_apply(half_turn(fp(1, 3, 0, 1)), fp(0, 1, 0, 1)), fp(3, 5, 0, 1)));
    CHECK(lines_equal(motion_apply(half_turn(fp(0, 1, 0, 1)), vert(1, 2)), vert(-1, 2)));

    std::mt19937_64 g(43);
    for (int i = 0; i < 10; ++i) {
        FinitePoint p = rand_interior(g), x = rand_interior(g);
        FinitePoint y = motion_apply(half_turn(p), x);
        CHECK(points_equal(motion_apply(half_turn(p), y), x));
        if (!points_equal(p, x)) CHECK(points_equal(midpoint(x, y), p));
    }
}

TEST_CASE("product of three collinear half-turns is a half-turn") {
    FinitePoint p = fp(0, 1, 0, 1), q = fp(1, 3, 0, 1), r = fp(3, 5, 0, 1);
    CHECK(points_equal(collinear_third(p, p, r), r));
    CHECK(points_equal(collinear_third(p, q, q), p));
    CHECK(points_equal(collinear_third(p, q, p), fp(-1, 3, 0, 1)));
    CHECK(points_equal(collinear_third(p, q, r), q));
    CHECK_THROWS_AS(collinear_third(p, q, fp(0, 1, 1, 3)), error);

    std::mt19937_64 g(47);
    std::uniform_int_distribution<long> num(-7, 7);
    for (int i = 0; i < 12; ++i) {
        // diameter instances against the artanh-coordinate oracle
        Rat a = rat_from(num(g), 9), b = rat_from(num(g), 9), c = rat_from(num(g), 9);
        FinitePoint s = collinear_third(FinitePoint(CReal(a), CReal(0)),
                                        FinitePoint(CReal(b), CReal(0)),
                                        FinitePoint(CReal(c), CReal(0)));
        Rat expect = oracle::tanh_add(a, oracle::tanh_add(-b, c));
        CHECK(points_equal(s, FinitePoint(CReal(expect), CReal(0))));
    }
    for (int i = 0; i < 8; ++i) {
        Line l = rand_line(g);
        FinitePoint p2 = point_on_at(l, rat_from(num(g), 8));
        FinitePoint q2 = point_on_at(l, rat_from(num(g), 9));
        FinitePoint r2 = point_on_at(l, rat_from(num(g), 10));
        FinitePoint s = collinear_third(p2, q2, r2);
        Motion w = motion_compose(motion_compose(half_turn(p2), half_turn(q2)), half_turn(r2));
        CHECK(motion_equal(w, half_turn(s)));
    }
}

TEST_CASE("midpoints from the common-parallels construction") {
    CHECK(points_equal(midpoint(fp(0, 1, 0, 1), fp(3, 5, 0, 1)), fp(1, 3, 0, 1)));
    CHECK(points_equal(midpoint(fp(-2, 5, 0, 1), fp(2, 5, 0, 1)), fp(0, 1, 0, 1)));
    CHECK(points_equal(midpoint(fp(1, 3, 1, 4), fp(1, 3, 1, 4)), fp(1, 3, 1, 4)));

    std::mt19937_64 g(53);
    for (int i = 0; i < 15; ++i) {
        FinitePoint p = rand_interior(g), q = rand_interior(g);
        FinitePoint m = midpoint(p, q);
        CHECK(points_equal(m, oracle::midpoint_closed_form(p, q)));
        if (!points_equal(p, q)) {
            CHECK(between(p, m, q));
            if (i < 6) {
                Motion lhs = motion_compose(half_turn(p), half_turn(m));
                Motion rhs = motion_compose(half_turn(m), half_turn(q));
                CHECK(motion_equal(lhs, rhs));
            }
        }
    }
}

TEST_CASE("axial maps fix their axis ends and contract the boundary") {
    CHECK_THROWS_AS(axial(fp(1, 3, 0, 1), fp(1, 3, 0, 1)), error);

    Motion a = axial(fp(0, 1, 0, 1), fp(1, 3, 0, 1));
    CHECK(rims_equal(motion_apply(a, rim(Rat(0))), rim(Rat(0))));
    CHECK(rims_equal(motion_apply(a, rim_inf()), rim_inf()));
    CHECK(rims_equal(motion_apply(a, rim(Rat(1))), Rimpoint(cr(3, 5), cr(4, 5))));
    // the boundary action is one linear contraction, the same on both arcs
    CHECK(rims_equal(motion_apply(a, rim(Rat(-1))), Rimpoint(cr(3, 5), cr(-4, 5))));

    std::mt19937_64 g(59);
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<int> at_inf(0, 6);
    for (int i = 0; i < 20; ++i) {
        Rat t = rat_from(num(g), 9);
        if (t == 0) continue;
        Motion ax = axial(fp(0, 1, 0, 1), FinitePoint(CReal(t), CReal(0)));
        std::optional<Rat> u =
            at_inf(g) == 0 ? std::optional<Rat>() : std::optional<Rat>(rand_rat(g, 9));
        Rimpoint img = motion_apply(ax, rimpoint_from_parameter(u));
        CHECK(param_of(img) == oracle::axial_on_params(t, u));
        if (u.has_value() && *u != 0) CHECK_FALSE(rims_equal(img, rimpoint_from_parameter(u)));
    }

    for (int i = 0; i < 6; ++i) {
        Line l = rand_line(g);
        FinitePoint p1 = point_on_at(l, rat_from(num(g), 8));
        FinitePoint p2 = point_on_at(l, rat_from(num(g), 9));
        FinitePoint p3 = point_on_at(l, rat_from(num(g), 10));
        FinitePoint p4 = point_on_at(l, rat_from(num(g), 11));
        if (points_equal(p1, p2) || points_equal(p3, p4)) continue;
        Motion u = axial(p1, p2), v = axial(p3, p4);
        CHECK(motion_equal(motion_compose(u, v), motion_compose(v, u)));
    }
}

TEST_CASE("axial decomposition at a chosen base point") {
    Line ax = x_axis();
    Motion a = axial(fp(0, 1, 0, 1), fp(1, 3, 0, 1));
    CHECK(points_equal(axial_decompose(a, ax, fp(0, 1, 0, 1)), fp(1, 3, 0, 1)));
    CHECK(points_equal(axial_decompose(a, ax, fp(1, 3, 0, 1)), fp(3, 5, 0, 1)));
    CHECK(points_equal(axial_decompose(Motion(), ax, fp(1, 4, 0, 1)), fp(1, 4, 0, 1)));
    CHECK_THROWS_AS(axial_decompose(a, ax, fp(0, 1, 1, 3)), error);
    CHECK_THROWS_AS(axial_decompose(half_turn(fp(0, 1, 0, 1)), ax, fp(0, 1, 0, 1)), error);
    CHECK_THROWS_AS(axial_decompose(reflection(ax), ax, fp(0, 1, 0, 1)), error);

    std::mt19937_64 g(61);
    std::uniform_int_distribution<long> num(-7, 7);
    for (int i = 0; i < 6; ++i) {
        Line l = rand_line(g);
        FinitePoint p1 = point_on_at(l, rat_from(num(g), 8));
        FinitePoint p2 = point_on_at(l, rat_from(num(g), 9));
        if (points_equal(p1, p2)) continue;
        Motion alpha = axial(p1, p2);
        FinitePoint base = point_on_at(l, rat_from(num(g), 10));
        FinitePoint q = axial_decompose(alpha, l, base);
        CHECK(incident(l, q));
        if (!points_equal(base, q)) CHECK(motion_equal(axial(base, q), alpha));
    }
}

TEST_CASE("axial map through a prescribed rimpoint pair") {
    Line ax = x_axis();
    CHECK(motion_is_identity(axial_through(ax, rim(Rat(1)), rim(Rat(1)))));
    Motion a = axial_through(ax, rim(Rat(1)), Rimpoint(cr(3, 5), cr(4, 5)));
    CHECK(motion_equal(a, axial(fp(0, 1, 0, 1), fp(1, 3, 0, 1))));
    Motion back = axial_through(ax, Rimpoint(cr(3, 5), cr(4, 5)), rim(Rat(1)));
    CHECK(motion_is_identity(motion_compose(a, back)));

    CHECK_THROWS_AS(axial_through(ax, rim(Rat(1)), rim(Rat(-1))), error);  // opposite sides
    CHECK_THROWS_AS(axial_through(ax, rim(Rat(0)), rim(Rat(1))), error);   // end of the axis

    std::mt19937_64 g(67);
    int done = 0;
    while (done < 8) {
        Line l = rand_line(g);
        Rimpoint u = rim(rand_rat(g, 9)), v = rim(rand_rat(g, 9));
        if (incident(l, u) || incident(l, v)) continue;
        if (!same_side(l, AnyPoint(u), AnyPoint(v))) continue;
        Motion alpha = axial_through(l, u, v);
        CHECK(rims_equal(motion_apply(alpha, u), v));
        CHECK(rims_equal(motion_apply(alpha, l.end1()), l.end1()));
        ++done;
    }
}

TEST_CASE("axial square roots") {
    Line ax = x_axis();
    CHECK(motion_is_identity(axial_sqrt(Motion(), ax)));
    CHECK(motion_equal(axial_sqrt(axial(fp(0, 1, 0, 1), fp(3, 5, 0, 1)), ax),
                       axial(fp(0, 1, 0, 1), fp(1, 3, 0, 1))));

    // half of the step to 1/3 lands at the irrational coordinate 3 - 2*sqrt(2)
    CReal m = CReal(3) - CReal(2) * sqrt(CReal(2));
    CHECK(motion_equal(axial_sqrt(axial(fp(0, 1, 0, 1), fp(1, 3, 0, 1)), ax),
                       axial(fp(0, 1, 0, 1), FinitePoint(m, CReal(0)))));

    CHECK_THROWS_AS(axial_sqrt(reflection(ax), ax), error);

    std::mt19937_64 g(71);
    std::uniform_int_distribution<long> num(-7, 7);
    for (int i = 0; i < 5; ++i) {
        Line l = rand_line(g);
        FinitePoint p1 = point_on_at(l, rat_from(num(g), 8));
        FinitePoint p2 = point_on_at(l, rat_from(num(g), 9));
        if (points_equal(p1, p2)) continue;
        Motion alpha = axial(p1, p2);
        Motion root = axial_sqrt(alpha, l);
        CHECK(motion_equal(motion_compose(root, root), alpha));
        CHECK(rims_equal(motion_apply(root, l.end1()), l.end1()));
    }
}

TEST_CASE("half transport moves a rim pair to its arc middle") {
    Line ax = x_axis();
    Rimpoint x3(cr(3, 5), cr(4, 5)), x4(cr(-3, 5), cr(4, 5));
    Motion g = half_transport(ax, x3, x4);
    CHECK(rims_equal(motion_apply(g, x4), rim(Rat(1))));
    CHECK(rims_equal(motion_apply(motion_compose(g, g), x4), x3));

    CHECK(motion_is_identity(half_transport(ax, rim(Rat(1)), rim(Rat(1)))));
    Motion rev = half_transport(ax, x4, x3);
    CHECK(motion_is_identity(motion_compose(g, rev)));

    CHECK_THROWS_AS(half_transport(ax, rim(Rat(1)), rim(Rat(-1))), error);   // crossing chord
    CHECK_THROWS_AS(half_transport(ax, rim(Rat(0)), rim(Rat(1))), error);    // parallel chord
    CHECK_THROWS_AS(half_transport(ax, rim(Rat(2)), rim(Rat(-2))), error);   // crossing chord
}

TEST_CASE("reflections act on rimpoints like the quadratic-form mirror") {
    Motion mx = reflection(x_axis());
    CHECK(rims_equal(motion_apply(mx, rim(Rat(1))), rim(Rat(-1))));
    CHECK(rims_equal(motion_apply(mx, rim(Rat(0))), rim(Rat(0))));

    Motion mv = reflection(vert(1, 2));
    CHECK(rims_equal(motion_apply(mv, rim(Rat(0))), rim_inf()));
    CHECK(rims_equal(motion_apply(mv, rim(Rat(1))), Rimpoint(cr(4, 5), cr(3, 5))));

    std::mt19937_64 g(73);
    int done = 0;
    while (done < 25) {
        Line l = rand_line(g);
        Rimpoint a = rim(rand_rat(g, 9));
        if (incident(l, a)) continue;
        Rimpoint img = motion_apply(reflection(l), a);
        CHECK(rims_equal(img, oracle::mirror_by_form(l, a)));
        CHECK(rims_equal(motion_apply(reflection(l), img), a));
        ++done;
    }

    // parity 1 reverses the cyclic order of rim triples
    Rimpoint a = rim(Rat(0)), b = rim(Rat(2)), c = rim(Rat(3));
    REQUIRE(cyclic_order(a, b, c));
    Line l = rand_line(g);
    CHECK_FALSE(cyclic_order(motion_apply(reflection(l), a), motion_apply(reflection(l), b),
                             motion_apply(reflection(l), c)));
}

TEST_CASE("point reflection across a line") {
    CHECK(points_equal(reflect_point(x_axis(), fp(1, 3, 0, 1)), fp(1, 3, 0, 1)));
    CHECK(points_equal(reflect_point(y_axis(), fp(1, 3, 0, 1)), fp(-1, 3, 0, 1)));
    CHECK(points_equal(reflect_point(vert(1, 2), fp(0, 1, 0, 1)), fp(4, 5, 0, 1)));

    std::mt19937_64 g(79);
    int done = 0;
    while (done < 6) {
        Line l = rand_line(g);
        FinitePoint q = rand_interior(g);
        if (incident(l, q)) continue;
        FinitePoint img = reflect_point(l, q);
        FinitePoint foot = std::get<FinitePoint>(meet(perp_through_point(l, q), l));
        CHECK(points_equal(img, motion_apply(half_turn(foot), q)));
        ++done;
    }
}

TEST_CASE("perpendicular from a rimpoint and its foot") {
    CHECK(lines_equal(perp_from_rimpoint(x_axis(), rim(Rat(1))), y_axis()));
    CHECK(lines_equal(perp_from_rimpoint(x_axis(), Rimpoint(cr(3, 5), cr(4, 5))), vert(3, 5)));
    CHECK(lines_equal(perp_from_rimpoint(y_axis(), rim(Rat(0))), x_axis()));
    CHECK_THROWS_AS(perp_from_rimpoint(x_axis(), rim(Rat(0))), error);

    CHECK(points_equal(a11_foot(x_axis(), rim(Rat(1))), fp(0, 1, 0, 1)));
    CHECK(points_equal(a11_foot(x_axis(), Rimpoint(cr(3, 5), cr(4, 5))), fp(3, 5, 0, 1)));
    CHECK(points_equal(a11_foot(y_axis(), rim(Rat(0))), fp(0, 1, 0, 1)));
    CHECK_THROWS_AS(a11_foot(x_axis(), rim_inf()), error);

    std::mt19937_64 g(83);
    int done = 0;
    while (done < 8) {
        Line l = rand_line(g);
        Rimpoint a = rim(rand_rat(g, 9));
        if (incident(l, a)) continue;
        Line p = perp_from_rimpoint(l, a);
        CHECK(incident(p, a));
        CHECK(is_perpendicular(p, l));
        CHECK(std::holds_alternative<FinitePoint>(meet(p, l)));
        ++done;
    }
}

TEST_CASE("perpendicularity matches conjugacy with respect to the circle") {
    CHECK(is_perpendicular(x_axis(), y_axis()));
    CHECK(is_perpendicular(x_axis(), vert(1, 2)));
    CHECK_FALSE(is_perpendicular(vert(1, 2), vert(-1, 2)));
    CHECK_THROWS_AS(is_perpendicular(x_axis(), x_axis()), error);

    std::mt19937_64 g(89);
    int done = 0;
    while (done < 40) {
        Line l = rand_line(g), m = rand_line(g);
        if (lines_equal(l, m)) continue;
        bool got = is_perpendicular(l, m);
        CHECK(got == oracle::conjugate_lines(l, m));
        CHECK(got == is_perpendicular(m, l));
        ++done;
    }
}

TEST_CASE("perpendicular at an incident point") {
    CHECK(lines_equal(perp_at_point(x_axis(), fp(0, 1, 0, 1)), y_axis()));
    CHECK(lines_equal(perp_at_point(x_axis(), fp(1, 3, 0, 1)), vert(1, 3)));
    CHECK(lines_equal(perp_at_point(y_axis(), fp(0, 1, 1, 2)), horiz(1, 2)));
    CHECK_THROWS_AS(perp_at_point(x_axis(), fp(0, 1, 1, 3)), error);

    std::mt19937_64 g(97);
    std::uniform_int_distribution<long> num(-7, 7);
    for (int i = 0; i < 12; ++i) {
        Line l = rand_line(g);
        FinitePoint p = point_on_at(l, rat_from(num(g), 8));
        Line perp = perp_at_point(l, p);
        CHECK(incident(perp, p));
        CHECK(is_perpendicular(perp, l));
        CHECK(oracle::conjugate_lines(perp, l));
    }
}

TEST_CASE("perpendicular dropped from an outside point") {
    CHECK(lines_equal(perp_through_point(y_axis(), fp(1, 3, 0, 1)), x_axis()));
    CHECK(lines_equal(perp_through_point(vert(1, 2), fp(0, 1, 0, 1)), x_axis()));
    CHECK(lines_equal(perp_through_point(x_axis(), fp(0, 1, 1, 2)), y_axis()));
    CHECK_THROWS_AS(perp_through_point(x_axis(), fp(1, 3, 0, 1)), error);

    std::mt19937_64 g(101);
    int done = 0;
    while (done < 6) {
        Line l = rand_line(g);
        FinitePoint p = rand_interior(g);
        if (incident(l, p)) continue;
        Line perp = perp_through_point(l, p);
        CHECK(incident(perp, p));
        CHECK(is_perpendicular(perp, l));
        ++done;
    }
}

TEST_CASE("common perpendicular of ultraparallel lines") {
    CHECK(lines_equal(common_perpendicular(vert(1, 2), vert(-1, 2)), x_axis()));
    Line l1(rim(Rat(0)), rim(Rat(1)));
    Line l2(rim_inf(), rim(Rat(-1)));
    CHECK(lines_equal(common_perpendicular(l1, l2), line_through(fp(0, 1, 0, 1), fp(1, 2, 1, 2))));
    CHECK(lines_equal(common_perpendicular(x_axis(), horiz(4, 5)), y_axis()));

    CHECK_THROWS_AS(common_perpendicular(x_axis(), y_axis()), error);
    CHECK_THROWS_AS(common_perpendicular(l1, Line(rim(Rat(0)), rim(Rat(-1)))), error);
    CHECK_THROWS_AS(common_perpendicular(x_axis(), x_axis()), error);

    std::mt19937_64 g(103);
    int done = 0;
    while (done < 6) {
        Line l = rand_line(g), m = rand_line(g);
        if (lines_equal(l, m) || classify_pair(l, m) != PairClass::Ultraparallel) continue;
        Line n = common_perpendicular(l, m);
        CHECK(is_perpendicular(n, l));
        CHECK(is_perpendicular(n, m));
        FinitePoint d = bowtie(l, m);
        CHECK(incident(n, d));
        FinitePoint f1 = std::get<FinitePoint>(meet(n, l));
        FinitePoint f2 = std::get<FinitePoint>(meet(n, m));
        CHECK(points_equal(midpoint(f1, f2), d));
        ++done;
    }
}

TEST_CASE("bisectors per end pairing") {
    Line pos = line_through(fp(0, 1, 0, 1), fp(1, 2, 1, 2));
    Line neg = line_through(fp(0, 1, 0, 1), fp(1, 2, -1, 2));
    CHECK(lines_equal(bisector(x_axis(), y_axis(), EndPairing::Straight), pos));
    CHECK(lines_equal(bisector(x_axis(), y_axis(), EndPairing::Crossed), neg));
    CHECK(lines_equal(bisector(vert(1, 2), vert(-1, 2), EndPairing::Straight), y_axis()));
    CHECK_THROWS_AS(bisector(vert(1, 2), vert(-1, 2), EndPairing::Crossed), error);
    CHECK_THROWS_AS(bisector(x_axis(), x_axis(), EndPairing::Straight), error);

    // parallel pair: the shared end must be matched with itself
    Line p1(rim(Rat(0)), rim(Rat(1)));
    Line p2(rim(Rat(0)), rim(Rat(-1)));
    int ok = 0;
    for (EndPairing pairing : {EndPairing::Straight, EndPairing::Crossed}) {
        try {
            Line n = bisector(p1, p2, pairing);
            Motion sn = reflection(n);
            CHECK(motion_equal(motion_compose(reflection(p1), sn),
                               motion_compose(sn, reflection(p2))));
            ++ok;
        } catch (const error&) {
        }
    }
    CHECK(ok == 1);

    std::mt19937_64 g(107);
    int done = 0;
    while (done < 6) {
        Line l = rand_line(g), m = rand_line(g);
        if (lines_equal(l, m)) continue;
        int realized = 0;
        for (EndPairing pairing : {EndPairing::Straight, EndPairing::Crossed}) {
            Line n(rim(Rat(0)), rim(Rat(1)));
            try {
                n = bisector(l, m, pairing);
            } catch (const error&) {
                continue;
            }
            ++realized;
            Motion sn = reflection(n);
            CHECK(motion_equal(motion_compose(reflection(l), sn),
                               motion_compose(sn, reflection(m))));
            const Rimpoint& target = pairing == EndPairing::Straight ? m.end1() : m.end2();
            CHECK(rims_equal(motion_apply(sn, l.end1()), target));
        }
        CHECK(realized >= 1);
        ++done;
    }
}

TEST_CASE("glide products rewrite as point times reflection") {
    auto post_holds = [](const FinitePoint& a, const FinitePoint& e, const Line& d,
                         const GlideForm& f) {
        Motion lhs({HalfTurnGen{a}, HalfTurnGen{e}, ReflectGen{d}});
        Motion rhs = motion_compose(half_turn(f.point), reflection(f.mirror));
        return motion_equal(lhs, rhs);
    };

    GlideForm f0 = glide_normalize(fp(0, 1, 0, 1), fp(1, 3, 0, 1), x_axis());
    CHECK(points_equal(f0.point, fp(0, 1, 0, 1)));
    CHECK(lines_equal(f0.mirror, vert(1, 3)));

    GlideForm f1 = glide_normalize(fp(0, 1, 0, 1), fp(1, 3, 0, 1), y_axis());
    CHECK(points_equal(f1.point, fp(-1, 3, 0, 1)));
    CHECK(lines_equal(f1.mirror, x_axis()));

    GlideForm f2 = glide_normalize(fp(0, 1, 0, 1), fp(1, 3, 0, 1), horiz(4, 5));
    CHECK(post_holds(fp(0, 1, 0, 1), fp(1, 3, 0, 1), horiz(4, 5), f2));

    Line par(rim(Rat(0)), rim(Rat(1)));
    GlideForm f3 = glide_normalize(fp(0, 1, 0, 1), fp(1, 3, 0, 1), par);
    CHECK(post_holds(fp(0, 1, 0, 1), fp(1, 3, 0, 1), par, f3));
    CHECK_FALSE(incident(f3.mirror, f3.point));  // a genuine glide in the parallel case
    // the glide axis is the perpendicular to the mirror through the point
    Line axis = perp_through_point(f3.mirror, f3.point);
    Motion g3({HalfTurnGen{fp(0, 1, 0, 1)}, HalfTurnGen{fp(1, 3, 0, 1)}, ReflectGen{par}});
    CHECK(rims_equal(motion_apply(g3, axis.end1()), axis.end1()));
    CHECK(rims_equal(motion_apply(g3, axis.end2()), axis.end2()));

    CHECK_THROWS_AS(glide_normalize(fp(1, 3, 0, 1), fp(1, 3, 0, 1), x_axis()), error);

    std::mt19937_64 g(109);
    int done = 0;
    while (done < 8) {
        FinitePoint a = rand_interior(g), e = rand_interior(g);
        if (points_equal(a, e)) continue;
        Line d = rand_line(g);
        GlideForm f = glide_normalize(a, e, d);
        CHECK(post_holds(a, e, d, f));
        ++done;
    }
}

TEST_CASE("conjugation and incidence identities") {
    std::mt19937_64 g(113);
    int done = 0;
    while (done < 5) {
        Line l = rand_line(g);
        FinitePoint p = rand_interior(g);
        if (incident(l, p)) continue;

        Motion sl = reflection(l);
        Motion conj = motion_compose(motion_compose(sl, half_turn(p)), sl);
        CHECK(motion_equal(conj, half_turn(reflect_point(l, p))));

        Motion conj2 = motion_compose(motion_compose(half_turn(p), sl), half_turn(p));
        CHECK(motion_equal(conj2, reflection(motion_apply(half_turn(p), l))));

        Motion ps = motion_compose(half_turn(p), sl);
        CHECK_FALSE(motion_is_identity(motion_compose(ps, ps)));
        ++done;
    }
    // and with the point on the line the product is involutory
    Line ax = x_axis();
    Motion ps = motion_compose(half_turn(fp(1, 3, 0, 1)), reflection(ax));
    CHECK(motion_is_identity(motion_compose(ps, ps)));
}
