#include "verify_internal.hpp"

namespace klein::detail_verify {

namespace {

bool i1_unique_join(Ctx& c) {
    FinitePoint A = rand_point(c, "A");
    FinitePoint B = rand_point_avoiding(c, "B", {&A});
    Line ab = line_through(A, B);
    c.put("AB", ab);
    if (!incident(ab, A) || !incident(ab, B)) return false;
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&ab.end1(), &ab.end2()});
    Line az = line_through(A, Z);
    c.put("AZ", az);
    return !incident(az, B);
}

bool i2_three_points_on_line(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint A = point_on_at(l, Rat(-1, 2));
    FinitePoint B = point_on_at(l, Rat(0));
    FinitePoint C = point_on_at(l, Rat(1, 2));
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    if (points_equal(A, B) || points_equal(A, C) || points_equal(B, C)) return false;
    return incident(l, A) && incident(l, B) && incident(l, C);
}

bool i3_triangle_exists(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint A = point_on_at(l, Rat(-1, 2));
    FinitePoint B = point_on_at(l, Rat(1, 2));
    c.put("A", A);
    c.put("B", B);
    FinitePoint C = rand_point_off(c, "C", l);
    return !collinear(A, B, C);
}

bool p1_perpendicular_through_point(Ctx& c) {
    Line a = rand_line(c, "a");
    FinitePoint P = rand_point_on(c, "P", a);
    Line b = perp_at_point(a, P);
    c.put("b", b);
    if (!incident(b, P) || !is_perpendicular(a, b)) return false;
    for (int j = 0; j < 5; ++j) {
        Line g = line_through(P, rand_rim_avoiding(c, "Z", {&b.end1(), &b.end2()}));
        if (is_perpendicular(g, a)) return false;
    }
    FinitePoint Q = rand_point_off(c, "Q", a);
    Line b2 = perp_through_point(a, Q);
    c.put("b2", b2);
    if (!incident(b2, Q) || !is_perpendicular(a, b2)) return false;
    for (int j = 0; j < 5; ++j) {
        Line g = line_through(Q, rand_rim_avoiding(c, "W", {&b2.end1(), &b2.end2()}));
        if (is_perpendicular(g, a)) return false;
    }
    return true;
}

bool p2_perpendiculars_meet_once(Ctx& c) {
    Line a = rand_line(c, "a");
    FinitePoint P = rand_point_on(c, "P", a);
    Line b = perp_at_point(a, P);
    c.put("b", b);
    auto W = finite_meet(a, b);
    if (!W) return false;
    c.put("W", *W);
    return points_equal(*W, P);
}

bool m1_reflection_with_axis(Ctx& c) {
    Line l = rand_line(c, "l");
    Motion s = reflection(l);
    if (!rims_equal(motion_apply(s, l.end1()), l.end1())) return false;
    if (!rims_equal(motion_apply(s, l.end2()), l.end2())) return false;
    for (int j = 0; j < 3; ++j) {
        FinitePoint P = rand_point_on(c, "P", l);
        if (!points_equal(motion_apply(s, P), P)) return false;
    }
    Line d = rand_line(c, "d");
    Rat s1, s2, s3;
    distinct_positions(c, s1, s2, s3);
    FinitePoint A = point_on_at(d, s1);
    FinitePoint B = point_on_at(d, s2);
    FinitePoint C = point_on_at(d, s3);
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    Line d2 = motion_apply(s, d);
    c.put("d_image", d2);
    if (!incident(d2, motion_apply(s, A)) || !incident(d2, motion_apply(s, B)) ||
        !incident(d2, motion_apply(s, C)))
        return false;
    Line e = rand_line(c, "e");
    Line f = perp_at_point(e, rand_point_on(c, "Q", e));
    c.put("f", f);
    return is_perpendicular(motion_apply(s, e), motion_apply(s, f));
}

bool m2_reflection_involution(Ctx& c) {
    Line l = rand_line(c, "l");
    Motion s = reflection(l);
    if (!motion_is_identity(motion_compose(s, s))) return false;
    FinitePoint P = rand_point(c, "P");
    return points_equal(motion_apply(s, motion_apply(s, P)), P);
}

// Three concurrent axes: the triple reflection product is the reflection in
// the perpendicular through the vertex to the chord joining a rim of the
// first axis with its image under the other two reflections.
bool m3_concurrent_reflections(Ctx& c) {
    FinitePoint P = rand_point(c, "P");
    Rimpoint r1 = rand_rim(c, "r1");
    Line a = line_through(P, r1);
    Rimpoint r2 = rand_rim_avoiding(c, "r2", {&a.end1(), &a.end2()});
    Line b = line_through(P, r2);
    Rimpoint r3 = rand_rim_avoiding(c, "r3", {&a.end1(), &a.end2(), &b.end1(), &b.end2()});
    Line cl = line_through(P, r3);
    c.put("a", a);
    c.put("b", b);
    c.put("c", cl);
    Rimpoint L = a.end1();
    Rimpoint E = motion_apply(motion_compose(reflection(b), reflection(cl)), L);
    if (rims_equal(E, L)) return false;
    Line chord = line_through(L, E);
    c.put("chord", chord);
    Line o = incident(chord, P) ? perp_at_point(chord, P) : perp_through_point(chord, P);
    c.put("o", o);
    Motion triple = motion_compose(motion_compose(reflection(a), reflection(b)), reflection(cl));
    return motion_equal(triple, reflection(o));
}

bool m4_coperpendicular_reflections(Ctx& c) {
    Line m = rand_line(c, "m");
    Rat s1, s2, s3;
    distinct_positions(c, s1, s2, s3);
    FinitePoint A = point_on_at(m, s1);
    FinitePoint B = point_on_at(m, s2);
    FinitePoint C = point_on_at(m, s3);
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    Line a = perp_at_point(m, A);
    Line b = perp_at_point(m, B);
    Line cl = perp_at_point(m, C);
    c.put("a", a);
    c.put("b", b);
    c.put("c", cl);
    FinitePoint D = collinear_third(A, B, C);
    c.put("D", D);
    if (!incident(m, D)) return false;
    Line d = perp_at_point(m, D);
    c.put("d", d);
    Motion triple = motion_compose(motion_compose(reflection(a), reflection(b)), reflection(cl));
    return motion_equal(triple, reflection(d));
}

// A pair of lines sharing one rim has no finite common point and no common
// perpendicular; an ultraparallel pair is no witness because it has one.
bool nov_parallel_pair(Ctx& c) {
    Rimpoint X = rand_rim(c, "X");
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X});
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&X, &Y});
    Line l = line_through(X, Y);
    Line m = line_through(X, Z);
    c.put("l", l);
    c.put("m", m);
    if (classify_pair(l, m) != PairClass::Parallel) return false;
    if (finite_meet(l, m)) return false;
    try {
        common_perpendicular(l, m);
        return false;
    } catch (const error&) {
    }
    Line u = rand_line(c, "u");
    Line v = rand_line(c, "v");
    for (int attempt = 0; lines_equal(u, v) || classify_pair(u, v) != PairClass::Ultraparallel;
         ++attempt) {
        if (attempt >= 200) give_up("ultraparallel pair");
        c.rejections += 1;
        v = rand_line(c, "v");
    }
    Line n = common_perpendicular(u, v);
    c.put("n", n);
    return is_perpendicular(n, u) && is_perpendicular(n, v);
}

bool h_at_most_two_parallels(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = rand_point_off(c, "P", l);
    Line u = line_through(P, l.end1());
    Line v = line_through(P, l.end2());
    c.put("u", u);
    c.put("v", v);
    if (lines_equal(u, v)) return false;
    if (classify_pair(u, l) != PairClass::Parallel) return false;
    if (classify_pair(v, l) != PairClass::Parallel) return false;
    for (int j = 0; j < 30; ++j) {
        Rimpoint Z =
            rand_rim_avoiding(c, "Z", {&u.end1(), &u.end2(), &v.end1(), &v.end2()});
        Line g = line_through(P, Z);
        switch (classify_pair(g, l)) {
            case PairClass::Parallel:
                c.put("g", g);
                return false;
            case PairClass::Intersecting:
                if (!finite_meet(g, l)) return false;
                break;
            case PairClass::Ultraparallel: {
                Line n = common_perpendicular(g, l);
                if (!is_perpendicular(n, g) || !is_perpendicular(n, l)) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<CheckDef> metric_checks() {
    return {
        {"I1-unique-join", "exact", i1_unique_join},
        {"I2-three-points-on-line", "exact", i2_three_points_on_line},
        {"I3-triangle-exists", "exact", i3_triangle_exists},
        {"P1-perpendicular-through-point", "sampled", p1_perpendicular_through_point},
        {"P2-perpendiculars-meet-once", "exact", p2_perpendiculars_meet_once},
        {"M1-reflection-with-axis", "sampled", m1_reflection_with_axis},
        {"M2-reflection-involution", "exact", m2_reflection_involution},
        {"M3-concurrent-reflections", "exact", m3_concurrent_reflections},
        {"M4-coperpendicular-reflections", "exact", m4_coperpendicular_reflections},
        {"noVstar-parallel-pair", "exact", nov_parallel_pair},
        {"H-at-most-two-parallels", "sampled", h_at_most_two_parallels},
    };
}

}  // namespace klein::detail_verify
