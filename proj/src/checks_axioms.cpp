#include "verify_internal.hpp"

namespace klein::detail_verify {

namespace {

bool a1_unique_join(Ctx& c) {
    FinitePoint A = rand_point(c, "A");
    FinitePoint B = rand_point_avoiding(c, "B", {&A});
    Line ab = line_through(A, B);
    c.put("AB", ab);
    if (!incident(ab, A) || !incident(ab, B)) return false;
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&ab.end1(), &ab.end2()});
    Line az = line_through(A, Z);
    c.put("AZ", az);
    if (incident(az, B)) return false;

    Rimpoint X = rand_rim(c, "X");
    Line ax = line_through(A, X);
    c.put("AX", ax);
    if (!incident(ax, A) || !incident(ax, X)) return false;
    Rimpoint W = rand_rim_avoiding(c, "W", {&ax.end1(), &ax.end2()});
    Line aw = line_through(A, W);
    c.put("AW", aw);
    if (incident(aw, X)) return false;

    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X});
    Line xy = line_through(X, Y);
    c.put("XY", xy);
    return incident(xy, X) && incident(xy, Y);
}

bool a2_point_on_line(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = canonical_point_on(l);
    c.put("P", P);
    return incident(l, P);
}

bool a3_collinearity_witnesses(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint A = point_on_at(l, Rat(-1, 2));
    FinitePoint B = point_on_at(l, Rat(0));
    FinitePoint C = point_on_at(l, Rat(1, 2));
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    if (!collinear(A, B, C)) return false;
    FinitePoint D = rand_point(c, "D");
    for (int attempt = 0; incident(l, D); ++attempt) {
        if (attempt >= 200) give_up("point off the line");
        c.rejections += 1;
        D = rand_point(c, "D");
    }
    return !collinear(A, B, D);
}

// B sits between A and C when every line through B meets one line of each
// finitely intersecting pair drawn through A and C.
bool a4_betweenness(Ctx& c) {
    Line d = rand_line(c, "d");
    Rat s1 = rand_unit_rat(c.rng);
    Rat s2 = rand_unit_rat(c.rng);
    Rat s3 = rand_unit_rat(c.rng);
    for (int attempt = 0; s1 == s2 || s1 == s3 || s2 == s3; ++attempt) {
        if (attempt >= 200) give_up("three distinct positions");
        c.rejections += 1;
        s1 = rand_unit_rat(c.rng);
        s2 = rand_unit_rat(c.rng);
        s3 = rand_unit_rat(c.rng);
    }
    if (s1 > s2) std::swap(s1, s2);
    if (s2 > s3) std::swap(s2, s3);
    if (s1 > s2) std::swap(s1, s2);
    FinitePoint A = point_on_at(d, s1);
    FinitePoint B = point_on_at(d, s2);
    FinitePoint C = point_on_at(d, s3);
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    if (!between(A, B, C)) return false;

    for (int k = 0; k < 4; ++k) {
        std::string idx = std::to_string(k);
        Line u = line_through(A, rand_rim(c, "U" + idx));
        Line v = line_through(C, rand_rim(c, "V" + idx));
        for (int attempt = 0; lines_equal(u, v) || !finite_meet(u, v); ++attempt) {
            if (attempt >= 200) give_up("intersecting pair through the outer points");
            c.rejections += 1;
            u = line_through(A, rand_rim(c, "U" + idx));
            v = line_through(C, rand_rim(c, "V" + idx));
        }
        c.put("u" + idx, u);
        c.put("v" + idx, v);
        for (int j = 0; j < 5; ++j) {
            Rimpoint Z = rand_rim_avoiding(
                c, "Z", {&u.end1(), &u.end2(), &v.end1(), &v.end2(), &d.end1(), &d.end2()});
            Line g = line_through(B, Z);
            if (!finite_meet(g, u) && !finite_meet(g, v)) {
                c.put("g", g);
                return false;
            }
        }
    }
    return true;
}

// The joins of P to the two ends of l are the extreme lines through P
// missing l: every line that meets l finitely meets one of them finitely.
bool a5_limiting_parallels(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = rand_point(c, "P");
    for (int attempt = 0; incident(l, P); ++attempt) {
        if (attempt >= 200) give_up("point off the line");
        c.rejections += 1;
        P = rand_point(c, "P");
    }
    Line u = line_through(P, l.end1());
    Line v = line_through(P, l.end2());
    c.put("u", u);
    c.put("v", v);
    if (lines_equal(u, v)) return false;
    if (finite_meet(u, l) || finite_meet(v, l)) return false;
    for (int j = 0; j < 20; ++j) {
        FinitePoint G = rand_point_on(c, "G", l);
        Rimpoint Z = rand_rim_avoiding(c, "Z", {&l.end1(), &l.end2()});
        Line g = line_through(G, Z);
        if (!finite_meet(g, u) && !finite_meet(g, v)) {
            c.put("g", g);
            return false;
        }
    }
    return true;
}

bool a6_common_parallel_of_rays(Ctx& c) {
    Rimpoint X = rand_rim(c, "X");
    Rimpoint X2 = rand_rim_avoiding(c, "X2", {&X});
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X, &X2});
    Rimpoint Y2 = rand_rim_avoiding(c, "Y2", {&X, &Y});
    Line cr = line_through(X, X2);
    Line cs = line_through(Y, Y2);
    c.put("r_carrier", cr);
    c.put("s_carrier", cs);
    Ray r{point_on_at(cr, rand_unit_rat(c.rng)), X};
    Ray s{point_on_at(cs, rand_unit_rat(c.rng)), Y};
    c.put("R", r.origin);
    c.put("S", s.origin);
    Line n = common_parallel(r, s);
    c.put("n", n);
    bool ends_ok = (rims_equal(n.end1(), X) && rims_equal(n.end2(), Y)) ||
                   (rims_equal(n.end1(), Y) && rims_equal(n.end2(), X));
    return ends_ok && classify_pair(n, cr) == PairClass::Parallel &&
           classify_pair(n, cs) == PairClass::Parallel;
}

bool a7_hexagon_diagonals(Ctx& c) {
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 200) give_up("hexagon with three finite diagonal points");
        Rimpoint A = rand_rim(c, "A");
        Rimpoint B = rand_rim_avoiding(c, "B", {&A});
        Rimpoint C = rand_rim_avoiding(c, "C", {&A, &B});
        Rimpoint D = rand_rim_avoiding(c, "D", {&A, &B, &C});
        Rimpoint E = rand_rim_avoiding(c, "E", {&A, &B, &C, &D});
        Rimpoint F = rand_rim_avoiding(c, "F", {&A, &B, &C, &D, &E});
        auto P = finite_meet(line_through(A, B), line_through(D, E));
        auto Q = finite_meet(line_through(B, C), line_through(E, F));
        auto R = finite_meet(line_through(C, D), line_through(F, A));
        if (!P || !Q || !R) {
            c.rejections += 1;
            continue;
        }
        c.put("P", *P);
        c.put("Q", *Q);
        c.put("R", *R);
        return collinear(*P, *Q, *R);
    }
}

bool a10_midpoint_construction(Ctx& c) {
    FinitePoint P = rand_point(c, "P");
    FinitePoint Q = rand_point_avoiding(c, "Q", {&P});
    Line pq = line_through(P, Q);
    c.put("PQ", pq);
    Line l = perp_at_point(pq, P);
    Line m = perp_at_point(pq, Q);
    c.put("lP", l);
    c.put("mQ", m);
    auto [u, v] = c.ops.cross_joins(l, m);
    c.put("u", u);
    c.put("v", v);
    if (classify_pair(u, l) != PairClass::Parallel || classify_pair(u, m) != PairClass::Parallel ||
        classify_pair(v, l) != PairClass::Parallel || classify_pair(v, m) != PairClass::Parallel)
        return false;
    auto M = finite_meet(u, v);
    if (!M) return false;
    c.put("M", *M);
    if (!incident(pq, *M) || !between(P, *M, Q)) return false;
    if (!points_equal(motion_apply(half_turn(*M), P), Q)) return false;
    return points_equal(*M, midpoint(P, Q));
}

// The crossing common parallels of l and the chord X^{SR}X^{RS} must meet on
// the chord XR, for every point S on l.
bool foot_property_holds(Ctx& c, const Line& l, const Rimpoint& X, const Line& xr,
                         const FinitePoint& R, const FinitePoint& S) {
    Rimpoint e1 = c.ops.halfturn_rim(R, c.ops.halfturn_rim(S, X));
    Rimpoint e2 = c.ops.halfturn_rim(S, c.ops.halfturn_rim(R, X));
    if (rims_equal(e1, e2)) return false;
    Line ms(e1, e2);
    auto [u, v] = c.ops.cross_joins(l, ms);
    auto W = finite_meet(u, v);
    return W && incident(xr, *W);
}

bool a11_perpendicular_foot(Ctx& c) {
    Line l = rand_line(c, "l");
    Rimpoint X = rand_rim_avoiding(c, "X", {&l.end1(), &l.end2()});
    FinitePoint R = a11_foot(l, X);
    c.put("R", R);
    if (!incident(l, R)) return false;
    Line xr = line_through(R, X);
    c.put("XR", xr);
    if (!rims_equal(c.ops.reflect_rim(xr, l.end1()), l.end2())) return false;
    if (!rims_equal(c.ops.reflect_rim(xr, l.end2()), l.end1())) return false;
    for (int j = 0; j < 10; ++j) {
        FinitePoint S = rand_point_on_avoiding(c, "S", l, {&R});
        if (!foot_property_holds(c, l, X, xr, R, S)) return false;
    }
    for (int k = 0; k < 3; ++k) {
        FinitePoint R2 = rand_point_on_avoiding(c, "R2", l, {&R});
        Line xr2 = line_through(R2, X);
        bool refuted = false;
        for (int j = 0; j < 10 && !refuted; ++j) {
            FinitePoint S = rand_point_on_avoiding(c, "S2", l, {&R2});
            refuted = !foot_property_holds(c, l, X, xr2, R2, S);
        }
        if (!refuted) return false;
    }
    return true;
}

}  // namespace

std::vector<CheckDef> axiom_checks() {
    return {
        {"A1-unique-join", "exact", a1_unique_join},
        {"A2-point-on-line", "exact", a2_point_on_line},
        {"A3-collinearity-witnesses", "exact", a3_collinearity_witnesses},
        {"A4-betweenness", "sampled", a4_betweenness},
        {"A5-limiting-parallels", "sampled", a5_limiting_parallels},
        {"A6-common-parallel-of-rays", "exact", a6_common_parallel_of_rays},
        {"A7-hexagon-diagonals", "exact", a7_hexagon_diagonals},
        {"A10-midpoint-construction", "exact", a10_midpoint_construction},
        {"A11-perpendicular-foot", "sampled", a11_perpendicular_foot},
    };
}

}  // namespace klein::detail_verify
