#include <array>

#include "verify_internal.hpp"

namespace klein::detail_verify {

namespace {

std::array<Rimpoint, 4> probe_rims() {
    return {rimpoint_from_parameter(Rat(0)), rimpoint_from_parameter(Rat(1)),
            rimpoint_from_parameter(Rat(-1)), rimpoint_from_parameter(std::nullopt)};
}

// The product of half-turns about three collinear points is an involution;
// about a non-collinear triple it is not.
bool halfturn_triple_involution(Ctx& c) {
    Line d = rand_line(c, "d");
    Rat s1, s2, s3;
    distinct_positions(c, s1, s2, s3);
    FinitePoint P = point_on_at(d, s1);
    FinitePoint Q = point_on_at(d, s2);
    FinitePoint R = point_on_at(d, s3);
    c.put("P", P);
    c.put("Q", Q);
    c.put("R", R);
    auto word = [&](const Rimpoint& x, const FinitePoint& third) {
        return c.ops.halfturn_rim(third, c.ops.halfturn_rim(Q, c.ops.halfturn_rim(P, x)));
    };
    for (const Rimpoint& X : probe_rims()) {
        if (!rims_equal(word(word(X, R), R), X)) return false;
    }
    FinitePoint R2 = rand_point_off(c, "R2", d);
    bool moved = false;
    for (const Rimpoint& X : probe_rims()) {
        if (!rims_equal(word(word(X, R2), R2), X)) moved = true;
    }
    return moved;
}

bool collinear_third_on_line(Ctx& c) {
    Line d = rand_line(c, "d");
    Rat s1, s2, s3;
    distinct_positions(c, s1, s2, s3);
    FinitePoint P = point_on_at(d, s1);
    FinitePoint Q = point_on_at(d, s2);
    FinitePoint R = point_on_at(d, s3);
    c.put("P", P);
    c.put("Q", Q);
    c.put("R", R);
    FinitePoint S = collinear_third(P, Q, R);
    c.put("S", S);
    if (!incident(d, S)) return false;
    Motion w = motion_compose(motion_compose(half_turn(P), half_turn(Q)), half_turn(R));
    if (!motion_equal(w, half_turn(S))) return false;
    return motion_is_identity(motion_compose(w, w));
}

bool halfturn_automorphism(Ctx& c) {
    FinitePoint P = rand_point(c, "P");
    Motion g = half_turn(P);
    Line d = rand_line(c, "d");
    Rat s1, s2, s3;
    distinct_positions(c, s1, s2, s3);
    FinitePoint A = point_on_at(d, s1);
    FinitePoint B = point_on_at(d, s2);
    FinitePoint C = point_on_at(d, s3);
    c.put("A", A);
    c.put("B", B);
    c.put("C", C);
    Line d2 = motion_apply(g, d);
    c.put("d_image", d2);
    if (!incident(d2, motion_apply(g, A)) || !incident(d2, motion_apply(g, B)) ||
        !incident(d2, motion_apply(g, C)))
        return false;
    Rimpoint W = rand_rim(c, "W");
    Rimpoint X = rand_rim_avoiding(c, "X", {&W});
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&W, &X});
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&W, &X, &Y});
    Rimpoint Wg = motion_apply(g, W);
    Rimpoint Xg = motion_apply(g, X);
    Rimpoint Yg = motion_apply(g, Y);
    Rimpoint Zg = motion_apply(g, Z);
    if (separation(W, X, Y, Z) != separation(Wg, Xg, Yg, Zg)) return false;
    return cyclic_order(W, X, Y) == cyclic_order(Wg, Xg, Yg);
}

// Conjugating a half-turn moves its center: PQP is the half-turn about Q^P,
// and tau^{-1} P tau is the half-turn about P^tau.
bool halfturn_conjugation(Ctx& c) {
    FinitePoint P = rand_point(c, "P");
    FinitePoint Q = rand_point_avoiding(c, "Q", {&P});
    Motion pqp = motion_compose(motion_compose(half_turn(P), half_turn(Q)), half_turn(P));
    FinitePoint qp = motion_apply(half_turn(P), Q);
    c.put("Q_P", qp);
    if (!motion_equal(pqp, half_turn(qp))) return false;
    Line l = rand_line(c, "l");
    Motion tau = motion_compose(reflection(l), half_turn(Q));
    Motion conj = motion_compose(motion_compose(motion_inverse(tau), half_turn(P)), tau);
    FinitePoint pt = motion_apply(tau, P);
    c.put("P_tau", pt);
    return motion_equal(conj, half_turn(pt));
}

bool separation_axioms(Ctx& c) {
    Rimpoint A = rand_rim(c, "A");
    Rimpoint B = rand_rim_avoiding(c, "B", {&A});
    Rimpoint C = rand_rim_avoiding(c, "C", {&A, &B});
    Rimpoint D = rand_rim_avoiding(c, "D", {&A, &B, &C});
    Rimpoint E = rand_rim_avoiding(c, "E", {&A, &B, &C, &D});
    const Rimpoint* r[5] = {&A, &B, &C, &D, &E};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int m = 0; m < 5; ++m) {
                    if (i == j || i == k || i == m || j == k || j == m || k == m) continue;
                    bool ab_cd = separation(*r[i], *r[j], *r[k], *r[m]);
                    if (ab_cd != separation(*r[i], *r[j], *r[m], *r[k])) return false;
                    bool ac_bd = separation(*r[i], *r[k], *r[j], *r[m]);
                    bool ad_bc = separation(*r[i], *r[m], *r[j], *r[k]);
                    if ((ab_cd ? 1 : 0) + (ac_bd ? 1 : 0) + (ad_bc ? 1 : 0) != 1) return false;
                }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int m = 0; m < 5; ++m)
                    for (int x = 0; x < 5; ++x) {
                        if (i == j || i == k || i == m || i == x || j == k || j == m || j == x ||
                            k == m || k == x || m == x)
                            continue;
                        if (separation(*r[i], *r[j], *r[k], *r[m]) &&
                            separation(*r[i], *r[k], *r[j], *r[x]) &&
                            !separation(*r[i], *r[j], *r[m], *r[x]))
                            return false;
                    }
    return true;
}

bool separation_pasch(Ctx& c) {
    Rimpoint M = rand_rim(c, "M");
    Rimpoint N = rand_rim_avoiding(c, "N", {&M});
    Rimpoint A = rand_rim_avoiding(c, "A", {&M, &N});
    Rimpoint B = rand_rim_avoiding(c, "B", {&M, &N, &A});
    Rimpoint C = rand_rim_avoiding(c, "C", {&M, &N, &A, &B});
    int cut = (separation(M, N, A, B) ? 1 : 0) + (separation(M, N, B, C) ? 1 : 0) +
              (separation(M, N, C, A) ? 1 : 0);
    return cut == 0 || cut == 2;
}

// For rims A, D on different sides of PQ, the chord from A to D^{PQ} crosses
// the chord from A^{PQ} to D.
bool halfturn_transport_separation(Ctx& c) {
    FinitePoint P = rand_point(c, "P");
    FinitePoint Q = rand_point_avoiding(c, "Q", {&P});
    Line l = line_through(P, Q);
    c.put("PQ", l);
    Motion g = motion_compose(half_turn(P), half_turn(Q));
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 200) give_up("rims on different sides with distinct transports");
        Rimpoint A = rand_rim_avoiding(c, "A", {&l.end1(), &l.end2()});
        Rimpoint D = rand_rim_avoiding(c, "D", {&l.end1(), &l.end2(), &A});
        if (same_side(l, AnyPoint(A), AnyPoint(D))) {
            c.rejections += 1;
            continue;
        }
        Rimpoint Ag = motion_apply(g, A);
        Rimpoint Dg = motion_apply(g, D);
        if (rims_equal(Ag, D) || rims_equal(Dg, A)) {
            c.rejections += 1;
            continue;
        }
        c.put("A_PQ", Ag);
        c.put("D_PQ", Dg);
        return separation(A, Dg, Ag, D);
    }
}

// Two perpendicular reflections compose to the half-turn about their meet; a
// non-perpendicular pair through the same point does not.
bool reflection_product_halfturn(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = rand_point_on(c, "P", l);
    Line m = perp_at_point(l, P);
    c.put("m", m);
    Rimpoint X1 = rand_rim(c, "X1");
    Rimpoint X2 = rand_rim_avoiding(c, "X2", {&X1});
    Rimpoint X3 = rand_rim_avoiding(c, "X3", {&X1, &X2});
    for (const Rimpoint* X : {&X1, &X2, &X3}) {
        if (!rims_equal(c.ops.reflect_rim(m, c.ops.reflect_rim(l, *X)),
                        c.ops.halfturn_rim(P, *X)))
            return false;
    }
    Line m2 = line_through(P, rand_rim_avoiding(c, "Z", {&m.end1(), &m.end2()}));
    c.put("m2", m2);
    for (const Rimpoint* X : {&X1, &X2, &X3}) {
        if (!rims_equal(c.ops.reflect_rim(m2, c.ops.reflect_rim(l, *X)),
                        c.ops.halfturn_rim(P, *X)))
            return true;
    }
    return false;
}

// The diagonal point of an ultraparallel pair lies on the common
// perpendicular, midway between the two feet.
bool bowtie_common_perpendicular(Ctx& c) {
    Line l = rand_line(c, "l");
    Line m = rand_line(c, "m");
    for (int attempt = 0;
         lines_equal(l, m) || classify_pair(l, m) != PairClass::Ultraparallel; ++attempt) {
        if (attempt >= 200) give_up("ultraparallel pair");
        c.rejections += 1;
        m = rand_line(c, "m");
    }
    Line n = common_perpendicular(l, m);
    c.put("n", n);
    if (!is_perpendicular(n, l) || !is_perpendicular(n, m)) return false;
    FinitePoint B = bowtie(l, m);
    c.put("B", B);
    if (!incident(n, B)) return false;
    auto f1 = finite_meet(n, l);
    auto f2 = finite_meet(n, m);
    if (!f1 || !f2) return false;
    c.put("F1", *f1);
    c.put("F2", *f2);
    return points_equal(B, midpoint(*f1, *f2));
}

// Hexagon with two finite diagonal points: the third pair of opposite sides
// either meets on the diagonal line or shares a perpendicular with it.
bool hexagon_two_diagonal_points(Ctx& c) {
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 200) give_up("hexagon with two finite diagonal points");
        Rimpoint A = rand_rim(c, "A");
        Rimpoint B = rand_rim_avoiding(c, "B", {&A});
        Rimpoint C = rand_rim_avoiding(c, "C", {&A, &B});
        Rimpoint D = rand_rim_avoiding(c, "D", {&A, &B, &C});
        Rimpoint E = rand_rim_avoiding(c, "E", {&A, &B, &C, &D});
        Rimpoint F = rand_rim_avoiding(c, "F", {&A, &B, &C, &D, &E});
        auto P = finite_meet(line_through(A, B), line_through(D, E));
        auto Q = finite_meet(line_through(B, C), line_through(E, F));
        if (!P || !Q || points_equal(*P, *Q)) {
            c.rejections += 1;
            continue;
        }
        c.put("P", *P);
        c.put("Q", *Q);
        Line pq = line_through(*P, *Q);
        c.put("PQ", pq);
        Line cd = line_through(C, D);
        Line fa = line_through(F, A);
        if (auto W = finite_meet(cd, fa)) {
            c.put("W", *W);
            return incident(pq, *W);
        }
        Line o = common_perpendicular(cd, fa);
        c.put("o", o);
        return is_perpendicular(o, pq);
    }
}

// The chords joining rims to their images under half_turn(P)reflection(l)
// share a perpendicular exactly when P lies on l.
bool glide_chords_no_common_perpendicular(Ctx& c) {
    Line l = rand_line(c, "l");
    auto chords = [&](const Motion& mo, const char* tag) -> std::array<Line, 3> {
        std::optional<Line> out[3];
        int filled = 0;
        for (int attempt = 0; filled < 3; ++attempt) {
            if (attempt >= 200) give_up("three moved rims with distinct chords");
            Rimpoint x = rand_rim(c, std::string(tag) + std::to_string(filled));
            Rimpoint xg = motion_apply(mo, x);
            if (rims_equal(x, xg)) {
                c.rejections += 1;
                continue;
            }
            Line ch(x, xg);
            bool dup = false;
            for (int i = 0; i < filled; ++i)
                if (lines_equal(ch, *out[i])) dup = true;
            if (dup) {
                c.rejections += 1;
                continue;
            }
            out[filled] = ch;
            c.put(std::string(tag) + std::to_string(filled) + "_chord", ch);
            filled += 1;
        }
        return {*out[0], *out[1], *out[2]};
    };
    FinitePoint P = rand_point_off(c, "P", l);
    auto off = chords(motion_compose(half_turn(P), reflection(l)), "X");
    if (have_common_perpendicular(off[0], off[1], off[2])) return false;
    FinitePoint O = rand_point_on(c, "O", l);
    auto on = chords(motion_compose(half_turn(O), reflection(l)), "Y");
    return have_common_perpendicular(on[0], on[1], on[2]);
}

bool reflection_fixed_lines(Ctx& c) {
    Line l = rand_line(c, "l");
    Motion s = reflection(l);
    if (!lines_equal(motion_apply(s, l), l)) return false;
    FinitePoint P = rand_point_on(c, "P", l);
    Line m = perp_at_point(l, P);
    c.put("m", m);
    if (!lines_equal(motion_apply(s, m), m)) return false;
    Line g = rand_line(c, "g");
    for (int attempt = 0; lines_equal(g, l) || is_perpendicular(g, l); ++attempt) {
        if (attempt >= 200) give_up("line neither equal nor perpendicular");
        c.rejections += 1;
        g = rand_line(c, "g");
    }
    return !lines_equal(motion_apply(s, g), g);
}

// half_turn(P)reflection(l) is an involution exactly when P lies on l.
bool incidence_commuting_reflection(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = rand_point_on(c, "P", l);
    Motion w = motion_compose(half_turn(P), reflection(l));
    if (!motion_is_identity(motion_compose(w, w))) return false;
    FinitePoint Q = rand_point_off(c, "Q", l);
    Motion w2 = motion_compose(half_turn(Q), reflection(l));
    return !motion_is_identity(motion_compose(w2, w2));
}

bool two_reflections_fix_at_most_two(Ctx& c) {
    Line l = rand_line(c, "l");
    Line m = rand_line(c, "m");
    for (int attempt = 0; lines_equal(l, m); ++attempt) {
        if (attempt >= 200) give_up("distinct lines");
        c.rejections += 1;
        m = rand_line(c, "m");
    }
    Motion g = motion_compose(reflection(l), reflection(m));
    std::vector<Rimpoint> fixed;
    auto consider = [&](const Rimpoint& x) {
        if (!rims_equal(motion_apply(g, x), x)) return;
        for (const Rimpoint& f : fixed)
            if (rims_equal(f, x)) return;
        fixed.push_back(x);
    };
    consider(l.end1());
    consider(l.end2());
    consider(m.end1());
    consider(m.end2());
    if (classify_pair(l, m) == PairClass::Ultraparallel) {
        Line n = common_perpendicular(l, m);
        consider(n.end1());
        consider(n.end2());
    }
    for (int j = 0; j < 6; ++j) consider(rand_rim(c, "probe"));
    return fixed.size() <= 2;
}

// Each admissible end pairing yields a mirror n with l^{sigma_n} = m and
// sigma_l sigma_n = sigma_n sigma_m; intersecting pairs admit two, other
// pairs one.
bool bisector_equation(Ctx& c) {
    Line l = rand_line(c, "l");
    Line m = rand_line(c, "m");
    for (int attempt = 0; lines_equal(l, m); ++attempt) {
        if (attempt >= 200) give_up("distinct lines");
        c.rejections += 1;
        m = rand_line(c, "m");
    }
    int count = 0;
    for (EndPairing pairing : {EndPairing::Straight, EndPairing::Crossed}) {
        Line n = l;
        try {
            n = bisector(l, m, pairing);
        } catch (const error&) {
            continue;
        }
        c.put(pairing == EndPairing::Straight ? "n_straight" : "n_crossed", n);
        if (!lines_equal(motion_apply(reflection(n), l), m)) return false;
        Motion lhs = motion_compose(reflection(l), reflection(n));
        Motion rhs = motion_compose(reflection(n), reflection(m));
        if (!motion_equal(lhs, rhs)) return false;
        count += 1;
    }
    return count == (classify_pair(l, m) == PairClass::Intersecting ? 2 : 1);
}

bool pappus_on_chords(Ctx& c) {
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 200) give_up("Pappus configuration with three finite meets");
        Line a = rand_line(c, "a");
        Line b = rand_line(c, "b");
        if (lines_equal(a, b)) {
            c.rejections += 1;
            continue;
        }
        Rat s1, s2, s3, t1, t2, t3;
        distinct_positions(c, s1, s2, s3);
        distinct_positions(c, t1, t2, t3);
        FinitePoint A1 = point_on_at(a, s1);
        FinitePoint A2 = point_on_at(a, s2);
        FinitePoint A3 = point_on_at(a, s3);
        FinitePoint B1 = point_on_at(b, t1);
        FinitePoint B2 = point_on_at(b, t2);
        FinitePoint B3 = point_on_at(b, t3);
        bool clash = false;
        for (const FinitePoint* A : {&A1, &A2, &A3})
            for (const FinitePoint* B : {&B1, &B2, &B3})
                if (points_equal(*A, *B)) clash = true;
        if (clash) {
            c.rejections += 1;
            continue;
        }
        c.put("A1", A1);
        c.put("A2", A2);
        c.put("A3", A3);
        c.put("B1", B1);
        c.put("B2", B2);
        c.put("B3", B3);
        auto P1 = finite_meet(line_through(A1, B2), line_through(A2, B1));
        auto P2 = finite_meet(line_through(A1, B3), line_through(A3, B1));
        auto P3 = finite_meet(line_through(A2, B3), line_through(A3, B2));
        if (!P1 || !P2 || !P3) {
            c.rejections += 1;
            continue;
        }
        c.put("P1", *P1);
        c.put("P2", *P2);
        c.put("P3", *P3);
        return collinear(*P1, *P2, *P3);
    }
}

bool desargues_on_chords(Ctx& c) {
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 200) give_up("Desargues configuration with three finite meets");
        FinitePoint O = rand_point(c, "O");
        Rimpoint r1 = rand_rim(c, "r1");
        Line a = line_through(O, r1);
        Rimpoint r2 = rand_rim_avoiding(c, "r2", {&a.end1(), &a.end2()});
        Line b = line_through(O, r2);
        Rimpoint r3 = rand_rim_avoiding(c, "r3", {&a.end1(), &a.end2(), &b.end1(), &b.end2()});
        Line cl = line_through(O, r3);
        c.put("a", a);
        c.put("b", b);
        c.put("c", cl);
        FinitePoint A1 = rand_point_on_avoiding(c, "A1", a, {&O});
        FinitePoint A2 = rand_point_on_avoiding(c, "A2", a, {&O, &A1});
        FinitePoint B1 = rand_point_on_avoiding(c, "B1", b, {&O});
        FinitePoint B2 = rand_point_on_avoiding(c, "B2", b, {&O, &B1});
        FinitePoint C1 = rand_point_on_avoiding(c, "C1", cl, {&O});
        FinitePoint C2 = rand_point_on_avoiding(c, "C2", cl, {&O, &C1});
        auto P1 = finite_meet(line_through(A1, B1), line_through(A2, B2));
        auto P2 = finite_meet(line_through(A1, C1), line_through(A2, C2));
        auto P3 = finite_meet(line_through(B1, C1), line_through(B2, C2));
        if (!P1 || !P2 || !P3) {
            c.rejections += 1;
            continue;
        }
        c.put("P1", *P1);
        c.put("P2", *P2);
        c.put("P3", *P3);
        return collinear(*P1, *P2, *P3);
    }
}

}  // namespace

std::vector<CheckDef> theorem_checks() {
    return {
        {"halfturn-triple-involution", "exact", halfturn_triple_involution},
        {"collinear-third-on-line", "exact", collinear_third_on_line},
        {"halfturn-automorphism", "exact", halfturn_automorphism},
        {"halfturn-conjugation", "exact", halfturn_conjugation},
        {"separation-axioms", "exact", separation_axioms},
        {"separation-pasch", "exact", separation_pasch},
        {"halfturn-transport-separation", "exact", halfturn_transport_separation},
        {"reflection-product-halfturn", "exact", reflection_product_halfturn},
        {"bowtie-common-perpendicular", "exact", bowtie_common_perpendicular},
        {"hexagon-two-diagonal-points", "exact", hexagon_two_diagonal_points},
        {"glide-chords-no-common-perpendicular", "exact", glide_chords_no_common_perpendicular},
        {"reflection-fixed-lines", "exact", reflection_fixed_lines},
        {"incidence-commuting-reflection", "exact", incidence_commuting_reflection},
        {"two-reflections-fix-at-most-two", "sampled", two_reflections_fix_at_most_two},
        {"bisector-equation", "exact", bisector_equation},
        {"pappus-on-chords", "exact", pappus_on_chords},
        {"desargues-on-chords", "exact", desargues_on_chords},
    };
}

}  // namespace klein::detail_verify
