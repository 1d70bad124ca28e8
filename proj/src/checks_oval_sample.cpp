#include "verify_internal.hpp"

namespace klein::detail_verify {

namespace {

// Size-2 case: a unique reflection fixes two prescribed rims.
bool pair_reflection(Ctx& c) {
    Rimpoint X = rand_rim(c, "X");
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X});
    Line l = line_through(X, Y);
    c.put("l", l);
    Motion s = reflection(l);
    if (!rims_equal(motion_apply(s, X), X) || !rims_equal(motion_apply(s, Y), Y)) return false;
    FinitePoint P = rand_point(c, "P");
    Motion h = half_turn(P);
    if (rims_equal(motion_apply(h, X), X)) return false;
    Line m = rand_line(c, "m");
    for (int attempt = 0; lines_equal(m, l); ++attempt) {
        if (attempt >= 200) give_up("distinct line");
        c.rejections += 1;
        m = rand_line(c, "m");
    }
    Motion s2 = reflection(m);
    return !rims_equal(motion_apply(s2, X), X) || !rims_equal(motion_apply(s2, Y), Y);
}

// Size-3 case: the reflection fixing X and swapping Y with Z has the
// perpendicular from X to YZ as its axis.
bool triple_reflection(Ctx& c) {
    Rimpoint X = rand_rim(c, "X");
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X});
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&X, &Y});
    Line yz = line_through(Y, Z);
    c.put("YZ", yz);
    Line l = perp_from_rimpoint(yz, X);
    c.put("l", l);
    if (!rims_equal(l.end1(), X) && !rims_equal(l.end2(), X)) return false;
    if (!is_perpendicular(l, yz)) return false;
    Motion s = reflection(l);
    if (!rims_equal(motion_apply(s, X), X)) return false;
    return rims_equal(motion_apply(s, Y), Z) && rims_equal(motion_apply(s, Z), Y);
}

// Size-4 case: crossing chords admit the half-turn about their meet and no
// reflection; ultraparallel chords admit the reflection in the common
// perpendicular and no half-turn.
bool quadruple_involution(Ctx& c) {
    Rimpoint X = rand_rim(c, "X");
    Rimpoint Y = rand_rim_avoiding(c, "Y", {&X});
    Rimpoint Z = rand_rim_avoiding(c, "Z", {&X, &Y});
    Rimpoint W = rand_rim_avoiding(c, "W", {&X, &Y, &Z});
    Line xy = line_through(X, Y);
    Line zw = line_through(Z, W);
    c.put("XY", xy);
    c.put("ZW", zw);
    switch (classify_pair(xy, zw)) {
        case PairClass::Intersecting: {
            auto M = finite_meet(xy, zw);
            if (!M) return false;
            c.put("M", *M);
            Motion g = half_turn(*M);
            if (!rims_equal(motion_apply(g, X), Y) || !rims_equal(motion_apply(g, Z), W))
                return false;
            try {
                common_perpendicular(xy, zw);
                return false;
            } catch (const error&) {
            }
            return true;
        }
        case PairClass::Ultraparallel: {
            if (finite_meet(xy, zw)) return false;
            Line n = common_perpendicular(xy, zw);
            c.put("n", n);
            Motion s = reflection(n);
            return rims_equal(motion_apply(s, X), Y) && rims_equal(motion_apply(s, Z), W);
        }
        case PairClass::Parallel:
            return false;  // impossible for disjoint end pairs
    }
    return false;
}

// Pascalian secants: three involutions incident with a chord compose to
// another one incident with it, reconstructible from one transported point.
bool secant_pascalian(Ctx& c) {
    Line chord = rand_line(c, "chord");
    auto draw_involution = [&](const char* tag) {
        FinitePoint F = rand_point_on(c, std::string(tag) + "_base", chord);
        if (c.rng.coin()) return half_turn(F);
        Line axis = perp_at_point(chord, F);
        c.put(std::string(tag) + "_axis", axis);
        return reflection(axis);
    };
    Motion I = draw_involution("I");
    Motion J = draw_involution("J");
    Motion K = draw_involution("K");
    Motion g = motion_compose(motion_compose(I, J), K);
    if (!rims_equal(motion_apply(g, chord.end1()), chord.end2())) return false;
    FinitePoint T = canonical_point_on(chord);
    FinitePoint T2 = motion_apply(g, T);
    c.put("T", T);
    c.put("T_image", T2);
    FinitePoint M = points_equal(T, T2) ? T : midpoint(T, T2);
    c.put("M", M);
    Motion candidate = g.parity() == 0 ? half_turn(M) : reflection(perp_at_point(chord, M));
    return motion_equal(g, candidate);
}

// Conjugation carries reflections to reflections and half-turns to
// half-turns, moving axis and center along.
bool regularity_conjugation(Ctx& c) {
    Line l = rand_line(c, "l");
    FinitePoint P = rand_point(c, "P");
    Motion h = motion_compose(reflection(rand_line(c, "h_axis")), half_turn(rand_point(c, "h_center")));
    Motion conj_refl =
        motion_compose(motion_compose(motion_inverse(h), reflection(l)), h);
    if (!motion_equal(conj_refl, reflection(motion_apply(h, l)))) return false;
    Motion conj_half = motion_compose(motion_compose(motion_inverse(h), half_turn(P)), h);
    return motion_equal(conj_half, half_turn(motion_apply(h, P)));
}

}  // namespace

std::vector<CheckDef> oval_sample_checks() {
    return {
        {"oval-pair-reflection", "exact", pair_reflection},
        {"oval-triple-reflection", "exact", triple_reflection},
        {"oval-quadruple-involution", "exact", quadruple_involution},
        {"oval-secant-pascalian", "exact", secant_pascalian},
        {"oval-regularity-conjugation", "exact", regularity_conjugation},
    };
}

}  // namespace klein::detail_verify
