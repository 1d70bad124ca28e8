#include "klein/transforms.hpp"

#include <array>
#include <utility>

namespace klein {

namespace {

// Fixed probe rimpoints used for motion equality, point transport and
// half-turn center recovery.
std::array<Rimpoint, 3> probe_rims() {
    return {Rimpoint(unchecked, CReal(1), CReal(0)), Rimpoint(unchecked, CReal(0), CReal(1)),
            Rimpoint(unchecked, CReal(-1), CReal(0))};
}

bool is_end(const Line& l, const Rimpoint& x) {
    return rims_equal(l.end1(), x) || rims_equal(l.end2(), x);
}

// Rimpoint action of the reflection in a line, per the synthetic recipe: an
// off-axis rimpoint A goes to A^O where O is the bowtie of the axis with the
// chord joining the images of A under a canonical axial map and its inverse.
Rimpoint rim_reflect(const Line& axis, const Rimpoint& a) {
    if (is_end(axis, a)) return a;
    FinitePoint p0 = canonical_point_on(axis);
    FinitePoint q0 = second_point_on(axis);
    Rimpoint fwd = other_rimpoint(other_rimpoint(a, p0), q0);
    Rimpoint bwd = other_rimpoint(other_rimpoint(a, q0), p0);
    FinitePoint o = bowtie(axis, Line(fwd, bwd));
    return other_rimpoint(a, o);
}

Rimpoint gen_apply(const Generator& g, const Rimpoint& x) {
    if (const auto* ht = std::get_if<HalfTurnGen>(&g)) return other_rimpoint(x, ht->center);
    return rim_reflect(std::get<ReflectGen>(g).axis, x);
}

void require(bool ok, errc kind, const char* msg) {
    if (!ok) throw error(kind, msg);
}

// An axial map must be orientation-preserving and fix both axis ends.
void validate_axial(const Motion& alpha, const Line& axis) {
    require(alpha.parity() == 0 && rims_equal(motion_apply(alpha, axis.end1()), axis.end1()) &&
                rims_equal(motion_apply(alpha, axis.end2()), axis.end2()),
            errc::precondition, "motion is not axial along the given line");
}

FinitePoint axial_decompose_inner(const Motion& alpha, const Line& axis, const FinitePoint& p) {
    Rimpoint x = probe_rims()[0];
    for (const Rimpoint& candidate : probe_rims()) {
        if (!is_end(axis, candidate)) {
            x = candidate;
            break;
        }
    }
    Rimpoint y = other_rimpoint(x, p);
    Rimpoint xa = motion_apply(alpha, x);
    // The chord from X^P to X^alpha crosses the axis in the sought point.
    return std::get<FinitePoint>(meet(Line(y, xa), axis));
}

// Midpoint of two distinct points already known to lie on ln.
FinitePoint midpoint_on(const Line& ln, const FinitePoint& p, const FinitePoint& q) {
    Line lp = perp_at_point(ln, p);
    Line lq = perp_at_point(ln, q);
    Rimpoint x = lp.end1(), xo = lp.end2();
    bool first_matches = same_side(ln, AnyPoint(x), AnyPoint(lq.end1()));
    Rimpoint y = first_matches ? lq.end1() : lq.end2();
    Rimpoint yo = first_matches ? lq.end2() : lq.end1();
    // The two crossing common parallels of the perpendiculars meet on pq.
    return std::get<FinitePoint>(meet(Line(x, yo), Line(xo, y)));
}

}  // namespace

int Motion::parity() const {
    int refs = 0;
    for (const Generator& g : word_)
        if (std::holds_alternative<ReflectGen>(g)) ++refs;
    return refs & 1;
}

Motion half_turn(const FinitePoint& center) { return Motion({HalfTurnGen{center}}); }

Motion reflection(const Line& axis) { return Motion({ReflectGen{axis}}); }

Motion motion_compose(const Motion& g, const Motion& h) {
    std::vector<Generator> word = g.word();
    word.insert(word.end(), h.word().begin(), h.word().end());
    return Motion(std::move(word));
}

Motion motion_inverse(const Motion& g) {
    std::vector<Generator> word(g.word().rbegin(), g.word().rend());
    return Motion(std::move(word));
}

Rimpoint motion_apply(const Motion& g, const Rimpoint& x) {
    Rimpoint cur = x;
    for (const Generator& gen : g.word()) cur = gen_apply(gen, cur);
    return cur;
}

Line motion_apply(const Motion& g, const Line& l) {
    return Line(motion_apply(g, l.end1()), motion_apply(g, l.end2()));
}

FinitePoint motion_apply(const Motion& g, const FinitePoint& x) {
    if (g.word().empty()) return x;
    // Transport two chords through x and intersect their images.
    auto probes = probe_rims();
    Line l1 = line_through(x, probes[0]);
    Line l2 = line_through(x, probes[1]);
    if (lines_equal(l1, l2)) l2 = line_through(x, probes[2]);
    return std::get<FinitePoint>(meet(motion_apply(g, l1), motion_apply(g, l2)));
}

AnyPoint motion_apply(const Motion& g, const AnyPoint& x) {
    return std::visit([&](const auto& p) -> AnyPoint { return motion_apply(g, p); }, x);
}

bool motion_equal(const Motion& g, const Motion& h) {
    if (g.parity() != h.parity()) return false;
    for (const Rimpoint& probe : probe_rims())
        if (!rims_equal(motion_apply(g, probe), motion_apply(h, probe))) return false;
    return true;
}

bool motion_is_identity(const Motion& g) { return motion_equal(g, Motion()); }

FinitePoint collinear_third(const FinitePoint& p, const FinitePoint& q, const FinitePoint& r) {
    if (points_equal(p, q)) return r;
    if (points_equal(q, r)) return p;
    if (points_equal(p, r)) return motion_apply(half_turn(p), q);
    CReal cross = (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x());
    require(cross.sign() == 0, errc::precondition, "collinear_third needs collinear points");
    Motion w({HalfTurnGen{p}, HalfTurnGen{q}, HalfTurnGen{r}});
    // The product is a half-turn; every chord joining a rimpoint to its image
    // passes through the center.
    auto probes = probe_rims();
    Line c0(probes[0], motion_apply(w, probes[0]));
    Line c1(probes[1], motion_apply(w, probes[1]));
    if (lines_equal(c0, c1)) c1 = Line(probes[2], motion_apply(w, probes[2]));
    return std::get<FinitePoint>(meet(c0, c1));
}

FinitePoint midpoint(const FinitePoint& p, const FinitePoint& q) {
    if (points_equal(p, q)) return p;
    return midpoint_on(line_through(p, q), p, q);
}

Motion axial(const FinitePoint& p, const FinitePoint& q) {
    require(!points_equal(p, q), errc::degenerate_input, "axial map needs two distinct points");
    return Motion({HalfTurnGen{p}, HalfTurnGen{q}});
}

FinitePoint axial_decompose(const Motion& alpha, const Line& axis, const FinitePoint& p) {
    validate_axial(alpha, axis);
    require(incident(axis, p), errc::precondition, "base point must lie on the axis");
    return axial_decompose_inner(alpha, axis, p);
}

Motion axial_through(const Line& axis, const Rimpoint& u, const Rimpoint& v) {
    require(!is_end(axis, u) && !is_end(axis, v), errc::precondition,
            "axial_through needs rimpoints off the axis");
    if (rims_equal(u, v)) return Motion();
    require(same_side(axis, AnyPoint(u), AnyPoint(v)), errc::precondition,
            "no axial map joins rimpoints on opposite sides of the axis");
    FinitePoint p0 = canonical_point_on(axis);
    Rimpoint w = other_rimpoint(u, p0);
    FinitePoint q = std::get<FinitePoint>(meet(Line(w, v), axis));
    return Motion({HalfTurnGen{p0}, HalfTurnGen{q}});
}

Motion axial_sqrt(const Motion& alpha, const Line& axis) {
    validate_axial(alpha, axis);
    FinitePoint p = canonical_point_on(axis);
    FinitePoint q = p;
    const auto& w = alpha.word();
    const HalfTurnGen* g0 = w.size() == 2 ? std::get_if<HalfTurnGen>(&w[0]) : nullptr;
    const HalfTurnGen* g1 = w.size() == 2 ? std::get_if<HalfTurnGen>(&w[1]) : nullptr;
    if (g0 && g1 && incident(axis, g0->center) && incident(axis, g1->center)) {
        p = g0->center;
        q = g1->center;
    } else {
        q = axial_decompose_inner(alpha, axis, p);
    }
    if (points_equal(p, q)) return Motion();
    return Motion({HalfTurnGen{p}, HalfTurnGen{midpoint_on(axis, p, q)}});
}

Motion half_transport(const Line& axis, const Rimpoint& x3, const Rimpoint& x4) {
    if (rims_equal(x3, x4)) return Motion();
    Line carrier(x3, x4);
    require(!lines_equal(carrier, axis) && classify_pair(axis, carrier) == PairClass::Ultraparallel,
            errc::precondition, "half transport needs a chord ultraparallel to the axis");
    return axial_sqrt(axial_through(axis, x4, x3), axis);
}

FinitePoint reflect_point(const Line& l, const FinitePoint& q) {
    return motion_apply(reflection(l), q);
}

Line perp_from_rimpoint(const Line& l, const Rimpoint& a) {
    require(!is_end(l, a), errc::precondition, "rimpoint lies on the line");
    return Line(a, rim_reflect(l, a));
}

FinitePoint a11_foot(const Line& l, const Rimpoint& x) {
    return std::get<FinitePoint>(meet(l, perp_from_rimpoint(l, x)));
}

bool is_perpendicular(const Line& l, const Line& m) {
    require(!lines_equal(l, m), errc::degenerate_input, "perpendicularity needs distinct lines");
    if (!std::holds_alternative<FinitePoint>(meet(l, m))) return false;
    return rims_equal(rim_reflect(l, m.end1()), m.end2());
}

Line perp_at_point(const Line& l, const FinitePoint& p) {
    require(incident(l, p), errc::precondition, "point must lie on the line");
    // Conjugate direction with respect to the circle, pinned through p.
    CReal a2 = l.b() + l.c() * p.y();
    CReal b2 = CReal(0) - (l.a() + l.c() * p.x());
    CReal c2 = CReal(0) - (a2 * p.x() + b2 * p.y());
    return line_from_coeffs(a2, b2, c2);
}

Line perp_through_point(const Line& l, const FinitePoint& p) {
    require(!incident(l, p), errc::precondition, "point lies on the line");
    Line image(other_rimpoint(l.end1(), p), other_rimpoint(l.end2(), p));
    return common_perpendicular(image, l);
}

Line common_perpendicular(const Line& l, const Line& m) {
    require(!lines_equal(l, m) && classify_pair(l, m) == PairClass::Ultraparallel,
            errc::precondition, "common perpendicular needs an ultraparallel pair");
    Rimpoint x1 = l.end1(), x2 = l.end2();
    bool straight = separation(x1, m.end2(), x2, m.end1());
    Rimpoint x3 = straight ? m.end1() : m.end2();
    Rimpoint x4 = straight ? m.end2() : m.end1();
    Motion g = half_transport(l, x3, x4);
    Motion h = half_transport(m, x1, x2);
    return Line(motion_apply(g, x4), motion_apply(h, x2));
}

Line bisector(const Line& l, const Line& m, EndPairing pairing) {
    require(!lines_equal(l, m), errc::degenerate_input, "bisector needs distinct lines");
    const Rimpoint& x = l.end1();
    const Rimpoint& y = l.end2();
    const Rimpoint& xp = pairing == EndPairing::Straight ? m.end1() : m.end2();
    const Rimpoint& yp = pairing == EndPairing::Straight ? m.end2() : m.end1();
    if (rims_equal(x, xp)) return perp_from_rimpoint(Line(y, yp), x);
    if (rims_equal(y, yp)) return perp_from_rimpoint(Line(x, xp), y);
    Line c1(x, xp);
    Line c2(y, yp);
    if (classify_pair(c1, c2) == PairClass::Ultraparallel) return common_perpendicular(c1, c2);
    throw error(errc::precondition, "no reflection realizes this end pairing");
}

GlideForm glide_normalize(const FinitePoint& a, const FinitePoint& e, const Line& d) {
    require(!points_equal(a, e), errc::precondition, "glide rewriting needs two distinct points");
    Line x = line_through(a, e);
    if (lines_equal(x, d)) return {a, perp_at_point(d, e)};
    switch (classify_pair(x, d)) {
        case PairClass::Intersecting: {
            FinitePoint y = std::get<FinitePoint>(meet(x, d));
            return {collinear_third(a, e, y), perp_at_point(d, y)};
        }
        case PairClass::Ultraparallel: {
            Line q = common_perpendicular(x, d);
            FinitePoint on_x = std::get<FinitePoint>(meet(q, x));
            FinitePoint on_d = std::get<FinitePoint>(meet(q, d));
            Line y = perp_at_point(x, collinear_third(a, e, on_x));
            return {on_d, motion_apply(half_turn(on_d), y)};
        }
        case PairClass::Parallel:
            break;
    }
    // Carrier and mirror share a rim end, which the product then fixes; the
    // product's axis joins that end to the midpoint of any point-image pair.
    Rimpoint w = std::get<Rimpoint>(meet(x, d));
    Motion g({HalfTurnGen{a}, HalfTurnGen{e}, ReflectGen{d}});
    FinitePoint m1 = midpoint(a, motion_apply(g, a));
    Line n = line_through(m1, w);
    Motion trans = motion_compose(g, reflection(n));
    FinitePoint p0 = canonical_point_on(n);
    FinitePoint q0 = axial_decompose(trans, n, p0);
    return {p0, perp_at_point(n, q0)};
}

}  // namespace klein
