#pragma once

#include <variant>
#include <vector>

#include "klein/model.hpp"

namespace klein {

// Motions are words in two kinds of involutory generators, applied left to
// right: X^{PQ} means first the half-turn about P, then the one about Q.

struct HalfTurnGen {
    FinitePoint center;
};

struct ReflectGen {
    Line axis;
};

using Generator = std::variant<HalfTurnGen, ReflectGen>;

class Motion {
  public:
    Motion() = default;  // identity
    explicit Motion(std::vector<Generator> word) : word_(std::move(word)) {}

    const std::vector<Generator>& word() const { return word_; }
    int parity() const;  // number of reflection generators mod 2

  private:
    std::vector<Generator> word_;
};

Motion half_turn(const FinitePoint& center);
Motion reflection(const Line& axis);

Motion motion_compose(const Motion& g, const Motion& h);
Motion motion_inverse(const Motion& g);

Rimpoint motion_apply(const Motion& g, const Rimpoint& x);
FinitePoint motion_apply(const Motion& g, const FinitePoint& x);
AnyPoint motion_apply(const Motion& g, const AnyPoint& x);
Line motion_apply(const Motion& g, const Line& l);

// Exact equality of the induced transformations: equal parity and agreement
// on three fixed probe rimpoints.  Sound because no nonidentity motion fixes
// three distinct rimpoints.
bool motion_equal(const Motion& g, const Motion& h);
bool motion_is_identity(const Motion& g);

// The unique point S with half_turn(P)half_turn(Q)half_turn(R) = half_turn(S)
// for collinear P, Q, R.
FinitePoint collinear_third(const FinitePoint& p, const FinitePoint& q, const FinitePoint& r);

// The unique M with P^M = Q, found by intersecting the two crossing common
// parallels of the perpendiculars at P and Q.
FinitePoint midpoint(const FinitePoint& p, const FinitePoint& q);

// Order-preserving axial map along line PQ, as the word [P, Q].
Motion axial(const FinitePoint& p, const FinitePoint& q);

// Given an axial map alpha along the axis and a base point P on it, the
// unique Q on the axis with alpha = axial(P, Q).  Returns P for the identity.
FinitePoint axial_decompose(const Motion& alpha, const Line& axis, const FinitePoint& p);

// The unique axial map with the given axis taking rimpoint u to rimpoint v;
// u and v must lie strictly on the same side of the axis.
Motion axial_through(const Line& axis, const Rimpoint& u, const Rimpoint& v);

// The unique axial square root with the same axis.
Motion axial_sqrt(const Motion& alpha, const Line& axis);

// The unique axial g with the given axis such that x4^{g^2} = x3.  The line
// x3x4 must be ultraparallel to the axis (x3 = x4 gives the identity).
Motion half_transport(const Line& axis, const Rimpoint& x3, const Rimpoint& x4);

FinitePoint reflect_point(const Line& l, const FinitePoint& q);

// Perpendicular to l having the rimpoint a as one of its ends.
Line perp_from_rimpoint(const Line& l, const Rimpoint& a);

// Finite meet of l with perp_from_rimpoint(l, x).
FinitePoint a11_foot(const Line& l, const Rimpoint& x);

// True iff the lines meet in a finite point and reflection in either one
// swaps the ends of the other.
bool is_perpendicular(const Line& l, const Line& m);

// Perpendicular to l through an incident point.
Line perp_at_point(const Line& l, const FinitePoint& p);

// Perpendicular to l through a non-incident point.
Line perp_through_point(const Line& l, const FinitePoint& p);

// The unique common perpendicular of an ultraparallel pair.
Line common_perpendicular(const Line& l, const Line& m);

// Which end of m each end of l is matched with, in the canonical end order.
enum class EndPairing { Straight, Crossed };

// Mirror line n with reflect(l) = m realizing the given end pairing.
// Pairings realized only by a half-turn (crossing joins) are rejected.
Line bisector(const Line& l, const Line& m, EndPairing pairing);

struct GlideForm {
    FinitePoint point;
    Line mirror;
};

// Rewrites half_turn(a)half_turn(e)reflection(d) as a point-reflection
// product X sigma_y.
GlideForm glide_normalize(const FinitePoint& a, const FinitePoint& e, const Line& d);

}  // namespace klein
