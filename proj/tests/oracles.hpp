#pragma once

// Test-only oracles.  Each one reaches a value the implementation also
// produces, but along an independent computational route, so agreement is
// meaningful evidence.

#include <optional>
#include <utility>

#include "klein/model.hpp"
#include "klein/scalar.hpp"

namespace oracle {

using klein::CReal;
using klein::FinitePoint;
using klein::Line;
using klein::Rat;
using klein::Rimpoint;

// Circle parameter u with rimpoint = ((1-u^2)/(1+u^2), 2u/(1+u^2)); the
// missing value is the parameter at infinity, i.e. the point (-1, 0).
inline std::optional<Rat> rim_parameter(const Rimpoint& p) {
    CReal xp1 = p.x() + CReal(1);
    if (xp1.sign() == 0) return std::nullopt;
    CReal u = p.y() / xp1;
    return u.rational();  // exact when the rimpoint came from a rational parameter
}

// Counterclockwise test straight from the parameters: u = tan(theta/2) is
// increasing in the angle, with infinity at the angle cut.
inline bool ccw_by_parameter(const std::optional<Rat>& a, const std::optional<Rat>& b,
                             const std::optional<Rat>& c) {
    // Map the cut point to a symbolic minimum by rotating it to the front.
    auto less = [](const std::optional<Rat>& p, const std::optional<Rat>& q) {
        if (!p.has_value()) return q.has_value();
        if (!q.has_value()) return false;
        return *p < *q;
    };
    return (less(a, b) && less(b, c)) || (less(b, c) && less(c, a)) ||
           (less(c, a) && less(a, b));
}

// Chord ends recovered by eliminating y instead of walking from the foot of
// the perpendicular: a*x + b*y + c = 0 against x^2 + y^2 = 1.
inline std::pair<Rimpoint, Rimpoint> chord_ends_by_elimination(const CReal& a, const CReal& b,
                                                               const CReal& c) {
    CReal s = a * a + b * b;
    CReal disc = s - c * c;
    CReal root = sqrt(disc);
    if (b.sign() != 0) {
        CReal x1 = ((CReal(0) - a * c) + b * root) / s;
        CReal x2 = ((CReal(0) - a * c) - b * root) / s;
        CReal y1 = (CReal(0) - (a * x1 + c)) / b;
        CReal y2 = (CReal(0) - (a * x2 + c)) / b;
        return {Rimpoint(x1, y1), Rimpoint(x2, y2)};
    }
    CReal y1 = ((CReal(0) - b * c) + a * root) / s;
    CReal y2 = ((CReal(0) - b * c) - a * root) / s;
    CReal x1 = (CReal(0) - (b * y1 + c)) / a;
    CReal x2 = (CReal(0) - (b * y2 + c)) / a;
    return {Rimpoint(x1, y1), Rimpoint(x2, y2)};
}

// Reflection of a rimpoint across a chord, computed in the quadratic-form
// representation: embed (x, y) as (x, y, 1), reflect along the vector
// (a, b, -c) under the form diag(1, 1, -1), come back by dehomogenising.
inline Rimpoint mirror_by_form(const Line& l, const Rimpoint& p) {
    CReal vx = l.a(), vy = l.b(), vz = CReal(0) - l.c();
    CReal ux = p.x(), uy = p.y(), uz = CReal(1);
    CReal uv = ux * vx + uy * vy - uz * vz;
    CReal vv = vx * vx + vy * vy - vz * vz;
    CReal k = (CReal(2) * uv) / vv;
    CReal rx = ux - k * vx;
    CReal ry = uy - k * vy;
    CReal rz = uz - k * vz;
    return Rimpoint(rx / rz, ry / rz);
}

// Conjugacy of two secant lines with respect to the unit circle, stated on
// homogeneous line coefficients.  Perpendicularity must match this.
inline bool conjugate_lines(const Line& l, const Line& m) {
    CReal form = l.a() * m.a() + l.b() * m.b() - l.c() * m.c();
    return form.sign() == 0;
}

// Hyperbolic midpoint in closed form, from the unit-hyperboloid embedding.
inline FinitePoint midpoint_closed_form(const FinitePoint& P, const FinitePoint& Q) {
    CReal wp = sqrt(CReal(1) - (P.x() * P.x() + P.y() * P.y()));
    CReal wq = sqrt(CReal(1) - (Q.x() * Q.x() + Q.y() * Q.y()));
    CReal den = wp + wq;
    return FinitePoint((P.x() * wq + Q.x() * wp) / den, (P.y() * wq + Q.y() * wp) / den);
}

// tanh-arithmetic on a diameter through the origin: points are identified by
// their signed coordinate t with artanh(t) additive along the line.
inline Rat tanh_add(const Rat& a, const Rat& b) {
    Rat n = a + b;
    Rat d = Rat(1) + a * b;
    Rat r = n / d;
    r.canonicalize();
    return r;
}

inline Rat tanh_double(const Rat& a) { return tanh_add(a, a); }

// Image of coordinate u under the half-turn at coordinate a on a diameter.
inline Rat diameter_half_turn(const Rat& a, const Rat& u) {
    return tanh_add(tanh_double(a), -u);
}

using Param = std::optional<Rat>;  // circle parameter, nullopt at infinity

// Boundary action of the half-turn about (a, 0) on circle parameters:
// u -> -(1-a) / ((1+a) u), an involution swapping the x-axis ends.
inline Param halfturn_on_params(const Rat& a, const Param& u) {
    Rat c = (Rat(1) - a) / (Rat(1) + a);
    c.canonicalize();
    if (!u.has_value()) return Rat(0);
    if (*u == 0) return std::nullopt;
    Rat r = -c / *u;
    r.canonicalize();
    return r;
}

// Boundary action of the axial map [(0,0), (a,0)] on circle parameters:
// the linear contraction u -> u (1-a)/(1+a) toward the end (1, 0).
inline Param axial_on_params(const Rat& a, const Param& u) {
    if (!u.has_value()) return std::nullopt;
    Rat r = *u * (Rat(1) - a) / (Rat(1) + a);
    r.canonicalize();
    return r;
}

}  // namespace oracle
