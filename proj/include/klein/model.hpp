#pragma once

#include <optional>
#include <variant>

#include "klein/scalar.hpp"

namespace klein {

// Disk model of the hyperbolic plane: finite points are interior points of
// the unit circle, lines are open chords named by their two rim ends, and
// every predicate is decided exactly.

struct unchecked_t {
    explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

class FinitePoint {
  public:
    FinitePoint(CReal x, CReal y);  // verifies x^2 + y^2 < 1
    FinitePoint(unchecked_t, CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {}

    const CReal& x() const { return x_; }
    const CReal& y() const { return y_; }

  private:
    CReal x_, y_;
};

class Rimpoint {
  public:
    Rimpoint(CReal x, CReal y);  // verifies x^2 + y^2 = 1
    Rimpoint(unchecked_t, CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {}

    const CReal& x() const { return x_; }
    const CReal& y() const { return y_; }

  private:
    CReal x_, y_;
};

bool points_equal(const FinitePoint& a, const FinitePoint& b);
bool rims_equal(const Rimpoint& a, const Rimpoint& b);

using AnyPoint = std::variant<FinitePoint, Rimpoint>;

// Rational parameter t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); the absent value
// stands for the parameter at infinity and maps to (-1, 0).
Rimpoint rimpoint_from_parameter(const std::optional<Rat>& t);

// A chord, stored as its two rim ends (in a fixed coordinate order) together
// with the homogeneous coefficients of the carrying Euclidean line.
class Line {
  public:
    Line(const Rimpoint& e1, const Rimpoint& e2);

    const Rimpoint& end1() const { return e1_; }
    const Rimpoint& end2() const { return e2_; }
    const CReal& a() const { return a_; }
    const CReal& b() const { return b_; }
    const CReal& c() const { return c_; }

  private:
    Rimpoint e1_, e2_;
    CReal a_, b_, c_;
};

bool lines_equal(const Line& l, const Line& m);

struct Ray {
    FinitePoint origin;
    Rimpoint end;
};

struct Empty {};
using Intersection = std::variant<Empty, FinitePoint, Rimpoint>;

enum class PairClass { Intersecting, Parallel, Ultraparallel };

Line line_through(const AnyPoint& A, const AnyPoint& B);
Line line_through(const FinitePoint& A, const FinitePoint& B);
Line line_through(const FinitePoint& A, const Rimpoint& B);
Line line_through(const Rimpoint& A, const Rimpoint& B);

// Second rim end of the chord through X and the interior point A.
Rimpoint other_rimpoint(const Rimpoint& X, const FinitePoint& A);

Intersection meet(const Line& l, const Line& m);

// AB // CD: the chord AB meets the chord CD in a finite point.
bool separation(const Rimpoint& A, const Rimpoint& B, const Rimpoint& C, const Rimpoint& D);

// Counterclockwise orientation of three distinct rimpoints.
bool cyclic_order(const Rimpoint& A, const Rimpoint& B, const Rimpoint& C);

// Strict betweenness of B on the segment AC; the three points must be
// collinear.
bool between(const FinitePoint& A, const FinitePoint& B, const FinitePoint& C);

bool incident(const Line& l, const FinitePoint& P);
bool incident(const Line& l, const Rimpoint& A);

// Both points off the line and on the same side.
bool same_side(const Line& l, const AnyPoint& X, const AnyPoint& Y);

PairClass classify_pair(const Line& l, const Line& m);

// The unique finite diagonal point of the quadrangle formed by the four rim
// ends of two non-parallel distinct lines: the meet itself for intersecting
// lines, and the crossing pairing of cross-joins for ultraparallel ones.
FinitePoint bowtie(const Line& l, const Line& m);

// Chord joining the ends of two rays with distinct carriers and ends.
Line common_parallel(const Ray& r, const Ray& s);

// Secant line with the given homogeneous coefficients.  Requires the line to
// cut the open disk.
Line line_from_coeffs(const CReal& a, const CReal& b, const CReal& c);

// Interior points of a line used as deterministic base points: the Euclidean
// chord midpoint, a second point toward end1, and a parametrised point at
// affine position s in (-1, 1) relative to the midpoint and end1.
FinitePoint canonical_point_on(const Line& l);
FinitePoint second_point_on(const Line& l);
FinitePoint point_on_at(const Line& l, const Rat& s);

}  // namespace klein
