#include "klein/model.hpp"

#include <utility>

namespace klein {

namespace {

CReal norm2(const CReal& x, const CReal& y) { return x * x + y * y; }

// Exact lexicographic comparison used only to pick a deterministic end order.
bool coord_less(const CReal& ax, const CReal& ay, const CReal& bx, const CReal& by) {
    int sx = (ax - bx).sign();
    if (sx != 0) return sx < 0;
    return (ay - by).sign() < 0;
}

CReal line_value(const Line& l, const CReal& x, const CReal& y) {
    return l.a() * x + l.b() * y + l.c();
}

}  // namespace

FinitePoint::FinitePoint(CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {
    if ((norm2(x_, y_) - CReal(1)).sign() >= 0)
        throw error(errc::construction, "finite point must lie strictly inside the unit circle");
}

Rimpoint::Rimpoint(CReal x, CReal y) : x_(std::move(x)), y_(std::move(y)) {
    if ((norm2(x_, y_) - CReal(1)).sign() != 0)
        throw error(errc::construction, "rimpoint must lie exactly on the unit circle");
}

bool points_equal(const FinitePoint& a, const FinitePoint& b) {
    return (a.x() - b.x()).sign() == 0 && (a.y() - b.y()).sign() == 0;
}

bool rims_equal(const Rimpoint& a, const Rimpoint& b) {
    return (a.x() - b.x()).sign() == 0 && (a.y() - b.y()).sign() == 0;
}

Rimpoint rimpoint_from_parameter(const std::optional<Rat>& t) {
    if (!t.has_value()) return Rimpoint(unchecked, CReal(-1), CReal(0));
    CReal tt{*t};
    CReal den = CReal(1) + tt * tt;
    return Rimpoint(unchecked, (CReal(1) - tt * tt) / den, (CReal(2) * tt) / den);
}

Line::Line(const Rimpoint& e1, const Rimpoint& e2) : e1_(e1), e2_(e2) {
    if (rims_equal(e1, e2))
        throw error(errc::degenerate_input, "a line needs two distinct rim ends");
    if (coord_less(e2_.x(), e2_.y(), e1_.x(), e1_.y())) std::swap(e1_, e2_);
    a_ = e1_.y() - e2_.y();
    b_ = e2_.x() - e1_.x();
    c_ = e1_.x() * e2_.y() - e2_.x() * e1_.y();
}

bool lines_equal(const Line& l, const Line& m) {
    return rims_equal(l.end1(), m.end1()) && rims_equal(l.end2(), m.end2());
}

Line line_through(const Rimpoint& A, const Rimpoint& B) { return Line(A, B); }

Line line_through(const FinitePoint& A, const Rimpoint& B) {
    return Line(B, other_rimpoint(B, A));
}

Line line_through(const FinitePoint& A, const FinitePoint& B) {
    if (points_equal(A, B))
        throw error(errc::degenerate_input, "no unique line through coincident points");
    CReal a = A.y() - B.y();
    CReal b = B.x() - A.x();
    CReal c = A.x() * B.y() - B.x() * A.y();
    return line_from_coeffs(a, b, c);
}

Line line_through(const AnyPoint& A, const AnyPoint& B) {
    return std::visit(
        [](const auto& p, const auto& q) -> Line {
            using P = std::decay_t<decltype(p)>;
            using Q = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<P, Rimpoint> && std::is_same_v<Q, Rimpoint>)
                return line_through(p, q);
            else if constexpr (std::is_same_v<P, Rimpoint>)
                return line_through(q, p);
            else if constexpr (std::is_same_v<Q, Rimpoint>)
                return line_through(p, q);
            else
                return line_through(p, q);
        },
        A, B);
}

Rimpoint other_rimpoint(const Rimpoint& X, const FinitePoint& A) {
    CReal dx = A.x() - X.x();
    CReal dy = A.y() - X.y();
    CReal t = (CReal(0) - CReal(2) * (X.x() * dx + X.y() * dy)) / (dx * dx + dy * dy);
    return Rimpoint(unchecked, X.x() + t * dx, X.y() + t * dy);
}

Intersection meet(const Line& l, const Line& m) {
    if (lines_equal(l, m))
        throw error(errc::degenerate_input, "meet of a line with itself");
    // A shared end is the only way two distinct chords can touch the rim.
    for (const Rimpoint* le : {&l.end1(), &l.end2()})
        for (const Rimpoint* me : {&m.end1(), &m.end2()})
            if (rims_equal(*le, *me)) return Intersection(*le);
    CReal det = l.a() * m.b() - m.a() * l.b();
    if (det.sign() == 0) return Intersection(Empty{});
    CReal x = (l.b() * m.c() - m.b() * l.c()) / det;
    CReal y = (m.a() * l.c() - l.a() * m.c()) / det;
    if ((norm2(x, y) - CReal(1)).sign() < 0)
        return Intersection(FinitePoint(unchecked, std::move(x), std::move(y)));
    return Intersection(Empty{});
}

bool separation(const Rimpoint& A, const Rimpoint& B, const Rimpoint& C, const Rimpoint& D) {
    const Rimpoint* pts[4] = {&A, &B, &C, &D};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (rims_equal(*pts[i], *pts[j]))
                throw error(errc::precondition, "separation needs four distinct rimpoints");
    return std::holds_alternative<FinitePoint>(meet(Line(A, B), Line(C, D)));
}

bool cyclic_order(const Rimpoint& A, const Rimpoint& B, const Rimpoint& C) {
    if (rims_equal(A, B) || rims_equal(B, C) || rims_equal(A, C))
        throw error(errc::precondition, "cyclic order needs three distinct rimpoints");
    CReal det = (B.x() - A.x()) * (C.y() - A.y()) - (B.y() - A.y()) * (C.x() - A.x());
    return det.sign() > 0;
}

bool between(const FinitePoint& A, const FinitePoint& B, const FinitePoint& C) {
    if (points_equal(A, C))
        throw error(errc::degenerate_input, "betweenness needs distinct outer points");
    CReal cross = (B.x() - A.x()) * (C.y() - A.y()) - (B.y() - A.y()) * (C.x() - A.x());
    if (cross.sign() != 0)
        throw error(errc::precondition, "betweenness needs collinear points");
    if (points_equal(B, A) || points_equal(B, C)) return false;
    CReal d1 = (B.x() - A.x()) * (C.x() - A.x()) + (B.y() - A.y()) * (C.y() - A.y());
    CReal d2 = (C.x() - B.x()) * (C.x() - A.x()) + (C.y() - B.y()) * (C.y() - A.y());
    return d1.sign() > 0 && d2.sign() > 0;
}

bool incident(const Line& l, const FinitePoint& P) {
    return line_value(l, P.x(), P.y()).sign() == 0;
}

bool incident(const Line& l, const Rimpoint& A) {
    return line_value(l, A.x(), A.y()).sign() == 0;
}

bool same_side(const Line& l, const AnyPoint& X, const AnyPoint& Y) {
    auto value_of = [&l](const AnyPoint& p) {
        return std::visit([&l](const auto& q) { return line_value(l, q.x(), q.y()); }, p);
    };
    int sx = value_of(X).sign();
    int sy = value_of(Y).sign();
    if (sx == 0 || sy == 0)
        throw error(errc::precondition, "same_side needs points off the line");
    return sx == sy;
}

PairClass classify_pair(const Line& l, const Line& m) {
    if (lines_equal(l, m))
        throw error(errc::precondition, "classify_pair needs distinct lines");
    Intersection i = meet(l, m);
    if (std::holds_alternative<Rimpoint>(i)) return PairClass::Parallel;
    if (std::holds_alternative<FinitePoint>(i)) return PairClass::Intersecting;
    return PairClass::Ultraparallel;
}

FinitePoint bowtie(const Line& l, const Line& m) {
    PairClass pc;
    try {
        pc = classify_pair(l, m);
    } catch (const error&) {
        throw error(errc::precondition, "bowtie needs two distinct non-parallel lines");
    }
    if (pc == PairClass::Parallel)
        throw error(errc::precondition, "bowtie needs two distinct non-parallel lines");
    if (pc == PairClass::Intersecting)
        return std::get<FinitePoint>(meet(l, m));
    // Ultraparallel: exactly one pairing of cross-joins crosses inside.
    Intersection first = meet(Line(l.end1(), m.end1()), Line(l.end2(), m.end2()));
    if (std::holds_alternative<FinitePoint>(first)) return std::get<FinitePoint>(first);
    Intersection second = meet(Line(l.end1(), m.end2()), Line(l.end2(), m.end1()));
    if (std::holds_alternative<FinitePoint>(second)) return std::get<FinitePoint>(second);
    throw error(errc::precondition, "no crossing pairing of cross-joins");
}

Line common_parallel(const Ray& r, const Ray& s) {
    if (rims_equal(r.end, s.end))
        throw error(errc::degenerate_input, "rays with a shared end have no common parallel");
    Line cr = line_through(r.origin, r.end);
    Line cs = line_through(s.origin, s.end);
    if (lines_equal(cr, cs))
        throw error(errc::precondition, "collinear rays have no common parallel");
    return Line(r.end, s.end);
}

Line line_from_coeffs(const CReal& a, const CReal& b, const CReal& c) {
    CReal s = a * a + b * b;
    if (s.sign() <= 0) throw error(errc::construction, "degenerate line coefficients");
    CReal disc = s - c * c;
    if (disc.sign() <= 0)
        throw error(errc::precondition, "line does not cut the open disk");
    CReal px = (CReal(0) - a * c) / s;
    CReal py = (CReal(0) - b * c) / s;
    CReal r = sqrt(disc) / s;
    Rimpoint e1(unchecked, px - b * r, py + a * r);
    Rimpoint e2(unchecked, px + b * r, py - a * r);
    return Line(e1, e2);
}

FinitePoint canonical_point_on(const Line& l) {
    CReal half = CReal::from_fraction(1, 2);
    return FinitePoint(unchecked, (l.end1().x() + l.end2().x()) * half,
                       (l.end1().y() + l.end2().y()) * half);
}

FinitePoint second_point_on(const Line& l) {
    CReal q = CReal::from_fraction(1, 4);
    CReal t = CReal::from_fraction(3, 4);
    return FinitePoint(unchecked, l.end1().x() * t + l.end2().x() * q,
                       l.end1().y() * t + l.end2().y() * q);
}

FinitePoint point_on_at(const Line& l, const Rat& s) {
    if (!(s > Rat(-1) && s < Rat(1)))
        throw error(errc::precondition, "chord parameter must lie in (-1, 1)");
    FinitePoint m = canonical_point_on(l);
    CReal ss{s};
    return FinitePoint(unchecked, m.x() + ss * (l.end1().x() - m.x()),
                       m.y() + ss * (l.end1().y() - m.y()));
}

}  // namespace klein
