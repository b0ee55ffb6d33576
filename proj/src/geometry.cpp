#include "fairsplit/geometry.hpp"

#include "fairsplit/errors.hpp"

#include <algorithm>
#include <utility>

namespace fairsplit {

namespace {

Scalar cross(const Point& a, const Point& b, const Point& c) {
    return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

bool within_box(const Point& p, const Point& a, const Point& b) {
    return min(a.u, b.u) <= p.u && p.u <= max(a.u, b.u) && min(a.v, b.v) <= p.v && p.v <= max(a.v, b.v);
}

std::string describe(const Point& p) { return "(" + p.u.str() + "," + p.v.str() + ")"; }

// Which closed edges of the rectangle a boundary point lies on (bottom, right, top, left).
std::array<bool, 4> edges_of(const Rect& r, const Point& p) {
    return {p.v.is_zero(), p.u == r.y(), p.v == r.x(), p.u.is_zero()};
}

} // namespace

Rect::Rect(Scalar y, Scalar x) : y_(std::move(y)), x_(std::move(x)) {
    if (y_.sign() <= 0 || x_.sign() <= 0)
        throw GeometryError("rectangle dimensions must be positive (got y=" + y_.str() + ", x=" + x_.str() + ")");
}

Point Rect::center() const { return {y_ / 2, x_ / 2}; }

std::array<Point, 4> Rect::corners() const {
    return {Point{0, 0}, Point{y_, 0}, Point{y_, x_}, Point{0, x_}};
}

bool Rect::contains(const Point& p) const {
    return p.u.sign() >= 0 && p.u <= y_ && p.v.sign() >= 0 && p.v <= x_;
}

bool Rect::on_boundary(const Point& p) const {
    if (!contains(p))
        return false;
    return p.u.is_zero() || p.u == y_ || p.v.is_zero() || p.v == x_;
}

Scalar Rect::perimeter_position(const Point& p) const {
    if (!on_boundary(p))
        throw GeometryError("point " + describe(p) + " is not on the rectangle boundary");
    if (p.v.is_zero())
        return p.u;
    if (p.u == y_)
        return y_ + p.v;
    if (p.v == x_)
        return y_ + x_ + (y_ - p.u);
    return y_ + y_ + x_ + (x_ - p.v);
}

Scalar twice_signed_area(std::span<const Point> ring) {
    Scalar sum;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        sum += a.u * b.v - b.u * a.v;
    }
    return sum;
}

int orientation(const Point& a, const Point& b, const Point& c) { return cross(a, b, c).sign(); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return orientation(a, b, p) == 0 && within_box(p, a, b);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && within_box(c, a, b)) || (o2 == 0 && within_box(d, a, b)) ||
           (o3 == 0 && within_box(a, c, d)) || (o4 == 0 && within_box(b, c, d));
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3)
        throw GeometryError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i] == vertices_[(i + 1) % n])
            throw GeometryError("polygon has repeated consecutive vertex " + describe(vertices_[i]));
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point& c = vertices_[j];
            const Point& d = vertices_[(j + 1) % n];
            if (j == i + 1) {
                // Edges (a,b) and (b,d) share b; they must not fold back onto each other.
                if (orientation(a, b, d) == 0 && (on_segment(d, a, b) || on_segment(a, b, d)))
                    throw GeometryError("polygon edges overlap at " + describe(b));
            } else if (i == 0 && j == n - 1) {
                // Edges (c,a) and (a,b) share a.
                if (orientation(c, a, b) == 0 && (on_segment(c, a, b) || on_segment(b, c, a)))
                    throw GeometryError("polygon edges overlap at " + describe(a));
            } else if (segments_intersect(a, b, c, d)) {
                throw GeometryError("polygon is not simple");
            }
        }
    }

    const Scalar twice = twice_signed_area(vertices_);
    if (twice.is_zero())
        throw GeometryError("polygon has zero area");
    if (twice.sign() < 0)
        std::reverse(vertices_.begin(), vertices_.end());
}

Polygon Polygon::collapse(std::vector<Point> ring) {
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    while (ring.size() > 1 && ring.front() == ring.back())
        ring.pop_back();
    return Polygon(std::move(ring));
}

Scalar shoelace_area(const Polygon& poly) { return twice_signed_area(poly.vertices()) / 2; }

Point centroid(const Polygon& poly) {
    const auto& vs = poly.vertices();
    Scalar cu;
    Scalar cv;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        const Scalar w = a.u * b.v - b.u * a.v;
        cu += (a.u + b.u) * w;
        cv += (a.v + b.v) * w;
    }
    const Scalar six_area = twice_signed_area(vs) * 3;
    return {cu / six_area, cv / six_area};
}

Chord::Chord(const Rect& rect, Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == q_)
        throw GeometryError("chord endpoints coincide at " + describe(p_));
    if (!rect.on_boundary(p_))
        throw GeometryError("chord endpoint " + describe(p_) + " is not on the rectangle boundary");
    if (!rect.on_boundary(q_))
        throw GeometryError("chord endpoint " + describe(q_) + " is not on the rectangle boundary");
    const auto ep = edges_of(rect, p_);
    const auto eq = edges_of(rect, q_);
    for (std::size_t k = 0; k < ep.size(); ++k) {
        if (ep[k] && eq[k])
            throw GeometryError("chord " + describe(p_) + "-" + describe(q_) + " runs along a single edge");
    }
}

ChordSplit split_rect_by_chord(const Rect& rect, const Chord& chord) {
    const Scalar perimeter = (rect.x() + rect.y()) * 2;
    const auto ccw_distance = [&](const Scalar& from, const Scalar& to) {
        Scalar d = to - from;
        if (d.sign() < 0)
            d += perimeter;
        return d;
    };

    const Scalar pos_p = rect.perimeter_position(chord.p());
    const Scalar pos_q = rect.perimeter_position(chord.q());

    // Walk the boundary counterclockwise from `start` to `end`, then close along the chord.
    const auto piece = [&](const Point& start, const Scalar& pos_start, const Point& end, const Scalar& pos_end) {
        const Scalar span = ccw_distance(pos_start, pos_end);
        std::vector<std::pair<Scalar, Point>> between;
        for (const Point& c : rect.corners()) {
            Scalar d = ccw_distance(pos_start, rect.perimeter_position(c));
            if (d.sign() > 0 && d < span)
                between.emplace_back(std::move(d), c);
        }
        std::sort(between.begin(), between.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        std::vector<Point> ring{start};
        for (auto& [d, c] : between)
            ring.push_back(std::move(c));
        ring.push_back(end);
        return Polygon(std::move(ring));
    };

    Polygon a = piece(chord.p(), pos_p, chord.q(), pos_q);
    Polygon b = piece(chord.q(), pos_q, chord.p(), pos_p);

    const Point& p = chord.p();
    const Point& q = chord.q();
    const Scalar mid = rect.x() / 2;
    Point probe{rect.y() / 2, mid};
    if (p.v == q.v) {
        if (p.v == mid) {
            if (point_in_polygon(Point{0, 0}, a) == Containment::Outside)
                std::swap(a, b);
            return {std::move(a), std::move(b)};
        }
    } else if (min(p.v, q.v) <= mid && mid <= max(p.v, q.v)) {
        const Scalar crossing = p.u + (mid - p.v) * (q.u - p.u) / (q.v - p.v);
        if (crossing.sign() > 0)
            probe = Point{crossing / 2, mid};
    }
    if (point_in_polygon(probe, a) != Containment::Inside)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

Containment point_in_polygon(const Point& p, const Polygon& poly) {
    const auto& vs = poly.vertices();
    bool inside = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        const int o = orientation(a, b, p);
        if (o == 0 && within_box(p, a, b))
            return Containment::Boundary;
        const bool a_above = a.v > p.v;
        const bool b_above = b.v > p.v;
        if (a_above != b_above) {
            // Edge straddles the horizontal ray; it crosses to the right of p
            // exactly when p is on the inner side of the upward-directed edge.
            const bool upward = b.v > a.v;
            if ((upward && o > 0) || (!upward && o < 0))
                inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

} // namespace fairsplit
