#pragma once

#include "fairsplit/scalar.hpp"

#include <array>
#include <span>
#include <vector>

namespace fairsplit {

/// Model coordinates: u runs along the base (length y), v up the height (x).
struct Point {
    Scalar u;
    Scalar v;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
    Point p;
    Point q;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// The rectangle [0,y] x [0,x]; the bottom edge sits at v = 0.
class Rect {
public:
    Rect(Scalar y, Scalar x);

    const Scalar& y() const { return y_; }
    const Scalar& x() const { return x_; }
    Scalar area() const { return y_ * x_; }
    Point center() const;

    /// Counterclockwise from the bottom-left corner.
    std::array<Point, 4> corners() const;

    bool on_boundary(const Point& p) const;
    bool contains(const Point& p) const;

    /// Position of a boundary point along the counterclockwise perimeter,
    /// starting at (0,0). Throws GeometryError for points off the boundary.
    Scalar perimeter_position(const Point& p) const;

    friend bool operator==(const Rect&, const Rect&) = default;

private:
    Scalar y_;
    Scalar x_;
};

/// Twice the signed shoelace area; positive for counterclockwise rings.
Scalar twice_signed_area(std::span<const Point> ring);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

/// True when p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

/// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Simple polygon with counterclockwise vertex order.
///
/// Construction rejects fewer than three vertices, repeated consecutive
/// vertices, self-intersection and zero area. Clockwise input is reversed.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    /// Drops consecutive duplicates (including last == first) and then
    /// constructs. Used by constructions whose parameters may collapse an edge.
    static Polygon collapse(std::vector<Point> ring);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> vertices_;
};

Scalar shoelace_area(const Polygon& poly);

/// Area-weighted centroid.
Point centroid(const Polygon& poly);

/// A straight cut joining two boundary points of `rect` that do not share an edge.
class Chord {
public:
    Chord(const Rect& rect, Point p, Point q);

    const Point& p() const { return p_; }
    const Point& q() const { return q_; }
    Segment segment() const { return {p_, q_}; }

private:
    Point p_;
    Point q_;
};

struct ChordSplit {
    Polygon first;
    Polygon second;
};

/// Splits `rect` along `chord`. `first` is the piece reached first when
/// walking the line v = x/2 from the left edge; when the chord lies on that
/// line, `first` is the piece holding the bottom-left corner.
ChordSplit split_rect_by_chord(const Rect& rect, const Chord& chord);

enum class Containment { Inside, Boundary, Outside };

/// Exact crossing-number test with exact boundary detection.
Containment point_in_polygon(const Point& p, const Polygon& poly);

} // namespace fairsplit
