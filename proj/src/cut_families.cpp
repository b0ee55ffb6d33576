#include "fairsplit/cut_families.hpp"

#include "fairsplit/errors.hpp"

#include <algorithm>
#include <map>

namespace fairsplit {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

// Parses "k1=v1,k2=v2,..." requiring exactly the given keys.
std::map<std::string, Scalar> parse_fields(std::string_view body, std::initializer_list<std::string_view> keys) {
    std::map<std::string, Scalar> fields;
    for (std::string_view item : split(body, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value, got '" + std::string(item) + "'");
        std::string key(item.substr(0, eq));
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ParseError("unknown cut parameter '" + key + "'");
        if (fields.count(key) != 0)
            throw ParseError("duplicate cut parameter '" + key + "'");
        fields.emplace(std::move(key), Scalar::parse(item.substr(eq + 1)));
    }
    for (std::string_view k : keys) {
        if (fields.count(std::string(k)) == 0)
            throw ParseError("missing cut parameter '" + std::string(k) + "'");
    }
    return fields;
}

void require(bool ok, const char* constraint, const std::string& what) {
    if (!ok)
        throw DomainError(constraint, what);
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Corner:
        return "corner";
    case Family::Perturbed:
        return "perturbed";
    case Family::Strips:
        return "strips";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "corner")
        return Family::Corner;
    if (name == "perturbed")
        return Family::Perturbed;
    if (name == "strips")
        return Family::Strips;
    throw ParseError("unknown cut family '" + std::string(name) + "' (expected corner, perturbed or strips)");
}

Family family_of(const CutSpec& spec) {
    if (std::holds_alternative<CornerParams>(spec))
        return Family::Corner;
    if (std::holds_alternative<PerturbedParams>(spec))
        return Family::Perturbed;
    return Family::Strips;
}

std::string format_cut(const CutSpec& spec) {
    if (const auto* c = std::get_if<CornerParams>(&spec))
        return "corner:t=" + c->t.str() + ",s=" + c->s.str();
    if (const auto* p = std::get_if<PerturbedParams>(&spec))
        return "perturbed:a=" + p->a.str() + ",b=" + p->b.str() + ",c=" + p->c.str() + ",d=" + p->d.str();
    const auto& s = std::get<StripParams>(spec);
    std::string out = "strips:p=";
    for (std::size_t i = 0; i < s.positions.size(); ++i) {
        if (i > 0)
            out += ',';
        out += s.positions[i].str();
    }
    return out;
}

CutSpec parse_cut(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("cut spec '" + std::string(text) + "' lacks a family prefix");
    const Family family = parse_family(text.substr(0, colon));
    const std::string_view body = text.substr(colon + 1);
    switch (family) {
    case Family::Corner: {
        auto f = parse_fields(body, {"t", "s"});
        return CornerParams{f["t"], f["s"]};
    }
    case Family::Perturbed: {
        auto f = parse_fields(body, {"a", "b", "c", "d"});
        return PerturbedParams{f["a"], f["b"], f["c"], f["d"]};
    }
    case Family::Strips: {
        if (body.substr(0, 2) != "p=")
            throw ParseError("strips spec must start with 'p=' (got '" + std::string(body) + "')");
        StripParams s;
        for (std::string_view item : split(body.substr(2), ','))
            s.positions.push_back(Scalar::parse(item));
        return s;
    }
    }
    throw ParseError("unreachable cut family");
}

void validate(const Rect& rect, const CornerParams& p, CornerDomain domain) {
    require(p.t.sign() > 0 && p.s.sign() > 0, "corner-domain",
            "corner offsets must be positive (t=" + p.t.str() + ", s=" + p.s.str() + ")");
    if (domain == CornerDomain::Strict) {
        const Scalar half = rect.y() / 2;
        require(p.t <= half && p.s <= half, "corner-domain",
                "corner offsets t and s must lie in (0, y/2] = (0, " + half.str() + "] (t=" + p.t.str() +
                    ", s=" + p.s.str() + ")");
    } else {
        require(p.t + p.s <= rect.y(), "crossing-cuts",
                "corner cuts cross: t + s = " + (p.t + p.s).str() + " > y = " + rect.y().str());
    }
}

void validate(const Rect& rect, const PerturbedParams& p) {
    require(p.a.sign() >= 0 && p.b.sign() >= 0 && p.c.sign() >= 0 && p.d.sign() >= 0, "negative-parameter",
            "perturbed offsets must be non-negative (a=" + p.a.str() + ", b=" + p.b.str() + ", c=" + p.c.str() +
                ", d=" + p.d.str() + ")");
    require(p.a + p.b <= rect.y(), "crossing-cuts",
            "cuts cross on the top edge: a + b = " + (p.a + p.b).str() + " > y = " + rect.y().str());
    require(p.c + p.d <= rect.y(), "crossing-cuts",
            "cuts cross on the bottom edge: c + d = " + (p.c + p.d).str() + " > y = " + rect.y().str());
    require((p.a + p.c).sign() > 0, "degenerate-piece", "left cut lies on the left edge (a = c = 0)");
    require((p.b + p.d).sign() > 0, "degenerate-piece", "right cut lies on the right edge (b = d = 0)");
    require(p.a + p.b < rect.y() || p.c + p.d < rect.y(), "degenerate-piece",
            "cuts coincide (a + b = c + d = y), the middle piece is empty");
}

void validate(const Rect& rect, const StripParams& p) {
    require(!p.positions.empty(), "strip-order", "strips need at least one cut position");
    for (std::size_t i = 0; i < p.positions.size(); ++i) {
        const Scalar& pos = p.positions[i];
        require(pos.sign() > 0 && pos < rect.y(), "strip-range",
                "strip position " + pos.str() + " outside (0, " + rect.y().str() + ")");
        if (i > 0)
            require(p.positions[i - 1] < pos, "strip-order",
                    "strip positions must be strictly increasing (" + p.positions[i - 1].str() + " then " +
                        pos.str() + ")");
    }
}

std::array<Scalar, 3> corner_areas(const Rect& rect, const CornerParams& p) {
    const Scalar& x = rect.x();
    return {x * p.t / 2, (rect.y() * 2 - p.t - p.s) * x / 2, x * p.s / 2};
}

std::array<Scalar, 3> perturbed_areas(const Rect& rect, const PerturbedParams& p) {
    const Scalar& x = rect.x();
    return {(p.a + p.c) * x / 2, (rect.y() * 2 - (p.a + p.b + p.c + p.d)) * x / 2, (p.b + p.d) * x / 2};
}

std::vector<Scalar> strip_areas(const Rect& rect, const StripParams& p) {
    std::vector<Scalar> areas;
    Scalar prev;
    for (const Scalar& pos : p.positions) {
        areas.push_back((pos - prev) * rect.x());
        prev = pos;
    }
    areas.push_back((rect.y() - prev) * rect.x());
    return areas;
}

Partition pieces_corner(const Rect& rect, const CornerParams& p, CornerDomain domain) {
    validate(rect, p, domain);
    const Scalar& y = rect.y();
    const Scalar& x = rect.x();
    const Point top_left{0, x};
    const Point top_right{y, x};
    const Point left_foot{p.t, 0};
    const Point right_foot{y - p.s, 0};

    Partition out;
    out.pieces.push_back(Polygon::collapse({top_left, Point{0, 0}, left_foot}));
    out.pieces.push_back(Polygon::collapse({left_foot, right_foot, top_right, top_left}));
    out.pieces.push_back(Polygon::collapse({top_right, right_foot, Point{y, 0}}));
    const auto areas = corner_areas(rect, p);
    out.areas.assign(areas.begin(), areas.end());
    out.cuts = {Segment{top_left, left_foot}, Segment{top_right, right_foot}};
    return out;
}

Partition pieces_perturbed(const Rect& rect, const PerturbedParams& p) {
    validate(rect, p);
    const Scalar& y = rect.y();
    const Scalar& x = rect.x();
    const Point left_top{p.a, x};
    const Point left_foot{p.c, 0};
    const Point right_top{y - p.b, x};
    const Point right_foot{y - p.d, 0};

    Partition out;
    out.pieces.push_back(Polygon::collapse({left_top, Point{0, x}, Point{0, 0}, left_foot}));
    out.pieces.push_back(Polygon::collapse({left_foot, right_foot, right_top, left_top}));
    out.pieces.push_back(Polygon::collapse({right_top, right_foot, Point{y, 0}, Point{y, x}}));
    const auto areas = perturbed_areas(rect, p);
    out.areas.assign(areas.begin(), areas.end());
    out.cuts = {Segment{left_top, left_foot}, Segment{right_top, right_foot}};
    return out;
}

Partition pieces_strips(const Rect& rect, const StripParams& p) {
    validate(rect, p);
    const Scalar& x = rect.x();
    Partition out;
    Scalar prev;
    auto add_strip = [&](const Scalar& lo, const Scalar& hi) {
        out.pieces.push_back(Polygon({Point{lo, 0}, Point{hi, 0}, Point{hi, x}, Point{lo, x}}));
    };
    for (const Scalar& pos : p.positions) {
        add_strip(prev, pos);
        out.cuts.push_back(Segment{Point{pos, x}, Point{pos, 0}});
        prev = pos;
    }
    add_strip(prev, rect.y());
    out.areas = strip_areas(rect, p);
    return out;
}

Partition build_partition(const Rect& rect, const CutSpec& spec, CornerDomain domain) {
    return std::visit(
        [&](const auto& params) -> Partition {
            using T = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<T, CornerParams>)
                return pieces_corner(rect, params, domain);
            else if constexpr (std::is_same_v<T, PerturbedParams>)
                return pieces_perturbed(rect, params);
            else
                return pieces_strips(rect, params);
        },
        spec);
}

PerturbedParams corner_as_perturbed(const CornerParams& p) { return {0, 0, p.t, p.s}; }

CutSpec mirror_cut(const Rect& rect, const CutSpec& spec) {
    if (const auto* c = std::get_if<CornerParams>(&spec))
        return CornerParams{c->s, c->t};
    if (const auto* p = std::get_if<PerturbedParams>(&spec))
        return PerturbedParams{p->b, p->a, p->d, p->c};
    const auto& s = std::get<StripParams>(spec);
    StripParams out;
    for (auto it = s.positions.rbegin(); it != s.positions.rend(); ++it)
        out.positions.push_back(rect.y() - *it);
    return out;
}

} // namespace fairsplit
