#include "fairsplit/render.hpp"

#include "fairsplit/errors.hpp"

#include <sstream>

namespace fairsplit {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

// Shared canvas set-up: model units map to pixels by `scale`, v is flipped.
class Canvas {
public:
    Canvas(const Rect& rect, const RenderOptions& opts)
        : rect_(rect), opts_(opts), scale_(Scalar(opts.width - 2 * opts.margin) / rect.y()),
          height_(rect.x() * scale_ + Scalar(2 * opts.margin)) {}

    std::string coord(const Scalar& s) const { return s.to_decimal(opts_.decimals); }

    std::string px(const Scalar& s) const { return s.to_decimal(2); }

    // Model units corresponding to `pixels` on screen.
    std::string model_width(double pixels) const {
        std::ostringstream os;
        os.precision(6);
        os << pixels / scale_.to_double();
        return os.str();
    }

    void open(std::ostringstream& os) const {
        const std::string w = std::to_string(opts_.width);
        const std::string h = px(height_);
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:fs=\"urn:fairsplit\" version=\"1.1\" width=\"" << w
           << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
           << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
           << "\" fill=\"#ffffff\"/>\n"
           << "  <g class=\"model\" fs:y=\"" << rect_.y().str() << "\" fs:x=\"" << rect_.x().str()
           << "\" transform=\"translate(" << opts_.margin << "," << px(height_ - Scalar(opts_.margin))
           << ") scale(" << scale_.to_decimal(6) << ",-" << scale_.to_decimal(6) << ")\">\n";
    }

    void piece(std::ostringstream& os, std::size_t index, const Polygon& poly, const Scalar& area) const {
        const auto& colors = opts_.colors;
        os << "    <path class=\"piece\" fs:index=\"" << index << "\" fs:area=\"" << area.str() << "\" d=\"";
        const auto& vs = poly.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            os << (i == 0 ? "M " : " L ") << coord(vs[i].u) << " " << coord(vs[i].v);
        os << " Z\" fill=\"" << escape(colors[index % colors.size()]) << "\" stroke=\"#333333\" stroke-width=\""
           << model_width(1) << "\"/>\n";
    }

    void line(std::ostringstream& os, const char* cls, const Segment& s, const char* color, double pixels,
              const std::string& extra = "") const {
        os << "    <line class=\"" << cls << "\" x1=\"" << coord(s.p.u) << "\" y1=\"" << coord(s.p.v) << "\" x2=\""
           << coord(s.q.u) << "\" y2=\"" << coord(s.q.v) << "\" stroke=\"" << color << "\" stroke-width=\""
           << model_width(pixels) << "\"" << extra << "/>\n";
    }

    void close_model(std::ostringstream& os) const { os << "  </g>\n"; }

    void label(std::ostringstream& os, const Point& at, const Scalar& value) const {
        const Scalar sx = Scalar(opts_.margin) + at.u * scale_;
        const Scalar sy = Scalar(opts_.margin) + (rect_.x() - at.v) * scale_;
        os << "  <text class=\"label\" x=\"" << px(sx) << "\" y=\"" << px(sy)
           << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"14\""
           << " fs:exact=\"" << value.str() << "\">" << value.to_decimal(opts_.decimals) << "</text>\n";
    }

private:
    const Rect& rect_;
    const RenderOptions& opts_;
    Scalar scale_;
    Scalar height_;
};

} // namespace

void validate(const RenderOptions& opts) {
    if (opts.margin < 0 || opts.width <= 2 * opts.margin)
        throw DomainError("render-options", "canvas width must exceed twice the margin");
    if (opts.colors.empty())
        throw DomainError("render-options", "at least one fill color is required");
    if (opts.decimals < 0 || opts.decimals > 12)
        throw DomainError("render-options", "decimal places must be within [0, 12]");
}

std::string render_partition(const Rect& rect, const Partition& partition, const RenderOptions& opts) {
    validate(opts);
    const Canvas canvas(rect, opts);
    std::ostringstream os;
    canvas.open(os);
    for (std::size_t i = 0; i < partition.pieces.size(); ++i)
        canvas.piece(os, i, partition.pieces[i], partition.areas[i]);
    for (const Segment& cut : partition.cuts)
        canvas.line(os, "cut", cut, "#b22222", 2.5);
    canvas.close_model(os);
    if (opts.labels) {
        for (std::size_t i = 0; i < partition.pieces.size(); ++i)
            canvas.label(os, centroid(partition.pieces[i]), partition.areas[i]);
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_bisection_demo(const Rect& rect, const Chord& chord, const RenderOptions& opts) {
    validate(opts);
    const ChordSplit split = split_rect_by_chord(rect, chord);
    const Canvas canvas(rect, opts);
    const auto corners = rect.corners();
    const Point center = rect.center();

    std::ostringstream os;
    canvas.open(os);
    canvas.piece(os, 0, split.first, shoelace_area(split.first));
    canvas.piece(os, 1, split.second, shoelace_area(split.second));
    const std::string dashed =
        " stroke-dasharray=\"" + canvas.model_width(6) + "," + canvas.model_width(4) + "\"";
    canvas.line(os, "diagonal", Segment{corners[0], corners[2]}, "#4a4a4a", 1, dashed);
    canvas.line(os, "diagonal", Segment{corners[1], corners[3]}, "#4a4a4a", 1, dashed);
    canvas.line(os, "cut", chord.segment(), "#b22222", 2.5);
    os << "    <circle class=\"center\" cx=\"" << canvas.coord(center.u) << "\" cy=\"" << canvas.coord(center.v)
       << "\" r=\"" << canvas.model_width(4) << "\" fill=\"#1f3b73\"/>\n";
    canvas.close_model(os);
    canvas.label(os, centroid(split.first), shoelace_area(split.first));
    canvas.label(os, centroid(split.second), shoelace_area(split.second));
    os << "</svg>\n";
    return os.str();
}

} // namespace fairsplit
