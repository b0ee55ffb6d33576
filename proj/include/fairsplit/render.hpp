#pragma once

#include "fairsplit/cut_families.hpp"
#include "fairsplit/geometry.hpp"

#include <string>
#include <vector>

namespace fairsplit {

struct RenderOptions {
    int width = 600;
    int margin = 30;
    std::vector<std::string> colors = {"#f4c27a", "#9fd4a3", "#8fb8e8", "#e8a0b4"};
    bool labels = true;
    int decimals = 3;
};

void validate(const RenderOptions& opts);

/// Standalone SVG 1.1 drawing of a partition.
///
/// Geometry is emitted in model units inside a group whose transform flips
/// the vertical axis and scales to the canvas, so path coordinates are the
/// exact vertices rounded to `decimals`. Each piece is a `<path class="piece">`
/// carrying its exact area in `fs:area`; each cut is a `<line class="cut">`.
/// Area labels sit at piece centroids in canvas pixels, with the exact
/// rational in `fs:exact`.
std::string render_partition(const Rect& rect, const Partition& partition, const RenderOptions& opts = {});

/// Both diagonals, their intersection, the chord and the two labelled pieces.
std::string render_bisection_demo(const Rect& rect, const Chord& chord, const RenderOptions& opts = {});

} // namespace fairsplit
