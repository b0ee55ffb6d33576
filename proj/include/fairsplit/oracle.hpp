#pragma once

#include "fairsplit/cut_families.hpp"
#include "fairsplit/geometry.hpp"
#include "fairsplit/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fairsplit {

struct SearchConfig {
    Family family = Family::Corner;
    /// Grid points per parameter axis, including both ends of the axis.
    std::size_t resolution = 50;
    /// Largest allowed |area_i - f_i * x * y|, as a fraction of x * y.
    Scalar tolerance = Scalar(1, 100);
    CornerDomain corner_domain = CornerDomain::Strict;
};

void validate(const SearchConfig& cfg);

struct Hit {
    /// (t, s), (a, b, c, d) or strip positions, matching the family's cut spec.
    std::vector<Scalar> params;
    /// Absolute, in area units.
    Scalar max_deviation;
};

struct SearchResult {
    std::vector<Hit> hits;
    /// resolution^(number of parameters), before domain filtering.
    std::uint64_t grid_points = 0;
    /// Points inside the family's domain whose areas were evaluated in full.
    std::uint64_t evaluated = 0;
    /// Smallest max-over-pieces deviation over the evaluated points, and the
    /// parameters attaining it first in canonical order. Absent for the
    /// perturbed family, whose search prunes on the side pieces.
    std::optional<Scalar> min_max_deviation;
    std::vector<Scalar> best_params;
    /// Smallest single-piece deviation over the evaluated points.
    std::optional<Scalar> min_piece_deviation;
};

/// Exact axis i/(resolution-1) * length for i = 0 .. resolution-1.
std::vector<Scalar> grid_axis(const Scalar& length, std::size_t resolution);

/// Exhaustive search of the family's rational grid for points whose
/// closed-form areas all lie within tolerance of the targets. Hits are sorted
/// lexicographically by parameters.
///
/// Axes: corner t, s over (0, y/2] (or (0, y] with t + s <= y when relaxed);
/// perturbed a, b, c, d over [0, y]; strips two positions over (0, y).
SearchResult grid_search(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg);

/// Re-checks a hit's recorded deviation against the closed-form areas.
bool hit_within_tolerance(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg, const Hit& hit);

/// Rebuilds the cut spec a hit's parameter tuple stands for.
CutSpec hit_as_cut(Family family, const Hit& hit);

struct McConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Monte Carlo area of `poly` from uniform rational samples in `rect`,
/// classified exactly with point_in_polygon (boundary counts as a hit).
McEstimate mc_area(const Polygon& poly, const Rect& rect, const McConfig& cfg);

struct PartitionVerdict {
    bool pass = false;
    std::vector<Scalar> areas;
    std::vector<Scalar> targets;
    /// area - target, per piece.
    std::vector<Scalar> deviations;
};

/// Exact comparison of each piece area with f_i * x * y.
PartitionVerdict verify_partition(const Rect& rect, const Partition& partition, const std::vector<Scalar>& fractions);
PartitionVerdict verify_partition(const Rect& rect, const Partition& partition, const TargetFractions& f);

} // namespace fairsplit
