#pragma once

#include "fairsplit/geometry.hpp"
#include "fairsplit/scalar.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fairsplit {

enum class Family { Corner, Perturbed, Strips };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Domain for the corner family. `Strict` restricts each offset to (0, y/2];
/// `Relaxed` only requires t, s > 0 and t + s <= y (the cuts do not cross).
enum class CornerDomain { Strict, Relaxed };

/// Two cuts from the top corners down to the bottom edge. `t` is measured
/// from the left end of the bottom edge, `s` from the right end.
struct CornerParams {
    Scalar t;
    Scalar s;

    friend bool operator==(const CornerParams&, const CornerParams&) = default;
};

/// Two top-to-bottom cuts: the left one joins (a, x) to (c, 0), the right one
/// joins (y - b, x) to (y - d, 0).
struct PerturbedParams {
    Scalar a;
    Scalar b;
    Scalar c;
    Scalar d;

    friend bool operator==(const PerturbedParams&, const PerturbedParams&) = default;
};

/// Vertical cuts at strictly increasing abscissas inside (0, y).
struct StripParams {
    std::vector<Scalar> positions;

    friend bool operator==(const StripParams&, const StripParams&) = default;
};

using CutSpec = std::variant<CornerParams, PerturbedParams, StripParams>;

Family family_of(const CutSpec& spec);

/// Canonical text: `corner:t=<r>,s=<r>`, `perturbed:a=<r>,b=<r>,c=<r>,d=<r>`,
/// `strips:p=<r>[,<r>...]`.
std::string format_cut(const CutSpec& spec);
CutSpec parse_cut(std::string_view text);

/// Pieces ordered left to right, with the closed-form area of each piece and
/// the cut segments that produced them.
struct Partition {
    std::vector<Polygon> pieces;
    std::vector<Scalar> areas;
    std::vector<Segment> cuts;
};

void validate(const Rect& rect, const CornerParams& p, CornerDomain domain = CornerDomain::Strict);
void validate(const Rect& rect, const PerturbedParams& p);
void validate(const Rect& rect, const StripParams& p);

/// Closed-form piece areas, no polygon construction involved.
std::array<Scalar, 3> corner_areas(const Rect& rect, const CornerParams& p);
std::array<Scalar, 3> perturbed_areas(const Rect& rect, const PerturbedParams& p);
std::vector<Scalar> strip_areas(const Rect& rect, const StripParams& p);

Partition pieces_corner(const Rect& rect, const CornerParams& p, CornerDomain domain = CornerDomain::Strict);
Partition pieces_perturbed(const Rect& rect, const PerturbedParams& p);
Partition pieces_strips(const Rect& rect, const StripParams& p);
Partition build_partition(const Rect& rect, const CutSpec& spec, CornerDomain domain = CornerDomain::Strict);

/// The corner family is the perturbed family with a = b = 0.
PerturbedParams corner_as_perturbed(const CornerParams& p);

/// Reflection u -> y - u expressed on the parameters.
CutSpec mirror_cut(const Rect& rect, const CutSpec& spec);

} // namespace fairsplit
