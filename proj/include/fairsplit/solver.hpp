#pragma once

#include "fairsplit/cut_families.hpp"
#include "fairsplit/geometry.hpp"
#include "fairsplit/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairsplit {

/// Left, middle and right area fractions. Each is positive and they sum to 1.
class TargetFractions {
public:
    TargetFractions(Scalar f1, Scalar f2, Scalar f3);

    static TargetFractions thirds();

    const Scalar& f1() const { return f_[0]; }
    const Scalar& f2() const { return f_[1]; }
    const Scalar& f3() const { return f_[2]; }
    const std::array<Scalar, 3>& values() const { return f_; }

private:
    std::array<Scalar, 3> f_;
};

/// Checks an n-way fraction list (positive entries summing to 1).
void validate_fractions(const std::vector<Scalar>& fractions);

enum class Status { Infeasible, Unique, Manifold };

std::string_view status_name(Status s);

/// The exact reason a target cannot be met: `quantity` must take the value
/// `required`, which violates `bound`.
struct Witness {
    enum class Kind { AtMost, Equal };

    std::string quantity;
    Scalar required;
    Scalar bound;
    Kind kind = Kind::AtMost;

    /// e.g. "required t = 2, maximum 3/2"
    std::string message() const;
    bool violated() const { return kind == Kind::AtMost ? required > bound : required != bound; }
};

/// sum(coeff * param) = value
struct LinearRelation {
    std::vector<std::pair<std::string, Scalar>> terms;
    Scalar value;

    std::string str() const;
};

/// name = constant + sum(coeff_i * free_i), coefficients aligned with
/// Manifold::free_params.
struct DependentParam {
    std::string name;
    Scalar constant;
    std::vector<Scalar> coeffs;

    std::string str(const std::vector<std::string>& free_params) const;
};

struct Interval {
    Scalar lower;
    Scalar upper;

    bool empty() const { return upper < lower; }
    bool contains(const Scalar& v) const { return lower <= v && v <= upper; }
};

/// Solution set of the perturbed family: linear relations, free parameters
/// with box bounds, and an optional bound on the sum of the free parameters.
struct Manifold {
    std::vector<LinearRelation> relations;
    std::vector<std::string> free_params;
    std::vector<Interval> free_bounds;
    std::optional<Interval> free_sum;
    std::vector<DependentParam> dependents;
};

struct FeasibilityReport {
    Family family = Family::Corner;
    Status status = Status::Infeasible;
    std::optional<Witness> witness;
    std::optional<CutSpec> solution;
    std::optional<Manifold> manifold;
    std::optional<Rect> rect;

    bool feasible() const { return status != Status::Infeasible; }
};

struct SolverOptions {
    CornerDomain corner_domain = CornerDomain::Strict;
};

FeasibilityReport solve_corner(const Rect& rect, const TargetFractions& f, const SolverOptions& opts = {});
FeasibilityReport solve_perturbed(const Rect& rect, const TargetFractions& f);
FeasibilityReport solve_strips(const Rect& rect, const std::vector<Scalar>& fractions);

/// The perturbed solution set restricted to a = b = 0, i.e. corner cuts with
/// only the non-crossing bound c + d <= y.
FeasibilityReport solve_perturbed_corner_slice(const Rect& rect, const TargetFractions& f);

/// The perturbed solution set further restricted to b = c and a = d.
FeasibilityReport solve_perturbed_paper_subfamily(const Rect& rect, const TargetFractions& f);

struct SamplingOptions {
    std::uint64_t denominator_bound = 1000;
};

/// `n` points drawn deterministically from `seed`, each exactly on the
/// manifold and inside the perturbed domain. Each free parameter is drawn
/// uniformly from the box grid lower + k/D * (upper - lower), k in [0, D],
/// restricted to the values still consistent with the sum bound, so
/// denominators stay bounded by D times the box denominators.
std::vector<CutSpec> sample_manifold(const FeasibilityReport& report, std::size_t n, std::uint64_t seed,
                                     const SamplingOptions& opts = {});

/// The chord's supporting line passes through the rectangle's center.
bool is_center_bisecting(const Rect& rect, const Chord& chord);

} // namespace fairsplit
