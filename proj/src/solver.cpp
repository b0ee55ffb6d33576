#include "fairsplit/solver.hpp"

#include "fairsplit/errors.hpp"
#include "fairsplit/random.hpp"

#include <map>

namespace fairsplit {

namespace {

std::string signed_term(const Scalar& coeff, const std::string& name, bool first) {
    std::string out;
    if (coeff.sign() < 0)
        out = first ? "-" : " - ";
    else if (!first)
        out = " + ";
    const Scalar mag = coeff.abs();
    if (mag != Scalar(1))
        out += mag.str() + "*";
    return out + name;
}

FeasibilityReport infeasible(Family family, const Rect& rect, Witness w) {
    FeasibilityReport r;
    r.family = family;
    r.status = Status::Infeasible;
    r.witness = std::move(w);
    r.rect = rect;
    return r;
}

// Uniform pick among the grid points box.lower + k/D * width (k = 0..D) that
// fall inside `range`, a sub-interval of `box`. Falls back to range.lower when
// the range is narrower than one grid step.
Scalar draw_on_grid(Rng& rng, const Interval& box, const Interval& range, const Scalar& denom) {
    const Scalar width = box.upper - box.lower;
    if (width.is_zero())
        return box.lower;
    const Scalar step = width / denom;
    const mpq_class lo = ((range.lower - box.lower) / step).raw();
    const mpq_class hi = ((range.upper - box.lower) / step).raw();
    mpz_class k_min;
    mpz_class k_max;
    mpz_cdiv_q(k_min.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(k_max.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (k_max < k_min)
        return range.lower;
    const auto span = static_cast<std::uint64_t>(mpz_class(k_max - k_min).get_ui());
    const mpz_class k = k_min + mpz_class(static_cast<unsigned long>(rng.uniform_int(span)));
    return box.lower + step * Scalar(mpq_class(k));
}

} // namespace

TargetFractions::TargetFractions(Scalar f1, Scalar f2, Scalar f3) : f_{std::move(f1), std::move(f2), std::move(f3)} {
    validate_fractions({f_.begin(), f_.end()});
}

TargetFractions TargetFractions::thirds() { return {Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)}; }

void validate_fractions(const std::vector<Scalar>& fractions) {
    if (fractions.size() < 2)
        throw DomainError("fractions", "need at least two target fractions");
    Scalar sum;
    for (const Scalar& f : fractions) {
        if (f.sign() <= 0)
            throw DomainError("fractions", "target fraction " + f.str() + " is not positive");
        sum += f;
    }
    if (sum != Scalar(1))
        throw DomainError("fractions", "target fractions sum to " + sum.str() + ", not 1");
}

std::string_view status_name(Status s) {
    switch (s) {
    case Status::Infeasible:
        return "infeasible";
    case Status::Unique:
        return "unique";
    case Status::Manifold:
        return "manifold";
    }
    return "unknown";
}

std::string Witness::message() const {
    const char* label = kind == Kind::AtMost ? "maximum" : "must equal";
    return "required " + quantity + " = " + required.str() + ", " + label + " " + bound.str();
}

std::string LinearRelation::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i)
        out += signed_term(terms[i].second, terms[i].first, i == 0);
    return out + " = " + value.str();
}

std::string DependentParam::str(const std::vector<std::string>& free_params) const {
    std::string out = name + " = ";
    bool first = true;
    if (!constant.is_zero()) {
        out += constant.str();
        first = false;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        out += signed_term(coeffs[i], free_params[i], first);
        first = false;
    }
    if (first)
        out += "0";
    return out;
}

FeasibilityReport solve_corner(const Rect& rect, const TargetFractions& f, const SolverOptions& opts) {
    const Scalar t = f.f1() * rect.y() * 2;
    const Scalar s = f.f3() * rect.y() * 2;
    if (opts.corner_domain == CornerDomain::Strict) {
        const Scalar half = rect.y() / 2;
        if (t > half)
            return infeasible(Family::Corner, rect, {"t", t, half});
        if (s > half)
            return infeasible(Family::Corner, rect, {"s", s, half});
    } else if (t + s > rect.y()) {
        return infeasible(Family::Corner, rect, {"t + s", t + s, rect.y()});
    }
    FeasibilityReport r;
    r.family = Family::Corner;
    r.status = Status::Unique;
    r.solution = CornerParams{t, s};
    r.rect = rect;
    return r;
}

FeasibilityReport solve_perturbed(const Rect& rect, const TargetFractions& f) {
    const Scalar& y = rect.y();
    const Scalar left = f.f1() * y * 2;  // a + c
    const Scalar right = f.f3() * y * 2; // b + d

    Manifold m;
    m.relations = {LinearRelation{{{"a", 1}, {"c", 1}}, left}, LinearRelation{{{"b", 1}, {"d", 1}}, right}};
    m.free_params = {"c", "d"};
    m.free_bounds = {Interval{max(0, left - y), min(y, left)}, Interval{max(0, right - y), min(y, right)}};
    // a + b <= y and c + d <= y, with a = left - c and b = right - d.
    m.free_sum = Interval{left + right - y, y};
    m.dependents = {DependentParam{"a", left, {-1, 0}}, DependentParam{"b", right, {0, -1}}};

    for (std::size_t i = 0; i < m.free_params.size(); ++i) {
        const Interval& box = m.free_bounds[i];
        if (box.empty())
            return infeasible(Family::Perturbed, rect, {m.free_params[i], box.lower, box.upper});
    }
    const Scalar sum_lo = m.free_bounds[0].lower + m.free_bounds[1].lower;
    const Scalar sum_hi = m.free_bounds[0].upper + m.free_bounds[1].upper;
    if (sum_lo > m.free_sum->upper)
        return infeasible(Family::Perturbed, rect, {"c + d", sum_lo, m.free_sum->upper});
    if (sum_hi < m.free_sum->lower)
        return infeasible(Family::Perturbed, rect, {"a + b", left + right - sum_hi, y});

    FeasibilityReport r;
    r.family = Family::Perturbed;
    r.status = Status::Manifold;
    r.manifold = std::move(m);
    r.rect = rect;
    return r;
}

FeasibilityReport solve_perturbed_corner_slice(const Rect& rect, const TargetFractions& f) {
    const Scalar c = f.f1() * rect.y() * 2;
    const Scalar d = f.f3() * rect.y() * 2;
    if (c + d > rect.y())
        return infeasible(Family::Perturbed, rect, {"c + d", c + d, rect.y()});
    FeasibilityReport r;
    r.family = Family::Perturbed;
    r.status = Status::Unique;
    r.solution = PerturbedParams{0, 0, c, d};
    r.rect = rect;
    return r;
}

FeasibilityReport solve_perturbed_paper_subfamily(const Rect& rect, const TargetFractions& f) {
    const Scalar left = f.f1() * rect.y() * 2;
    const Scalar right = f.f3() * rect.y() * 2;
    // b = c and a = d turn a + c = left into c + d = left and b + d = right into c + d = right.
    if (left != right)
        return infeasible(Family::Perturbed, rect, {"b + d", right, left, Witness::Kind::Equal});
    if (left > rect.y())
        return infeasible(Family::Perturbed, rect, {"c + d", left, rect.y()});

    Manifold m;
    m.relations = {LinearRelation{{{"a", 1}, {"c", 1}}, left}, LinearRelation{{{"b", 1}, {"d", 1}}, right},
                   LinearRelation{{{"b", 1}, {"c", -1}}, 0}, LinearRelation{{{"a", 1}, {"d", -1}}, 0}};
    m.free_params = {"c"};
    m.free_bounds = {Interval{0, left}};
    m.dependents = {DependentParam{"a", left, {-1}}, DependentParam{"b", 0, {1}}, DependentParam{"d", left, {-1}}};

    FeasibilityReport r;
    r.family = Family::Perturbed;
    r.status = Status::Manifold;
    r.manifold = std::move(m);
    r.rect = rect;
    return r;
}

FeasibilityReport solve_strips(const Rect& rect, const std::vector<Scalar>& fractions) {
    validate_fractions(fractions);
    StripParams s;
    Scalar cumulative;
    for (std::size_t i = 0; i + 1 < fractions.size(); ++i) {
        cumulative += fractions[i];
        s.positions.push_back(cumulative * rect.y());
    }
    FeasibilityReport r;
    r.family = Family::Strips;
    r.status = Status::Unique;
    r.solution = std::move(s);
    r.rect = rect;
    return r;
}

std::vector<CutSpec> sample_manifold(const FeasibilityReport& report, std::size_t n, std::uint64_t seed,
                                     const SamplingOptions& opts) {
    if (report.status != Status::Manifold || !report.manifold)
        throw Error("sample_manifold needs a manifold report");
    if (opts.denominator_bound == 0)
        throw Error("denominator bound must be positive");
    const Manifold& m = *report.manifold;
    const std::size_t k = m.free_params.size();

    // Tail sums of the box bounds, for projecting the sum constraint onto each coordinate.
    std::vector<Scalar> rest_lo(k + 1);
    std::vector<Scalar> rest_hi(k + 1);
    for (std::size_t i = k; i-- > 0;) {
        rest_lo[i] = rest_lo[i + 1] + m.free_bounds[i].lower;
        rest_hi[i] = rest_hi[i + 1] + m.free_bounds[i].upper;
    }

    Rng rng(seed);
    const Scalar denom(static_cast<long>(opts.denominator_bound));
    std::vector<CutSpec> out;
    out.reserve(n);
    for (std::size_t sample = 0; sample < n; ++sample) {
        std::vector<Scalar> free(k);
        Scalar chosen;
        for (std::size_t i = 0; i < k; ++i) {
            Interval range = m.free_bounds[i];
            if (m.free_sum) {
                range.lower = max(range.lower, m.free_sum->lower - chosen - rest_hi[i + 1]);
                range.upper = min(range.upper, m.free_sum->upper - chosen - rest_lo[i + 1]);
            }
            if (range.empty())
                throw Error("manifold has an empty feasible region");
            free[i] = draw_on_grid(rng, m.free_bounds[i], range, denom);
            chosen += free[i];
        }

        std::map<std::string, Scalar> values;
        for (std::size_t i = 0; i < k; ++i)
            values[m.free_params[i]] = free[i];
        for (const DependentParam& dep : m.dependents) {
            Scalar v = dep.constant;
            for (std::size_t i = 0; i < k; ++i)
                v += dep.coeffs[i] * free[i];
            values[dep.name] = v;
        }
        PerturbedParams p{values["a"], values["b"], values["c"], values["d"]};
        if (report.rect)
            validate(*report.rect, p);
        out.emplace_back(std::move(p));
    }
    return out;
}

bool is_center_bisecting(const Rect& rect, const Chord& chord) {
    return orientation(chord.p(), chord.q(), rect.center()) == 0;
}

} // namespace fairsplit
