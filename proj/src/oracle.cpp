#include "fairsplit/oracle.hpp"

#include "fairsplit/errors.hpp"
#include "fairsplit/random.hpp"

#include <algorithm>
#include <cmath>

namespace fairsplit {

namespace {

struct Tracker {
    SearchResult result;
    Scalar limit;

    void consider(std::vector<Scalar>&& params, std::initializer_list<const Scalar*> devs) {
        ++result.evaluated;
        const Scalar* worst = *devs.begin();
        const Scalar* best = *devs.begin();
        for (const Scalar* d : devs) {
            if (*worst < *d)
                worst = d;
            if (*d < *best)
                best = d;
        }
        if (!result.min_piece_deviation || *best < *result.min_piece_deviation)
            result.min_piece_deviation = *best;
        if (!result.min_max_deviation || *worst < *result.min_max_deviation) {
            result.min_max_deviation = *worst;
            result.best_params = params;
        }
        if (*worst <= limit)
            result.hits.push_back(Hit{std::move(params), *worst});
    }
};

std::vector<Scalar> deviations_of(const Rect& rect, const TargetFractions& f, std::span<const Scalar> areas) {
    std::vector<Scalar> out;
    const Scalar total = rect.area();
    for (std::size_t i = 0; i < areas.size(); ++i)
        out.push_back((areas[i] - f.values()[i] * total).abs());
    return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

SearchResult search_corner(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg, const Scalar& limit) {
    const bool relaxed = cfg.corner_domain == CornerDomain::Relaxed;
    const Scalar axis_len = relaxed ? rect.y() : rect.y() / 2;
    const auto axis = grid_axis(axis_len, cfg.resolution);
    const Scalar total = rect.area();
    const Scalar& x = rect.x();

    // Side areas depend on one offset each; tabulate them once per axis.
    std::vector<Scalar> side_area;
    std::vector<Scalar> left_dev;
    std::vector<Scalar> right_dev;
    for (const Scalar& v : axis) {
        side_area.push_back(x * v / 2);
        left_dev.push_back((side_area.back() - f.f1() * total).abs());
        right_dev.push_back((side_area.back() - f.f3() * total).abs());
    }
    const Scalar middle_target = f.f2() * total;

    Tracker tr{{}, limit};
    tr.result.grid_points = ipow(cfg.resolution, 2);
    for (std::size_t i = 1; i < axis.size(); ++i) {
        for (std::size_t j = 1; j < axis.size(); ++j) {
            if (relaxed && axis[i] + axis[j] > rect.y())
                continue;
            const Scalar middle_dev = (total - side_area[i] - side_area[j] - middle_target).abs();
            tr.consider({axis[i], axis[j]}, {&left_dev[i], &middle_dev, &right_dev[j]});
        }
    }
    return std::move(tr.result);
}

SearchResult search_perturbed(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg,
                              const Scalar& limit) {
    const auto axis = grid_axis(rect.y(), cfg.resolution);
    const Scalar total = rect.area();
    const Scalar& x = rect.x();
    const Scalar& y = rect.y();

    struct SidePair {
        std::size_t top;
        std::size_t bottom;
        Scalar area;
        Scalar dev;
    };
    // A point can only be a hit if both side pieces are; the left piece depends
    // on (a, c) alone and the right piece on (b, d) alone.
    const auto side_pairs = [&](const Scalar& target) {
        std::vector<SidePair> pairs;
        for (std::size_t top = 0; top < axis.size(); ++top) {
            for (std::size_t bottom = 0; bottom < axis.size(); ++bottom) {
                Scalar area = (axis[top] + axis[bottom]) * x / 2;
                Scalar dev = (area - target).abs();
                if (dev <= limit)
                    pairs.push_back({top, bottom, std::move(area), std::move(dev)});
            }
        }
        return pairs;
    };
    const auto left = side_pairs(f.f1() * total);
    const auto right = side_pairs(f.f3() * total);
    const Scalar middle_target = f.f2() * total;

    Tracker tr{{}, limit};
    tr.result.grid_points = ipow(cfg.resolution, 4);
    for (const SidePair& l : left) {
        const Scalar& a = axis[l.top];
        const Scalar& c = axis[l.bottom];
        for (const SidePair& r : right) {
            const Scalar& b = axis[r.top];
            const Scalar& d = axis[r.bottom];
            const Scalar top_sum = a + b;
            const Scalar bottom_sum = c + d;
            if (top_sum > y || bottom_sum > y || l.area.is_zero() || r.area.is_zero() ||
                (top_sum == y && bottom_sum == y))
                continue;
            const Scalar middle_dev = (total - l.area - r.area - middle_target).abs();
            tr.consider({a, b, c, d}, {&l.dev, &middle_dev, &r.dev});
        }
    }
    tr.result.min_max_deviation.reset();
    tr.result.min_piece_deviation.reset();
    tr.result.best_params.clear();
    return std::move(tr.result);
}

SearchResult search_strips(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg, const Scalar& limit) {
    const auto axis = grid_axis(rect.y(), cfg.resolution);
    const Scalar total = rect.area();
    const Scalar& x = rect.x();

    Tracker tr{{}, limit};
    tr.result.grid_points = ipow(cfg.resolution, 2);
    for (std::size_t i = 1; i + 1 < axis.size(); ++i) {
        const Scalar left_dev = (axis[i] * x - f.f1() * total).abs();
        for (std::size_t j = i + 1; j + 1 < axis.size(); ++j) {
            const Scalar middle_dev = ((axis[j] - axis[i]) * x - f.f2() * total).abs();
            const Scalar right_dev = ((rect.y() - axis[j]) * x - f.f3() * total).abs();
            tr.consider({axis[i], axis[j]}, {&left_dev, &middle_dev, &right_dev});
        }
    }
    return std::move(tr.result);
}

} // namespace

void validate(const SearchConfig& cfg) {
    if (cfg.resolution < 2)
        throw DomainError("search-config", "grid resolution must be at least 2");
    if (cfg.tolerance.sign() < 0)
        throw DomainError("search-config", "tolerance must be non-negative");
}

std::vector<Scalar> grid_axis(const Scalar& length, std::size_t resolution) {
    if (resolution < 2)
        throw DomainError("search-config", "grid resolution must be at least 2");
    std::vector<Scalar> axis;
    axis.reserve(resolution);
    const Scalar steps(static_cast<long>(resolution - 1));
    for (std::size_t i = 0; i < resolution; ++i)
        axis.push_back(length * Scalar(static_cast<long>(i)) / steps);
    return axis;
}

SearchResult grid_search(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg) {
    validate(cfg);
    const Scalar limit = cfg.tolerance * rect.area();
    SearchResult result;
    switch (cfg.family) {
    case Family::Corner:
        result = search_corner(rect, f, cfg, limit);
        break;
    case Family::Perturbed:
        result = search_perturbed(rect, f, cfg, limit);
        break;
    case Family::Strips:
        result = search_strips(rect, f, cfg, limit);
        break;
    }
    std::sort(result.hits.begin(), result.hits.end(),
              [](const Hit& l, const Hit& r) { return l.params < r.params; });
    return result;
}

CutSpec hit_as_cut(Family family, const Hit& hit) {
    const auto& p = hit.params;
    switch (family) {
    case Family::Corner:
        return CornerParams{p.at(0), p.at(1)};
    case Family::Perturbed:
        return PerturbedParams{p.at(0), p.at(1), p.at(2), p.at(3)};
    case Family::Strips:
        return StripParams{p};
    }
    throw Error("unknown family");
}

bool hit_within_tolerance(const Rect& rect, const TargetFractions& f, const SearchConfig& cfg, const Hit& hit) {
    const CutSpec cut = hit_as_cut(cfg.family, hit);
    std::vector<Scalar> areas;
    if (const auto* c = std::get_if<CornerParams>(&cut)) {
        validate(rect, *c, cfg.corner_domain);
        const auto a = corner_areas(rect, *c);
        areas.assign(a.begin(), a.end());
    } else if (const auto* p = std::get_if<PerturbedParams>(&cut)) {
        validate(rect, *p);
        const auto a = perturbed_areas(rect, *p);
        areas.assign(a.begin(), a.end());
    } else {
        const auto& s = std::get<StripParams>(cut);
        validate(rect, s);
        areas = strip_areas(rect, s);
    }
    const auto devs = deviations_of(rect, f, areas);
    const Scalar worst = *std::max_element(devs.begin(), devs.end());
    return worst == hit.max_deviation && worst <= cfg.tolerance * rect.area();
}

McEstimate mc_area(const Polygon& poly, const Rect& rect, const McConfig& cfg) {
    if (cfg.samples == 0)
        throw DomainError("mc-config", "Monte Carlo needs at least one sample");
    Rng rng(cfg.seed);
    // Samples sit at odd multiples of 2^-33 along each axis: exact rationals
    // that never land on a grid-aligned boundary.
    const mpz_class denom = mpz_class(1) << 33;
    const auto coordinate = [&](const Scalar& length) {
        const mpz_class k(static_cast<unsigned long>(rng.next() >> 32));
        return Scalar(mpq_class(2 * k + 1, denom)) * length;
    };

    McEstimate est;
    est.samples = cfg.samples;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        Scalar u = coordinate(rect.y());
        Scalar v = coordinate(rect.x());
        if (point_in_polygon(Point{std::move(u), std::move(v)}, poly) != Containment::Outside)
            ++est.hits;
    }
    const double total = rect.area().to_double();
    const double p = static_cast<double>(est.hits) / static_cast<double>(est.samples);
    est.estimate = p * total;
    est.std_error = total * std::sqrt(p * (1 - p) / static_cast<double>(est.samples));
    return est;
}

PartitionVerdict verify_partition(const Rect& rect, const Partition& partition, const std::vector<Scalar>& fractions) {
    if (partition.areas.size() != fractions.size())
        throw DomainError("piece-count", "partition has " + std::to_string(partition.areas.size()) +
                                             " pieces but " + std::to_string(fractions.size()) +
                                             " target fractions were given");
    PartitionVerdict v;
    v.pass = true;
    const Scalar total = rect.area();
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        v.areas.push_back(partition.areas[i]);
        v.targets.push_back(fractions[i] * total);
        v.deviations.push_back(v.areas.back() - v.targets.back());
        if (!v.deviations.back().is_zero())
            v.pass = false;
    }
    return v;
}

PartitionVerdict verify_partition(const Rect& rect, const Partition& partition, const TargetFractions& f) {
    return verify_partition(rect, partition, std::vector<Scalar>(f.values().begin(), f.values().end()));
}

} // namespace fairsplit
