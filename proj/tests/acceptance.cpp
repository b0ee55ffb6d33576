// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "fairsplit/cli.hpp"
#include "fairsplit/cut_families.hpp"
#include "fairsplit/errors.hpp"
#include "fairsplit/oracle.hpp"
#include "fairsplit/solver.hpp"

#include "support/test_support.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace fairsplit;
using fairsplit::testing::Gen;
using Json = nlohmann::ordered_json;

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Scalar> thirds_of(const Rect& r) {
    const Scalar t = r.area() / 3;
    return {t, t, t};
}

// 1. Corner cuts cannot produce thirds.
void corner_infeasibility(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    Gen gen(1001);
    SearchConfig cfg;
    cfg.family = Family::Corner;
    cfg.resolution = 200;
    cfg.tolerance = Scalar(1, 100);
    for (int i = 0; i < 100 && c.ok; ++i) {
        const Rect r = gen.rect();
        const auto rep = solve_corner(r, TargetFractions::thirds());
        c.require(rep.status == Status::Infeasible, "corner thirds reported feasible");
        c.require(rep.witness && rep.witness->required == r.y() * 2 / 3 && rep.witness->bound == r.y() / 2 &&
                      rep.witness->violated(),
                  "witness is not t = 2y/3 against y/2");
        const auto res = grid_search(r, TargetFractions::thirds(), cfg);
        c.require(res.hits.empty(), "grid search found corner hits");
        c.require(res.min_piece_deviation && *res.min_piece_deviation == r.area() / 12,
                  "minimum deviation is not xy/12");
        const auto at_half = corner_areas(r, {r.y() / 2, r.y() / 2});
        c.require((at_half[0] - r.area() / 3).abs() == r.area() / 12 &&
                      (at_half[2] - r.area() / 3).abs() == r.area() / 12,
                  "t = s = y/2 does not attain xy/12");
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed <= 10, "took " + std::to_string(elapsed) + " s");
}

// 2. Every sampled perturbed manifold point is an exact equal-thirds cut.
void perturbed_manifold(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const Rect base(3, 2);
    const auto rep = solve_perturbed(base, TargetFractions::thirds());
    c.require(rep.status == Status::Manifold, "3x2 thirds is not a manifold");
    if (!c.ok)
        return;
    const auto points = sample_manifold(rep, 1000, 2002);
    c.require(points.size() == 1000, "wrong sample count");
    for (const CutSpec& cut : points)
        c.require(pieces_perturbed(base, std::get<PerturbedParams>(cut)).areas == std::vector<Scalar>{2, 2, 2},
                  "sample " + format_cut(cut) + " does not give (2,2,2)");
    Gen gen(2003);
    for (int i = 0; i < 50 && c.ok; ++i) {
        const Rect r = gen.rect();
        const auto m = solve_perturbed(r, TargetFractions::thirds());
        c.require(m.status == Status::Manifold, "random rectangle thirds is not a manifold");
        if (!c.ok)
            break;
        for (const CutSpec& cut : sample_manifold(m, 50, static_cast<std::uint64_t>(i)))
            c.require(pieces_perturbed(r, std::get<PerturbedParams>(cut)).areas == thirds_of(r),
                      "sample " + format_cut(cut) + " misses xy/3");
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed <= 10, "took " + std::to_string(elapsed) + " s");
}

// 3. Strip cuts as a perturbed spec and as strips agree.
void trivial_strips(Check& c) {
    Gen gen(3001);
    for (int i = 0; i < 200 && c.ok; ++i) {
        const Rect r = i == 0 ? Rect(3, 2) : gen.rect();
        const Scalar third = r.y() / 3;
        const auto as_perturbed = pieces_perturbed(r, {third, third, third, third}).areas;
        const auto as_strips = pieces_strips(r, {{third, third * 2}}).areas;
        c.require(as_perturbed == as_strips, "perturbed and strip areas differ");
        c.require(as_strips == thirds_of(r), "strip areas are not xy/3");
    }
}

// 4. A chord bisects the area exactly when its line meets the center.
void bisection(Check& c) {
    Gen gen(4001);
    const auto through_center = [](const Rect& r, const Point& p, const Point& q) {
        const Point m = r.center();
        return ((q.u - p.u) * (m.v - p.v) - (q.v - p.v) * (m.u - p.u)).is_zero();
    };
    int centered = 0;
    int avoiding = 0;
    while ((centered < 1000 || avoiding < 1000) && c.ok) {
        const Rect r = gen.rect();
        const Point p = gen.boundary_point(r);
        const bool want_center = centered < 1000 && (avoiding >= 1000 || gen.integer(0, 1) == 0);
        const Point q = want_center ? Point{r.y() - p.u, r.x() - p.v} : gen.boundary_point(r);
        if (!want_center && through_center(r, p, q))
            continue;
        try {
            const Chord chord(r, p, q);
            const auto s = split_rect_by_chord(r, chord);
            const bool equal = shoelace_area(s.first) == shoelace_area(s.second);
            if (want_center) {
                c.require(equal, "center chord split unequally");
                ++centered;
            } else {
                c.require(!equal, "off-center chord split equally");
                ++avoiding;
            }
        } catch (const GeometryError&) {
        }
    }
}

// 5. Corner cuts are the a = b = 0 slice of the perturbed family.
void embedding(Check& c) {
    Gen gen(5001);
    for (int i = 0; i < 500 && c.ok; ++i) {
        const Rect r = gen.rect();
        const CornerParams p = gen.corner(r);
        const auto direct = pieces_corner(r, p);
        const auto embedded = pieces_perturbed(r, {0, 0, p.t, p.s});
        c.require(direct.pieces == embedded.pieces, "vertices differ for " + format_cut(p));
        c.require(direct.areas == embedded.areas, "areas differ for " + format_cut(p));
    }
    const Rect r(3, 2);
    const auto slice = solve_perturbed_corner_slice(r, TargetFractions::thirds());
    c.require(slice.status == Status::Infeasible && slice.witness && slice.witness->required == Scalar(4) &&
                  slice.witness->bound == Scalar(3),
              "thirds slice a = b = 0 is not empty with c + d = 4 > 3");
    Gen rects(5002);
    for (int i = 0; i < 100 && c.ok; ++i) {
        const Rect q = rects.rect();
        const auto m = solve_perturbed(q, TargetFractions::thirds()).manifold;
        const Scalar cd = m->relations[0].value + m->relations[1].value;
        c.require(cd == q.y() * 4 / 3 && !m->free_sum->contains(cd), "thirds manifold meets a = b = 0");
    }
}

// 6. Closed-form areas equal shoelace areas and sum to xy.
void formula_geometry(Check& c) {
    Gen gen(6001);
    const auto agree = [&](const Rect& r, const Partition& p, const std::string& what) {
        Scalar sum;
        for (std::size_t k = 0; k < p.pieces.size(); ++k) {
            c.require(p.areas[k] == shoelace_area(p.pieces[k]), what + ": formula differs from shoelace");
            sum += p.areas[k];
        }
        c.require(sum == r.area(), what + ": areas do not sum to xy");
    };
    for (int i = 0; i < 1000 && c.ok; ++i) {
        const Rect r = gen.rect();
        const CornerParams cp = gen.corner(r);
        agree(r, pieces_corner(r, cp), format_cut(cp));
        const PerturbedParams pp = gen.perturbed(r);
        agree(r, pieces_perturbed(r, pp), format_cut(pp));
        const StripParams sp = gen.strips(r, 2);
        agree(r, pieces_strips(r, sp), format_cut(sp));
    }
}

// 7. Monte Carlo estimates bracket the exact corner piece areas (statistical).
void monte_carlo(Check& c) {
    const Rect r(3, 2);
    const auto part = pieces_corner(r, {1, 1});
    const double exact[3] = {1, 4, 1};
    for (std::size_t k = 0; k < 3; ++k) {
        int within = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto est = mc_area(part.pieces[k], r, {100000, 7000 + seed});
            within += std::abs(est.estimate - exact[k]) <= 4 * est.std_error;
        }
        c.require(within >= 19, "piece " + std::to_string(k) + ": only " + std::to_string(within) + "/20 seeds");
    }
}

// 8. CLI exit codes, report fields and byte-stable JSON.
void cli_contract(Check& c) {
    const auto run = [](const std::vector<std::string>& args, int& code) {
        std::ostringstream out;
        std::ostringstream err;
        code = cli::run(args, out, err);
        return out.str();
    };
    const auto strip_timing = [](const std::string& doc) {
        Json j = Json::parse(doc);
        j.erase("timing");
        return j.dump();
    };

    int code = 0;
    const std::vector<std::string> corner_args{"solve", "--rect", "3x2", "--family", "corner"};
    const std::string corner = run(corner_args, code);
    c.require(code == 1, "corner exit code " + std::to_string(code));
    const Json cj = Json::parse(corner);
    c.require(cj["feasibility"]["witness"]["message"] == "required t = 2, maximum 3/2", "corner witness field");

    const std::vector<std::string> perturbed_args{"solve", "--rect", "3x2", "--family", "perturbed"};
    const std::string perturbed = run(perturbed_args, code);
    c.require(code == 0, "perturbed exit code " + std::to_string(code));
    const Json pj = Json::parse(perturbed);
    c.require(pj["feasibility"]["manifold"]["relations"] == Json::array({"a + c = 2", "b + d = 2"}),
              "perturbed relations field");

    const std::vector<std::string> strips_args{"solve", "--rect", "3x2", "--family", "strips"};
    const std::string strips = run(strips_args, code);
    c.require(code == 0, "strips exit code " + std::to_string(code));
    const Json sj = Json::parse(strips);
    c.require(sj["feasibility"]["solution"]["params"]["p"] == Json::array({"1", "2"}), "strips positions field");

    for (const auto* args : {&corner_args, &perturbed_args, &strips_args}) {
        int again = 0;
        const std::string first = run(*args, again);
        const std::string second = run(*args, again);
        c.require(strip_timing(first) == strip_timing(second), "report not byte-stable modulo timing");
        c.require(Json::parse(first).contains("timing"), "report lacks timing");
    }
    std::vector<std::string> sampled = perturbed_args;
    sampled.insert(sampled.end(), {"--samples", "50", "--seed", "9"});
    c.require(strip_timing(run(sampled, code)) == strip_timing(run(sampled, code)),
              "sampled report not byte-stable modulo timing");
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
        {"corner cuts cannot give thirds", corner_infeasibility},
        {"perturbed manifold points give exact thirds", perturbed_manifold},
        {"strip cuts as perturbed and strip specs agree", trivial_strips},
        {"center chords bisect, off-center chords do not", bisection},
        {"corner family embeds in the perturbed family", embedding},
        {"closed-form areas match shoelace areas", formula_geometry},
        {"Monte Carlo estimates bracket exact areas", monte_carlo},
        {"CLI exit codes, fields and stable reports", cli_contract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << elapsed << " s)";
        if (!c.ok)
            std::cout << " -- " << c.detail.str();
        std::cout << "\n";
        failures += !c.ok;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
