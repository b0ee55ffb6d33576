#include "fairsplit/cli.hpp"

#include "fairsplit/cut_families.hpp"
#include "fairsplit/errors.hpp"
#include "fairsplit/oracle.hpp"
#include "fairsplit/random.hpp"
#include "fairsplit/render.hpp"
#include "fairsplit/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>

namespace fairsplit::cli {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

Json scalars(const std::vector<Scalar>& values) {
    Json arr = Json::array();
    for (const Scalar& v : values)
        arr.push_back(v.str());
    return arr;
}

template <std::size_t N>
Json scalars(const std::array<Scalar, N>& values) {
    return scalars(std::vector<Scalar>(values.begin(), values.end()));
}

Json params_json(const CutSpec& cut) {
    Json j = Json::object();
    if (const auto* c = std::get_if<CornerParams>(&cut)) {
        j["t"] = c->t.str();
        j["s"] = c->s.str();
    } else if (const auto* p = std::get_if<PerturbedParams>(&cut)) {
        j["a"] = p->a.str();
        j["b"] = p->b.str();
        j["c"] = p->c.str();
        j["d"] = p->d.str();
    } else {
        j["p"] = scalars(std::get<StripParams>(cut).positions);
    }
    return j;
}

Json cut_json(const Rect& rect, const CutSpec& cut, CornerDomain domain) {
    Json j;
    j["cut"] = format_cut(cut);
    j["params"] = params_json(cut);
    j["areas"] = scalars(build_partition(rect, cut, domain).areas);
    return j;
}

Json witness_json(const Witness& w) {
    Json j;
    j["quantity"] = w.quantity;
    j["required"] = w.required.str();
    j["bound"] = w.bound.str();
    j["kind"] = w.kind == Witness::Kind::AtMost ? "maximum" : "equal";
    j["message"] = w.message();
    return j;
}

Json manifold_json(const Manifold& m) {
    Json j;
    Json rel = Json::array();
    for (const auto& r : m.relations)
        rel.push_back(r.str());
    j["relations"] = rel;
    Json free = Json::array();
    for (std::size_t i = 0; i < m.free_params.size(); ++i)
        free.push_back({{"name", m.free_params[i]},
                        {"lower", m.free_bounds[i].lower.str()},
                        {"upper", m.free_bounds[i].upper.str()}});
    j["free_parameters"] = free;
    if (m.free_sum) {
        std::string names;
        for (std::size_t i = 0; i < m.free_params.size(); ++i)
            names += (i == 0 ? "" : " + ") + m.free_params[i];
        j["free_sum"] = {{"expression", names}, {"lower", m.free_sum->lower.str()}, {"upper", m.free_sum->upper.str()}};
    } else {
        j["free_sum"] = nullptr;
    }
    Json dep = Json::array();
    for (const auto& d : m.dependents)
        dep.push_back(d.str(m.free_params));
    j["dependents"] = dep;
    return j;
}

Json feasibility_json(const Rect& rect, const FeasibilityReport& r, CornerDomain domain) {
    Json j;
    j["family"] = std::string(family_name(r.family));
    j["status"] = std::string(status_name(r.status));
    j["feasible"] = r.feasible();
    j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    j["solution"] = r.solution ? cut_json(rect, *r.solution, domain) : Json(nullptr);
    j["manifold"] = r.manifold ? manifold_json(*r.manifold) : Json(nullptr);
    return j;
}

Json samples_json(const Rect& rect, const FeasibilityReport& r, std::size_t n, std::uint64_t seed,
                  const SamplingOptions& opts) {
    Json arr = Json::array();
    if (n == 0 || r.status != Status::Manifold)
        return arr;
    for (const CutSpec& cut : sample_manifold(r, n, seed, opts))
        arr.push_back(cut_json(rect, cut, CornerDomain::Strict));
    return arr;
}

Json header(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    return j;
}

void finish(Json& report, std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
}

TargetFractions as_triple(const std::vector<Scalar>& f) {
    if (f.size() != 3)
        throw DomainError("fractions", "this family takes exactly three fractions (got " + std::to_string(f.size()) + ")");
    return {f[0], f[1], f[2]};
}

void print_feasibility_text(std::ostream& out, const FeasibilityReport& r) {
    out << "family: " << family_name(r.family) << "\nstatus: " << status_name(r.status) << "\n";
    if (r.witness)
        out << "witness: " << r.witness->message() << "\n";
    if (r.solution)
        out << "solution: " << format_cut(*r.solution) << "\n";
    if (r.manifold) {
        for (const auto& rel : r.manifold->relations)
            out << "relation: " << rel.str() << "\n";
        for (std::size_t i = 0; i < r.manifold->free_params.size(); ++i)
            out << "free: " << r.manifold->free_params[i] << " in [" << r.manifold->free_bounds[i].lower << ", "
                << r.manifold->free_bounds[i].upper << "]\n";
        if (r.manifold->free_sum)
            out << "free sum in [" << r.manifold->free_sum->lower << ", " << r.manifold->free_sum->upper << "]\n";
        for (const auto& d : r.manifold->dependents)
            out << "dependent: " << d.str(r.manifold->free_params) << "\n";
    }
}

struct SolveArgs {
    std::string rect;
    std::string family;
    std::string fractions = "1/3,1/3,1/3";
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t denominator_bound = 1000;
    bool paper_subfamily = false;
    bool relaxed = false;
    std::string format = "json";
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Rect rect = parse_rect(a.rect);
    const Family family = parse_family(a.family);
    const auto fractions = parse_scalar_list(a.fractions);
    validate_fractions(fractions);
    if (a.paper_subfamily && family != Family::Perturbed)
        throw DomainError("usage", "--paper-subfamily applies to the perturbed family only");
    if (a.denominator_bound == 0)
        throw DomainError("usage", "--denominator-bound must be positive");
    const CornerDomain domain = a.relaxed ? CornerDomain::Relaxed : CornerDomain::Strict;
    const SamplingOptions sampling{a.denominator_bound};

    FeasibilityReport report;
    switch (family) {
    case Family::Corner:
        report = solve_corner(rect, as_triple(fractions), SolverOptions{domain});
        break;
    case Family::Perturbed:
        report = solve_perturbed(rect, as_triple(fractions));
        break;
    case Family::Strips:
        report = solve_strips(rect, fractions);
        break;
    }
    std::optional<FeasibilityReport> subfamily;
    if (a.paper_subfamily)
        subfamily = solve_perturbed_paper_subfamily(rect, as_triple(fractions));

    if (a.format == "text") {
        print_feasibility_text(out, report);
        if (report.status == Status::Manifold && a.samples > 0) {
            for (const CutSpec& c : sample_manifold(report, a.samples, a.seed, sampling))
                out << "sample: " << format_cut(c) << "\n";
        }
        if (subfamily) {
            out << "-- restricted to b = c, a = d --\n";
            print_feasibility_text(out, *subfamily);
        }
        return report.feasible() ? kExitOk : kExitNegative;
    }

    Json j = header("solve");
    j["input"] = {{"rect", format_rect(rect)},
                  {"family", std::string(family_name(family))},
                  {"fractions", format_scalar_list(fractions)},
                  {"samples", a.samples},
                  {"seed", a.seed},
                  {"denominator_bound", a.denominator_bound},
                  {"paper_subfamily", a.paper_subfamily},
                  {"relaxed_corner_domain", a.relaxed}};
    j["feasibility"] = feasibility_json(rect, report, domain);
    j["samples"] = samples_json(rect, report, a.samples, a.seed, sampling);
    if (subfamily) {
        Json sub = feasibility_json(rect, *subfamily, domain);
        sub["samples"] = samples_json(rect, *subfamily, a.samples, a.seed, sampling);
        j["paper_subfamily"] = sub;
    }
    j["generator"] = kGeneratorName;
    finish(j, start);
    out << j.dump(2) << "\n";
    return report.feasible() ? kExitOk : kExitNegative;
}

struct VerifyArgs {
    std::string rect;
    std::string cut;
    std::string fractions = "1/3,1/3,1/3";
    bool relaxed = false;
    std::string format = "json";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Rect rect = parse_rect(a.rect);
    const CutSpec cut = parse_cut(a.cut);
    const auto fractions = parse_scalar_list(a.fractions);
    validate_fractions(fractions);
    const CornerDomain domain = a.relaxed ? CornerDomain::Relaxed : CornerDomain::Strict;
    const Partition partition = build_partition(rect, cut, domain);
    const PartitionVerdict v = verify_partition(rect, partition, fractions);

    if (a.format == "text") {
        out << "cut: " << format_cut(cut) << "\nverdict: " << (v.pass ? "exact-pass" : "fail") << "\n";
        for (std::size_t i = 0; i < v.areas.size(); ++i)
            out << "piece " << i << ": area " << v.areas[i] << ", target " << v.targets[i] << ", deviation "
                << v.deviations[i] << "\n";
        return v.pass ? kExitOk : kExitNegative;
    }

    Json j = header("verify");
    j["input"] = {{"rect", format_rect(rect)},
                  {"cut", format_cut(cut)},
                  {"fractions", format_scalar_list(fractions)},
                  {"relaxed_corner_domain", a.relaxed}};
    j["verification"] = {{"verdict", v.pass ? "exact-pass" : "fail"},
                         {"pass", v.pass},
                         {"areas", scalars(v.areas)},
                         {"targets", scalars(v.targets)},
                         {"deviations", scalars(v.deviations)}};
    finish(j, start);
    out << j.dump(2) << "\n";
    return v.pass ? kExitOk : kExitNegative;
}

struct SearchArgs {
    std::string rect;
    std::string family;
    std::string fractions = "1/3,1/3,1/3";
    std::size_t resolution = 50;
    std::string tolerance = "1/100";
    bool relaxed = false;
    std::size_t max_hits = 0;
    std::string format = "json";
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Rect rect = parse_rect(a.rect);
    SearchConfig cfg;
    cfg.family = parse_family(a.family);
    cfg.resolution = a.resolution;
    cfg.tolerance = Scalar::parse(a.tolerance);
    cfg.corner_domain = a.relaxed ? CornerDomain::Relaxed : CornerDomain::Strict;
    validate(cfg);
    const auto fractions = parse_scalar_list(a.fractions);
    const TargetFractions f = as_triple(fractions);
    const SearchResult res = grid_search(rect, f, cfg);
    const int code = res.hits.empty() ? kExitNegative : kExitOk;
    const std::size_t listed = a.max_hits == 0 ? res.hits.size() : std::min(a.max_hits, res.hits.size());

    if (a.format == "text") {
        out << "family: " << family_name(cfg.family) << "\nevaluated: " << res.evaluated
            << "\nhits: " << res.hits.size() << "\n";
        if (res.min_max_deviation)
            out << "min max-deviation: " << *res.min_max_deviation << "\n";
        if (res.min_piece_deviation)
            out << "min piece deviation: " << *res.min_piece_deviation << "\n";
        for (std::size_t i = 0; i < listed; ++i)
            out << "hit: " << format_cut(hit_as_cut(cfg.family, res.hits[i])) << " deviation "
                << res.hits[i].max_deviation << "\n";
        return code;
    }

    Json j = header("search");
    j["input"] = {{"rect", format_rect(rect)},
                  {"family", std::string(family_name(cfg.family))},
                  {"fractions", format_scalar_list(fractions)},
                  {"resolution", cfg.resolution},
                  {"tolerance", cfg.tolerance.str()},
                  {"relaxed_corner_domain", a.relaxed},
                  {"max_hits", a.max_hits}};
    Json hits = Json::array();
    for (std::size_t i = 0; i < listed; ++i) {
        const Hit& h = res.hits[i];
        hits.push_back({{"cut", format_cut(hit_as_cut(cfg.family, h))},
                        {"params", scalars(h.params)},
                        {"max_deviation", h.max_deviation.str()}});
    }
    j["search"] = {{"grid_points", res.grid_points},
                   {"evaluated", res.evaluated},
                   {"hit_count", res.hits.size()},
                   {"min_max_deviation", res.min_max_deviation ? Json(res.min_max_deviation->str()) : Json(nullptr)},
                   {"best_params", scalars(res.best_params)},
                   {"min_piece_deviation",
                    res.min_piece_deviation ? Json(res.min_piece_deviation->str()) : Json(nullptr)},
                   {"hits", hits}};
    finish(j, start);
    out << j.dump(2) << "\n";
    return code;
}

struct RenderArgs {
    std::string rect;
    std::string cut;
    std::string chord;
    std::string out_path;
    bool relaxed = false;
    RenderOptions opts;
    bool no_labels = false;
    std::string colors;
};

int cmd_render(RenderArgs a, std::ostream& out, std::ostream& err) {
    const Rect rect = parse_rect(a.rect);
    if (a.cut.empty() == a.chord.empty())
        throw DomainError("usage", "render needs exactly one of --cut or --chord");
    if (a.no_labels)
        a.opts.labels = false;
    if (!a.colors.empty()) {
        a.opts.colors.clear();
        for (std::string_view c : split(a.colors, ','))
            a.opts.colors.emplace_back(c);
    }

    std::string svg;
    if (!a.cut.empty()) {
        const CornerDomain domain = a.relaxed ? CornerDomain::Relaxed : CornerDomain::Strict;
        svg = render_partition(rect, build_partition(rect, parse_cut(a.cut), domain), a.opts);
    } else {
        svg = render_bisection_demo(rect, parse_chord(rect, a.chord), a.opts);
    }

    if (a.out_path == "-") {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << a.out_path << "' for writing\n";
        return kExitUsage;
    }
    file << svg;
    file.close();
    if (!file) {
        err << "error: failed writing '" << a.out_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

Rect parse_rect(std::string_view text) {
    const auto parts = split(text, 'x');
    if (parts.size() != 2)
        throw ParseError("rectangle '" + std::string(text) + "' must look like <y>x<x>, e.g. 3x2");
    return Rect(Scalar::parse(parts[0]), Scalar::parse(parts[1]));
}

std::string format_rect(const Rect& rect) { return rect.y().str() + "x" + rect.x().str(); }

std::vector<Scalar> parse_scalar_list(std::string_view text) {
    std::vector<Scalar> out;
    for (std::string_view item : split(text, ','))
        out.push_back(Scalar::parse(item));
    return out;
}

std::string format_scalar_list(const std::vector<Scalar>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i == 0 ? "" : ",") + values[i].str();
    return out;
}

Chord parse_chord(const Rect& rect, std::string_view text) {
    const auto ends = split(text, ':');
    if (ends.size() != 2)
        throw ParseError("chord '" + std::string(text) + "' must look like u1,v1:u2,v2");
    const auto point = [&](std::string_view s) {
        const auto uv = split(s, ',');
        if (uv.size() != 2)
            throw ParseError("chord endpoint '" + std::string(s) + "' must look like u,v");
        return Point{Scalar::parse(uv[0]), Scalar::parse(uv[1])};
    };
    return Chord(rect, point(ends[0]), point(ends[1]));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fair-division checks for straight cuts of a rectangle", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    const auto add_format = [](CLI::App* sub, std::string& target) {
        sub->add_option("--format", target, "Report format")->check(CLI::IsMember({"json", "text"}));
    };

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Decide feasibility of target fractions for a cut family");
    s->add_option("--rect", solve.rect, "Rectangle <y>x<x>")->required();
    s->add_option("--family", solve.family, "corner | perturbed | strips")->required();
    s->add_option("--fractions", solve.fractions, "Target fractions, left to right");
    s->add_option("--samples", solve.samples, "Manifold points to sample");
    s->add_option("--seed", solve.seed, "Sampling seed");
    s->add_option("--denominator-bound", solve.denominator_bound, "Sampling grid denominator");
    s->add_flag("--paper-subfamily", solve.paper_subfamily, "Also report the b = c, a = d restriction");
    s->add_flag("--relaxed-corner-domain", solve.relaxed, "Corner offsets only need t + s <= y");
    add_format(s, solve.format);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a concrete cut against target fractions exactly");
    v->add_option("--rect", verify.rect, "Rectangle <y>x<x>")->required();
    v->add_option("--cut", verify.cut, "Canonical cut spec")->required();
    v->add_option("--fractions", verify.fractions, "Target fractions, left to right");
    v->add_flag("--relaxed-corner-domain", verify.relaxed, "Corner offsets only need t + s <= y");
    add_format(v, verify.format);

    SearchArgs search;
    auto* g = app.add_subcommand("search", "Brute-force grid search over a cut family");
    g->add_option("--rect", search.rect, "Rectangle <y>x<x>")->required();
    g->add_option("--family", search.family, "corner | perturbed | strips")->required();
    g->add_option("--fractions", search.fractions, "Target fractions, left to right");
    g->add_option("--resolution", search.resolution, "Grid points per axis");
    g->add_option("--tolerance", search.tolerance, "Allowed deviation as a fraction of the total area");
    g->add_flag("--relaxed-corner-domain", search.relaxed, "Corner offsets only need t + s <= y");
    g->add_option("--max-hits", search.max_hits, "List at most this many hits (0 = all)");
    add_format(g, search.format);

    RenderArgs render;
    auto* r = app.add_subcommand("render", "Write an SVG figure of a partition or a bisection demo");
    r->add_option("--rect", render.rect, "Rectangle <y>x<x>")->required();
    r->add_option("--cut", render.cut, "Canonical cut spec");
    r->add_option("--chord", render.chord, "Chord u1,v1:u2,v2");
    r->add_option("--out", render.out_path, "Output path, or - for standard output")->required();
    r->add_option("--width", render.opts.width, "Canvas width in pixels");
    r->add_option("--margin", render.opts.margin, "Canvas margin in pixels");
    r->add_option("--decimals", render.opts.decimals, "Decimal places for coordinates and labels");
    r->add_option("--colors", render.colors, "Comma-separated piece fill colors");
    r->add_flag("--no-labels", render.no_labels, "Omit area labels");
    r->add_flag("--relaxed-corner-domain", render.relaxed, "Corner offsets only need t + s <= y");

    std::vector<std::string> argv_storage{kToolName};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s->parsed())
            return cmd_solve(solve, out);
        if (v->parsed())
            return cmd_verify(verify, out);
        if (g->parsed())
            return cmd_search(search, out);
        return cmd_render(render, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace fairsplit::cli
