#include "expansionlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "expansionlab/bounds.hpp"
#include "expansionlab/config.hpp"
#include "expansionlab/error.hpp"
#include "expansionlab/expansion.hpp"
#include "expansionlab/geometry.hpp"
#include "expansionlab/parallel.hpp"
#include "expansionlab/report.hpp"
#include "expansionlab/runners.hpp"

namespace explab {

namespace {

// Flags shared by every subcommand. Unset optionals leave the file/default
// value alone.
struct CommonFlags {
    std::string config_path;
    std::optional<double> tau_root, tau_eval, eps_stab;
    std::optional<std::size_t> max_boundary;
    std::optional<bool> tied_pairs;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (falls back to $EXPANSIONLAB_CONFIG)");
        cmd->add_option("--tau-root", tau_root, "relative root tolerance");
        cmd->add_option("--tau-eval", tau_eval, "boundary residual tolerance");
        cmd->add_option("--eps-stab", eps_stab, "stability tolerance");
        cmd->add_option("--max-boundary", max_boundary, "largest boundary to enumerate");
        cmd->add_flag("--tied-pairs,!--no-tied-pairs", tied_pairs, "include consecutive pairs with equal norms");
    }

    LabConfig resolve() const {
        LabConfig cfg;
        std::string path = config_path;
        if (path.empty()) {
            if (const char* env = std::getenv(kConfigEnvVar)) path = env;
        }
        if (!path.empty()) cfg = load_config(path);
        if (tau_root) cfg.expansion.tau_root = *tau_root;
        if (tau_eval) cfg.expansion.tau_eval = *tau_eval;
        if (eps_stab) cfg.eps_stab = *eps_stab;
        if (max_boundary) cfg.expansion.max_boundary_size = *max_boundary;
        if (tied_pairs) cfg.expansion.include_tied_pairs = *tied_pairs;
        cfg.validate();
        return cfg;
    }
};

struct Options {
    std::string poly, tuple, point, perm, speeds, window, csv;
    int phase = 1;
    int power = 1;
    std::optional<std::size_t> cyclic;
    std::vector<std::string> polys;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    int min_degree = 3, max_degree = 6;
    std::optional<int> fixed_phase;
    bool brief = false;
    std::string metric = "chord";
    std::optional<double> time, after, bound_d, tol;
    std::optional<std::size_t> grid;
    double start = 0.0;
    bool sort_by_angle = false, oracle = false;
    int n_poly = 3;
    int k = 4;
    std::size_t budget = 10000;
};

Polynomial require_poly(const std::string& text) { return parse_polynomial(text); }

PolyTuple tuple_input(const Options& o, Json& inputs) {
    if (!o.tuple.empty()) {
        inputs["tuple"] = o.tuple;
        return parse_tuple(o.tuple);
    }
    if (o.poly.empty()) throw Error(ErrorCode::InvalidArgument, "give --poly or --tuple");
    inputs["poly"] = o.poly;
    return tuple_repr(require_poly(o.poly));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    f << text;
}

std::string csv_number(double v) {
    std::ostringstream s;
    s << number(v).get<double>();
    return s.str();
}

Json run_expand(const Options& o, const LabConfig&, Json& inputs) {
    const PolyTuple s = tuple_input(o, inputs);
    inputs["phase"] = o.phase;
    return Json{{"source", to_json(s)}, {"phase", o.phase}, {"expanded", to_json(expand_iter(s, o.phase))}};
}

Json run_boundary(const Options& o, const LabConfig& cfg, Json& inputs) {
    const PolyTuple s = tuple_input(o, inputs);
    inputs["phase"] = o.phase;
    const BoundarySet b = boundary(s, o.phase, cfg.expansion);
    Json out = to_json(b);
    out["max_residual"] = number(max_boundary_residual(b));
    return out;
}

Json run_integral(const Options& o, const LabConfig& cfg, Json& inputs) {
    inputs["poly"] = o.poly;
    inputs["phase"] = o.phase;
    return to_json(boundary_integral(require_poly(o.poly), o.phase, cfg.expansion));
}

struct Instance {
    Polynomial f;
    int phase;
};

Json run_verify(const Options& o, const LabConfig& cfg, Json& inputs) {
    std::vector<Instance> instances;
    if (!o.polys.empty()) {
        inputs["polys"] = o.polys;
        inputs["phase"] = o.phase;
        for (const auto& text : o.polys) instances.push_back({require_poly(text), o.phase});
    } else {
        if (o.min_degree < 2 || o.max_degree < o.min_degree)
            throw Error(ErrorCode::InvalidArgument, "need 2 <= --min-degree <= --max-degree");
        inputs["seed"] = o.seed;
        inputs["count"] = o.count;
        inputs["min_degree"] = o.min_degree;
        inputs["max_degree"] = o.max_degree;
        inputs["phase"] = o.fixed_phase ? Json(*o.fixed_phase) : Json("random");
        std::mt19937_64 rng(o.seed);
        const auto span = static_cast<std::uint64_t>(o.max_degree - o.min_degree + 1);
        for (std::size_t i = 0; i < o.count; ++i) {
            const int degree = o.min_degree + static_cast<int>(rng() % span);
            const Polynomial f = random_integer_polynomial(rng, degree);
            const int phase = o.fixed_phase ? *o.fixed_phase : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(degree - 1));
            instances.push_back({f, phase});
        }
    }

    struct Outcome {
        std::optional<BoundCertificate> cert;
        std::optional<ReverseReport> reverse;
        std::string skip;
    };
    std::vector<Outcome> outcomes(instances.size());
    parallel_for(instances.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const BoundaryIntegral bi = boundary_integral(instances[i].f, instances[i].phase, cfg.expansion);
                outcomes[i].cert = certify(bi.representation, bi.boundary.points, cfg.expansion);
                outcomes[i].reverse = reverse_pairs(bi.representation, bi.boundary.points, cfg.expansion);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::InvalidArgument) throw;
                outcomes[i].skip = std::string(e.name());
            }
        }
    }, 16);

    Json certs = Json::array();
    Json skipped = Json::object();
    std::size_t valid = 0, holds = 0, pairs_hold = 0, closest = 0;
    std::ostringstream csv;
    csv << "degree,m,#B,integral_abs,M,max_gap,implied_delta,C_emp,holds\n";
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& in = instances[i];
        const auto& out = outcomes[i];
        if (!out.cert) {
            skipped[out.skip] = skipped.value(out.skip, 0) + 1;
            if (!o.brief)
                certs.push_back(Json{{"poly", to_csv(in.f)}, {"phase", in.phase}, {"skipped", out.skip}});
            continue;
        }
        const auto& c = *out.cert;
        ++valid;
        holds += c.holds;
        pairs_hold += out.reverse->all_hold;
        closest += c.closest_pair_exceeds_delta;
        const double c_emp = empirical_constant(c, ConstantTarget::delta);
        csv << in.f.degree() << ',' << in.phase << ',' << c.boundary_count << ',' << csv_number(c.integral_abs) << ','
            << csv_number(c.M_global) << ',' << csv_number(c.max_gap) << ',' << csv_number(c.implied_delta) << ','
            << csv_number(c_emp) << ',' << (c.holds ? "true" : "false") << '\n';
        if (!o.brief) {
            Json entry{{"poly", to_csv(in.f)}, {"degree", in.f.degree()}, {"phase", in.phase}};
            entry["certificate"] = to_json(c);
            entry["reverse"] = Json{{"all_hold", out.reverse->all_hold},
                                    {"cos_sign_uniform", out.reverse->cos_sign_uniform},
                                    {"aggregate_certified", out.reverse->aggregate_certified}};
            certs.push_back(entry);
        }
    }
    if (!o.csv.empty()) write_text(o.csv, csv.str());

    Json summary{{"instances", instances.size()},
                 {"valid", valid},
                 {"skipped", skipped},
                 {"forward_chain_holds", holds},
                 {"pair_bounds_hold", pairs_hold},
                 {"measured_closest_pair_exceeds_delta", closest},
                 {"all_hold", holds == valid && pairs_hold == valid}};
    Json out{{"summary", summary}};
    if (!o.brief) out["certificates"] = certs;
    return out;
}

Json run_rotate(const Options& o, const LabConfig& cfg, Json& inputs) {
    inputs["poly"] = o.poly;
    inputs["phase"] = o.phase;
    inputs["power"] = o.power;
    const BoundaryIntegral bi = boundary_integral(require_poly(o.poly), o.phase, cfg.expansion);
    const BoundarySet& b = bi.boundary;

    std::optional<Rotation> base;
    if (!o.perm.empty()) {
        inputs["perm"] = o.perm;
        std::vector<std::size_t> p;
        for (double v : parse_real_list(o.perm)) {
            if (v < 0 || v != std::floor(v)) throw Error(ErrorCode::InvalidPermutation, "permutation entries must be non-negative integers");
            p.push_back(static_cast<std::size_t>(v));
        }
        base = Rotation(std::move(p));
    } else {
        const std::size_t shift = o.cyclic.value_or(1);
        inputs["cyclic"] = shift;
        base = Rotation::cyclic(b.size(), shift);
    }
    const Rotation r = rotation_pow(*base, o.power);
    const auto rotated = apply_rotation(r, b);

    auto sorted_copy = [](std::vector<PointTuple> v) {
        std::sort(v.begin(), v.end(), [](const PointTuple& a, const PointTuple& c) { return a.coords() < c.coords(); });
        return v;
    };
    const bool same_multiset = sorted_copy(rotated) == sorted_copy(b.points);

    return Json{{"boundary", to_json(b.points)},
                {"rotation", r.perm()},
                {"rotated", to_json(rotated)},
                {"multiset_preserved", same_multiset},
                {"stability", to_json(is_stable(r, b, cfg.eps_stab))},
                {"stability_report", to_json(stability_report(bi.f, o.phase, cfg.expansion, cfg.eps_stab))}};
}

Json run_defoliate(const Options& o, const LabConfig& cfg, Json& inputs) {
    std::vector<PointTuple> points;
    if (!o.point.empty()) {
        inputs["point"] = o.point;
        points.push_back(parse_point(o.point));
    } else {
        const PolyTuple s = tuple_input(o, inputs);
        inputs["phase"] = o.phase;
        points = boundary(s, o.phase, cfg.expansion).points;
    }
    std::vector<PointTuple> out;
    for (const auto& p : points) out.push_back(defoliate(p));
    return Json{{"points", to_json(points)}, {"defoliated", to_json(out)}};
}

Json run_runners(const Options& o, const LabConfig& cfg, Json& inputs) {
    inputs["speeds"] = o.speeds;
    const std::vector<double> speeds = parse_real_list(o.speeds);
    Json out = Json::object();

    if (o.oracle) {
        const std::size_t grid = o.grid.value_or(cfg.oracle_grid);
        inputs["oracle"] = true;
        inputs["grid"] = grid;
        out["oracle"] = to_json(lonely_oracle(speeds, grid, cfg.refine_tol));
        return out;
    }

    RunnerConfig rc;
    rc.speeds = speeds;
    rc.metric = parse_metric(o.metric);
    rc.start_angle = o.start;
    rc.sort_by_angle = o.sort_by_angle;
    rc.validate();
    inputs["metric"] = o.metric;
    inputs["sort_by_angle"] = o.sort_by_angle;
    const double tol = o.tol.value_or(cfg.gap_tol);
    std::ostringstream csv;

    if (o.time) {
        inputs["time"] = *o.time;
        const RunnerSnapshot s = positions_at(rc, *o.time);
        out["snapshot"] = to_json(s, rc.metric);
        csv << "time,runner,angle\n";
        for (std::size_t i = 0; i < s.angles.size(); ++i) csv << csv_number(s.time) << ',' << i << ',' << csv_number(s.angles[i]) << '\n';
        if (o.bound_d) {
            inputs["D"] = *o.bound_d;
            inputs["n_poly"] = o.n_poly;
            out["bound_check"] = to_json(conditional_bound_check(rc, *o.time, *o.bound_d, o.n_poly, tol));
        }
    }
    if (!o.window.empty()) {
        const auto w = parse_real_list(o.window);
        if (w.size() != 2) throw Error(ErrorCode::InvalidArgument, "--window takes t0,t1");
        EqualGapOptions eg;
        eg.t0 = w[0];
        eg.t1 = w[1];
        eg.tol = tol;
        eg.grid = o.grid.value_or(cfg.equal_gap_grid);
        eg.after = o.after;
        inputs["window"] = o.window;
        inputs["tol"] = tol;
        inputs["grid"] = eg.grid;
        if (o.after) inputs["after"] = *o.after;
        const auto times = equal_gap_times(rc, eg);
        out["equal_gap_times"] = numbers(times);
        out["equal_gap_count"] = times.size();
        if (!o.time) csv << "time,equal_gap_residual\n";
        for (double t : times)
            if (!o.time) csv << csv_number(t) << ',' << csv_number(equal_gap_residual(positions_at(rc, t))) << '\n';
    }
    if (!o.time && o.window.empty())
        throw Error(ErrorCode::InvalidArgument, "runners needs --time, --window or --oracle");
    if (!o.csv.empty()) write_text(o.csv, csv.str());
    return out;
}

Json run_construct(const Options& o, const LabConfig& cfg, Json& inputs) {
    inputs["k"] = o.k;
    inputs["phase"] = o.phase;
    inputs["budget"] = o.budget;
    inputs["seed"] = o.seed;
    SearchOptions s;
    s.k = o.k;
    s.phase = o.phase;
    s.budget = o.budget;
    s.seed = o.seed;
    s.config = cfg.expansion;
    const auto f = find_poly_with_boundary_size(s);
    if (!f) return Json{{"found", false}};
    const BoundarySet b = boundary(tuple_repr(*f), o.phase, cfg.expansion);
    return Json{{"found", true}, {"poly", to_json(*f)}, {"boundary_count", b.size()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"expansionlab: polynomial expansion calculus and lonely-runner checks"};
    app.require_subcommand(1);
    Options o;
    CommonFlags common;

    auto add_poly = [&](CLI::App* c) { c->add_option("--poly", o.poly, "ascending coefficients, e.g. 1,-1,1,1"); };
    auto add_phase = [&](CLI::App* c) { c->add_option("--phase", o.phase, "expansion phase m")->capture_default_str(); };

    auto* expand_cmd = app.add_subcommand("expand", "apply the expansion map m times");
    add_poly(expand_cmd);
    expand_cmd->add_option("--tuple", o.tuple, "semicolon-separated polynomials");
    add_phase(expand_cmd);

    auto* boundary_cmd = app.add_subcommand("boundary", "boundary points of the phase-m expansion");
    add_poly(boundary_cmd);
    boundary_cmd->add_option("--tuple", o.tuple, "semicolon-separated polynomials");
    add_phase(boundary_cmd);

    auto* integral_cmd = app.add_subcommand("integral", "boundary integral with per-pair breakdown");
    integral_cmd->add_option("--poly", o.poly, "ascending coefficients")->required();
    add_phase(integral_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "bound certificates for listed or random polynomials");
    verify_cmd->add_option("--poly", o.polys, "polynomial (repeatable); omit for a random campaign");
    add_phase(verify_cmd);
    verify_cmd->add_option("--seed", o.seed, "campaign seed")->capture_default_str();
    verify_cmd->add_option("--count", o.count, "campaign size")->capture_default_str();
    verify_cmd->add_option("--min-degree", o.min_degree)->capture_default_str();
    verify_cmd->add_option("--max-degree", o.max_degree)->capture_default_str();
    verify_cmd->add_option("--fixed-phase", o.fixed_phase, "use this phase for every random instance");
    verify_cmd->add_option("--csv", o.csv, "write the CSV summary here");
    verify_cmd->add_flag("--brief", o.brief, "summary only");

    auto* rotate_cmd = app.add_subcommand("rotate", "permute the boundary and check stability");
    rotate_cmd->add_option("--poly", o.poly)->required();
    add_phase(rotate_cmd);
    rotate_cmd->add_option("--perm", o.perm, "0-based permutation, e.g. 1,0,2,3");
    rotate_cmd->add_option("--cyclic", o.cyclic, "cyclic shift (default 1) when --perm is absent");
    rotate_cmd->add_option("--power", o.power, "rotation frequency s")->capture_default_str();

    auto* defoliate_cmd = app.add_subcommand("defoliate", "project points onto the unit sphere");
    defoliate_cmd->add_option("--point", o.point, "comma-separated coordinates");
    add_poly(defoliate_cmd);
    defoliate_cmd->add_option("--tuple", o.tuple);
    add_phase(defoliate_cmd);

    auto* runners_cmd = app.add_subcommand("runners", "runner snapshots, equal-gap search, bounds, oracle");
    runners_cmd->add_option("--speeds", o.speeds, "comma-separated speeds")->required();
    runners_cmd->add_option("--metric", o.metric, "chord | arc | normalized")->capture_default_str();
    runners_cmd->add_option("--start", o.start, "common start angle");
    runners_cmd->add_option("--time", o.time, "snapshot time");
    runners_cmd->add_option("--window", o.window, "t0,t1 for the equal-gap search");
    runners_cmd->add_option("--tol", o.tol, "equal-gap tolerance");
    runners_cmd->add_option("--grid", o.grid, "grid size");
    runners_cmd->add_option("--after", o.after, "keep equal-gap times t > after");
    runners_cmd->add_flag("--sort-by-angle", o.sort_by_angle, "consecutive = angular order");
    runners_cmd->add_option("--bound", o.bound_d, "check the conditional bound with this D at --time");
    runners_cmd->add_option("--n-poly", o.n_poly, "polynomial degree for the bound")->capture_default_str();
    runners_cmd->add_flag("--oracle", o.oracle, "brute-force gap of loneliness");
    runners_cmd->add_option("--csv", o.csv, "write CSV here");

    auto* construct_cmd = app.add_subcommand("construct", "search for f with a boundary of size k");
    construct_cmd->add_option("--k", o.k)->required();
    add_phase(construct_cmd);
    construct_cmd->add_option("--budget", o.budget)->capture_default_str();
    construct_cmd->add_option("--seed", o.seed)->capture_default_str();

    for (auto* c : app.get_subcommands({})) common.attach(c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    RunReport report;
    report.command = cmd->get_name();
    try {
        const LabConfig cfg = common.resolve();
        report.config = to_json(cfg);
        using Runner = Json (*)(const Options&, const LabConfig&, Json&);
        const std::pair<CLI::App*, Runner> table[] = {
            {expand_cmd, run_expand},   {boundary_cmd, run_boundary},   {integral_cmd, run_integral},
            {verify_cmd, run_verify},   {rotate_cmd, run_rotate},       {defoliate_cmd, run_defoliate},
            {runners_cmd, run_runners}, {construct_cmd, run_construct},
        };
        for (const auto& [c, fn] : table)
            if (c == cmd) report.results = fn(o, cfg, report.inputs);
    } catch (const Error& e) {
        const bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ParseError ||
                           e.code() == ErrorCode::UnknownKey;
        if (usage) {
            err << "error: " << e.name() << ": " << e.what() << "\n";
            return kExitUsage;
        }
        Json doc = serialize(report);
        doc["error"] = Json{{"code", e.name()}, {"message", e.what()}};
        out << dump(doc) << "\n";
        return kExitDomainError;
    }
    out << dump(serialize(report)) << "\n";
    return kExitOk;
}

}  // namespace explab
