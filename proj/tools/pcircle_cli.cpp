// Command-line front end for libpcircle. Talks to the library exclusively
// through the C API in pcircle.h; everything here is argument parsing and
// output formatting.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcircle.h"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// Plain and CSV output carry 12 significant digits; --json carries full
// double precision.
std::string format_plain(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// RFC 4180: quote fields containing separators, quotes, or newlines.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += "\"";
    return out;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { pc_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(pc_status status) {
    std::fprintf(stderr, "error: %s\n", pc_last_error());
    std::exit(static_cast<int>(status));
}

void check(pc_status status) {
    if (status != PC_OK) die(status);
}

json envelope(const std::string& command, json parameters, json result, json provenance) {
    json env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["result"] = std::move(result);
    env["provenance"] = std::move(provenance);
    return env;
}

void emit(const json& env) { std::printf("%s\n", env.dump().c_str()); }

json estimate_json(const pc_estimate& e) {
    static const char* kMethodNames[] = {"gamma", "defining-integral", "area-integral", "series",
                                         "monte-carlo"};
    json j;
    j["value"] = e.value;
    j["error"] = e.error;
    j["method"] = kMethodNames[e.method];
    j["n"] = e.count;
    if (e.has_seed) j["seed"] = e.seed;
    return j;
}

void print_estimate_plain(const pc_estimate& e) {
    static const char* kMethodNames[] = {"gamma", "defining-integral", "area-integral", "series",
                                         "monte-carlo"};
    std::printf("value=%s error=%s method=%s n=%llu", format_plain(e.value).c_str(),
                format_plain(e.error).c_str(), kMethodNames[e.method],
                static_cast<unsigned long long>(e.count));
    if (e.has_seed) std::printf(" seed=%llu", static_cast<unsigned long long>(e.seed));
    std::printf("\n");
}

struct TolOption {
    double tol = 1e-12;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "quadrature target relative error")
            ->envname("PCIRCLE_TOL")
            ->capture_default_str();
    }
    pc_quad_config config() const {
        pc_quad_config cfg = pc_quad_config_default();
        cfg.target_rel_error = tol;
        return cfg;
    }
};

json tolerances_json(const TolOption& t) {
    json j;
    j["quadrature_rel"] = t.tol;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"trigonometry, exact series, generalized pi, and geometry on the curves "
                 "|x|^p + |y|^p = 1"};
    app.require_subcommand(1);

    // ---- eval ----------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate a p-trigonometric function");
    std::string eval_fn;
    double eval_p = 2.0;
    std::optional<double> eval_t, eval_x;
    bool eval_json = false;
    TolOption eval_tol;
    eval->add_option("function", eval_fn, "sin|cos|tan|sec|csc|cot|arcsin|arccos")
        ->required()
        ->check(CLI::IsMember({"sin", "cos", "tan", "sec", "csc", "cot", "arcsin", "arccos"}));
    eval->add_option("--p", eval_p, "exponent of the p-circle (real >= 1)")->required();
    eval->add_option("--t", eval_t, "argument for the direct functions");
    eval->add_option("--x", eval_x, "abscissa in [0,1] for arcsin/arccos");
    eval->add_flag("--json", eval_json, "emit a JSON envelope");
    eval_tol.attach(eval);
    eval->callback([&] {
        static const std::vector<std::string> names = {"sin", "cos", "tan",    "sec",
                                                       "csc", "cot", "arcsin", "arccos"};
        pc_function fn = PC_FN_SIN;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == eval_fn) fn = static_cast<pc_function>(i);
        if (eval_t.has_value() == eval_x.has_value()) {
            std::fprintf(stderr, "error: provide exactly one of --t or --x\n");
            std::exit(PC_ERR_ARGUMENT);
        }
        const double arg = eval_t ? *eval_t : *eval_x;
        const pc_quad_config cfg = eval_tol.config();
        double out = 0.0;
        check(pc_eval(fn, eval_p, arg, &cfg, &out));
        if (eval_json) {
            json params{{"function", eval_fn}, {"p", eval_p}, {"tol", eval_tol.tol}};
            params[eval_t ? "t" : "x"] = arg;
            emit(envelope("eval", params, out,
                          {{"method", "tanh-sinh quadrature + newton inversion"},
                           {"tolerances", tolerances_json(eval_tol)}}));
        } else {
            std::printf("%s\n", format_plain(out).c_str());
        }
    });

    // ---- series ---------------------------------------------------------
    auto* seriescmd = app.add_subcommand("series", "exact Taylor coefficients (integer p >= 2)");
    std::string series_kind;
    int series_p = 2, series_order = 9;
    bool series_rigidity = false, series_json = false;
    seriescmd->add_option("kind", series_kind, "arcsin|sin")
        ->required()
        ->check(CLI::IsMember({"arcsin", "sin"}));
    seriescmd->add_option("--p", series_p, "integer exponent >= 2")->required();
    seriescmd->add_option("--order", series_order, "truncation order")->required();
    seriescmd->add_flag("--rigidity", series_rigidity,
                        "append the simultaneous-vanishing report");
    seriescmd->add_flag("--json", series_json, "emit a JSON envelope");
    seriescmd->callback([&] {
        pc_series* s = nullptr;
        check(series_kind == "arcsin" ? pc_series_arcsin(series_p, series_order, &s)
                                      : pc_series_sin(series_p, series_order, &s));
        std::unique_ptr<pc_series, decltype(&pc_series_free)> guard(s, &pc_series_free);
        OwnedString series_text;
        check(pc_series_json(s, &series_text.ptr));
        json series_obj = json::parse(series_text.str());

        OwnedString rigidity_text;
        json rigidity_obj;
        if (series_rigidity) {
            check(pc_rigidity_report(series_p, series_order, &rigidity_text.ptr));
            rigidity_obj = json::parse(rigidity_text.str());
        }

        if (series_json) {
            json result{{"series", series_obj}};
            if (series_rigidity) result["rigidity"] = rigidity_obj;
            emit(envelope("series",
                          {{"kind", series_kind},
                           {"p", series_p},
                           {"order", series_order},
                           {"rigidity", series_rigidity}},
                          result, {{"method", "exact rational arithmetic"}}));
        } else {
            std::printf("# %s series, p=%d, order %d; columns: order, coefficient of z^k/k!, "
                        "coefficient of z^k\n",
                        series_kind.c_str(), series_p, series_order);
            for (int k = 0; k <= pc_series_order(s); ++k) {
                OwnedString c, o;
                check(pc_series_coeff(s, k, &c.ptr));
                if (c.str() == "0/1") continue;
                check(pc_series_ordinary_coeff(s, k, &o.ptr));
                std::printf("%d\t%s\t%s\n", k, c.str().c_str(), o.str().c_str());
            }
            if (series_rigidity) {
                std::printf("rigidity: %s\n",
                            rigidity_obj["summary"].get<std::string>().c_str());
            }
        }
    });

    // ---- pi --------------------------------------------------------------
    auto* picmd = app.add_subcommand("pi", "generalized pi by one of five methods");
    double pi_p = 2.0;
    std::string pi_method = "gamma";
    unsigned long long pi_n = 1000000;
    std::optional<unsigned long long> pi_seed;
    unsigned pi_workers = 4;
    unsigned long long pi_terms = 64;
    std::string pi_grid;
    bool pi_json = false;
    TolOption pi_tol;
    picmd->add_option("--p", pi_p, "exponent of the p-circle");
    picmd->add_option("--method", pi_method, "gamma|integral|area|series|mc")
        ->check(CLI::IsMember({"gamma", "integral", "area", "series", "mc"}));
    picmd->add_option("--n", pi_n, "Monte Carlo sample count");
    picmd->add_option("--seed", pi_seed, "Monte Carlo seed (required for mc)");
    picmd->add_option("--workers", pi_workers, "Monte Carlo worker streams")
        ->capture_default_str();
    picmd->add_option("--terms", pi_terms, "series term count");
    picmd->add_option("--grid", pi_grid, "comma-separated p values; emits CSV of (p, pi_p)");
    picmd->add_flag("--json", pi_json, "emit a JSON envelope");
    pi_tol.attach(picmd);
    picmd->callback([&] {
        if (!pi_grid.empty()) {
            std::vector<double> grid;
            std::size_t pos = 0;
            while (pos < pi_grid.size()) {
                std::size_t next = pi_grid.find(',', pos);
                if (next == std::string::npos) next = pi_grid.size();
                grid.push_back(std::atof(pi_grid.substr(pos, next - pos).c_str()));
                pos = next + 1;
            }
            std::vector<double> values(grid.size());
            int increasing = 0;
            double gap = 0.0;
            check(pc_pi_monotonicity_scan(grid.data(), grid.size(), values.data(), &increasing,
                                          &gap));
            if (pi_json) {
                json rows = json::array();
                for (std::size_t i = 0; i < grid.size(); ++i)
                    rows.push_back({{"p", grid[i]}, {"pi_p", values[i]}});
                emit(envelope("pi",
                              {{"grid", pi_grid}, {"method", "gamma"}},
                              {{"rows", rows},
                               {"strictly_increasing", increasing != 0},
                               {"gap_to_limit", gap}},
                              {{"method", "gamma"}}));
            } else {
                std::printf("p,pi_p\n");
                for (std::size_t i = 0; i < grid.size(); ++i)
                    std::printf("%s,%s\n", csv_field(format_plain(grid[i])).c_str(),
                                csv_field(format_plain(values[i])).c_str());
            }
            return;
        }

        const pc_quad_config cfg = pi_tol.config();
        pc_estimate est{};
        json params{{"p", pi_p}, {"method", pi_method}};
        if (pi_method == "gamma") {
            double v = 0.0;
            check(pc_pi_gamma(pi_p, &v));
            est.value = v;
            est.method = PC_PI_GAMMA;
        } else if (pi_method == "integral") {
            check(pc_pi_defining_integral(pi_p, &cfg, &est));
            params["tol"] = pi_tol.tol;
        } else if (pi_method == "area") {
            check(pc_pi_area_integral(pi_p, &cfg, &est));
            params["tol"] = pi_tol.tol;
        } else if (pi_method == "series") {
            check(pc_pi_series(static_cast<int>(pi_p), pi_terms, &est));
            params["terms"] = pi_terms;
        } else { // mc
            if (!pi_seed.has_value()) {
                std::fprintf(stderr,
                             "error: --seed is required for the Monte Carlo method "
                             "(reproducibility is mandatory; there is no wall-clock seeding)\n");
                std::exit(PC_ERR_ARGUMENT);
            }
            check(pc_pi_monte_carlo(pi_p, pi_n, *pi_seed, pi_workers, &est));
            params["n"] = pi_n;
            params["seed"] = *pi_seed;
            params["workers"] = pi_workers;
        }
        if (pi_json) {
            json prov{{"method", estimate_json(est)["method"]},
                      {"tolerances", tolerances_json(pi_tol)}};
            if (est.has_seed) prov["seed"] = est.seed;
            json result = (pi_method == "gamma") ? json(est.value) : estimate_json(est);
            if (pi_method == "series")
                result["error_note"] = "last-term magnitude, indicative only";
            emit(envelope("pi", params, result, prov));
        } else if (pi_method == "gamma") {
            std::printf("%s\n", format_plain(est.value).c_str());
        } else {
            print_estimate_plain(est);
            if (pi_method == "series")
                std::printf("note: error is the last-term magnitude, indicative only\n");
        }
    });

    // ---- optimal -----------------------------------------------------------
    auto* optimal = app.add_subcommand("optimal", "p halfway between circle and square");
    std::string opt_objective;
    double opt_tol = 1e-10;
    bool opt_json = false;
    optimal->add_option("objective", opt_objective, "area|perimeter|curvature")
        ->required()
        ->check(CLI::IsMember({"area", "perimeter", "curvature"}));
    optimal->add_option("--tol", opt_tol, "solver tolerance (>= 1e-10)")->capture_default_str();
    optimal->add_flag("--json", opt_json, "emit a JSON envelope");
    optimal->callback([&] {
        pc_objective obj = opt_objective == "area"        ? PC_OPT_AREA
                           : opt_objective == "perimeter" ? PC_OPT_PERIMETER
                                                          : PC_OPT_CURVATURE;
        pc_optimal_result res{};
        check(pc_optimal_p(obj, opt_tol, &res));
        if (opt_json) {
            json result{{"p_star", res.p_star},
                        {"residual", res.residual},
                        {"bracket", {res.bracket_lo, res.bracket_hi}},
                        {"iterations", res.iterations}};
            if (res.note[0]) result["note"] = res.note;
            emit(envelope("optimal", {{"objective", opt_objective}, {"tol", opt_tol}}, result,
                          {{"method", "brent"}, {"tolerances", {{"solver", opt_tol}}}}));
        } else {
            std::printf("p_star=%s residual=%s iterations=%d\n", format_plain(res.p_star).c_str(),
                        format_plain(res.residual).c_str(), res.iterations);
            if (res.note[0]) std::printf("note: %s\n", res.note);
        }
    });

    // ---- sample -------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "CSV samples of the arc or the waves");
    double sample_p = 2.0;
    std::size_t sample_count = 65;
    std::string sample_what = "circle";
    bool sample_json = false;
    TolOption sample_tol;
    sample->add_option("--p", sample_p, "exponent of the p-circle")->required();
    sample->add_option("--count", sample_count, "number of rows (>= 2)")->required();
    sample->add_option("--what", sample_what, "circle|sin|cos")
        ->check(CLI::IsMember({"circle", "sin", "cos"}));
    sample->add_flag("--json", sample_json, "emit a JSON envelope");
    sample_tol.attach(sample);
    sample->callback([&] {
        const pc_quad_config cfg = sample_tol.config();
        std::vector<double> a(sample_count), b(sample_count);
        const bool circle = sample_what == "circle";
        if (circle) {
            check(pc_sample_circle(sample_p, sample_count, &cfg, a.data(), b.data()));
        } else {
            check(pc_sample_wave(sample_what == "sin" ? PC_FN_SIN : PC_FN_COS, sample_p,
                                 sample_count, &cfg, a.data(), b.data()));
        }
        if (sample_json) {
            json rows = json::array();
            for (std::size_t i = 0; i < sample_count; ++i) rows.push_back({a[i], b[i]});
            emit(envelope("sample",
                          {{"p", sample_p},
                           {"count", sample_count},
                           {"what", sample_what},
                           {"tol", sample_tol.tol}},
                          {{"columns", circle ? json::array({"x", "y"}) : json::array({"t", "value"})},
                           {"rows", rows}},
                          {{"method", circle ? "areal parametrization" : "argument grid"},
                           {"tolerances", tolerances_json(sample_tol)}}));
        } else {
            std::printf(circle ? "x,y\n" : "t,value\n");
            for (std::size_t i = 0; i < sample_count; ++i)
                std::printf("%s,%s\n", csv_field(format_plain(a[i])).c_str(),
                            csv_field(format_plain(b[i])).c_str());
        }
    });

    // ---- points ---------------------------------------------------------------
    auto* points = app.add_subcommand("points", "rational points on the p-circle");
    int points_p = 2;
    bool points_json = false;
    points->add_option("--p", points_p, "integer exponent >= 1")->required();
    points->add_flag("--json", points_json, "emit a JSON envelope");
    points->callback([&] {
        OwnedString text;
        check(pc_rational_points(points_p, &text.ptr));
        json report = json::parse(text.str());
        if (points_json) {
            emit(envelope("points", {{"p", points_p}}, report,
                          {{"method", "number-theoretic classification"}}));
        } else {
            const std::string kind = report["kind"];
            if (kind == "four-axis-points") {
                std::printf("p=%d: four trivial points (FLT): (1,0), (-1,0), (0,1), (0,-1)\n",
                            points_p);
            } else {
                std::printf("p=%d: %s\n", points_p,
                            kind == "infinite-dense" ? "infinitely many rational points (dense)"
                                                     : "infinitely many rational points");
                for (const auto& pt : report["points"])
                    std::printf("  (%s, %s)\n", pt[0].get<std::string>().c_str(),
                                pt[1].get<std::string>().c_str());
            }
            std::printf("justification: %s\n",
                        report["justification"].get<std::string>().c_str());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return PC_ERR_ARGUMENT;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
