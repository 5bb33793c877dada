#include "pcircle.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "pcircle/errors.hpp"
#include "pcircle/geometry.hpp"
#include "pcircle/pi_p.hpp"
#include "pcircle/power_series.hpp"
#include "pcircle/ptrig.hpp"

namespace {

thread_local std::string g_last_error;

pc_status fail(pc_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs fn, translating the C++ error taxonomy into status codes.
template <class Fn>
pc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PC_OK;
    } catch (const pcircle::Error& e) {
        g_last_error = e.what();
        return static_cast<pc_status>(static_cast<int>(e.status()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PC_ERR_ACCURACY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PC_ERR_ARGUMENT;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pcircle::quad::QuadratureConfig to_config(const pc_quad_config* cfg) {
    pcircle::quad::QuadratureConfig out;
    if (cfg) {
        out.target_rel_error = cfg->target_rel_error;
        out.max_levels = cfg->max_levels;
    }
    out.validate();
    return out;
}

void fill_estimate(pc_estimate* out, const pcircle::pi::Estimate& e) {
    out->value = e.value;
    out->error = e.error;
    out->method = static_cast<pc_pi_method>(static_cast<int>(e.method));
    out->count = e.count;
    out->has_seed = e.seed.has_value() ? 1 : 0;
    out->seed = e.seed.value_or(0);
}

} // namespace

struct pc_series {
    pcircle::series::PowerSeries impl;
};

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

const char* pc_last_error(void) { return g_last_error.c_str(); }

void pc_string_free(char* s) { delete[] s; }

pc_quad_config pc_quad_config_default(void) { return {1e-12, 10}; }

pc_status pc_eval(pc_function fn, double p, double t, const pc_quad_config* cfg, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_eval: null output pointer");
    return guarded([&] {
        const auto c = to_config(cfg);
        pcircle::trig::PParam pp(p);
        switch (fn) {
            case PC_FN_SIN: *out = pcircle::trig::sin_p(t, pp, c); return;
            case PC_FN_COS: *out = pcircle::trig::cos_p(t, pp, c); return;
            case PC_FN_TAN: *out = pcircle::trig::tan_p(t, pp, c); return;
            case PC_FN_SEC: *out = pcircle::trig::sec_p(t, pp, c); return;
            case PC_FN_CSC: *out = pcircle::trig::csc_p(t, pp, c); return;
            case PC_FN_COT: *out = pcircle::trig::cot_p(t, pp, c); return;
            case PC_FN_ARCSIN: *out = pcircle::trig::arcsin_p(t, pp, c); return;
            case PC_FN_ARCCOS: *out = pcircle::trig::arccos_p(t, pp, c); return;
        }
        throw pcircle::ArgumentError("pc_eval: unknown function tag");
    });
}

pc_status pc_areal_point(double a, double p, const pc_quad_config* cfg, double* x, double* y) {
    if (!x || !y) return fail(PC_ERR_ARGUMENT, "pc_areal_point: null output pointer");
    return guarded([&] {
        auto pt = pcircle::trig::areal_point(a, pcircle::trig::PParam(p), to_config(cfg));
        *x = pt.x;
        *y = pt.y;
    });
}

pc_status pc_sector_area(double x, double p, const pc_quad_config* cfg, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_sector_area: null output pointer");
    return guarded([&] {
        *out = pcircle::trig::sector_area(x, pcircle::trig::PParam(p), to_config(cfg));
    });
}

pc_status pc_civp_endpoint(double p, double t_end, double step, double* x_end, double* y_end) {
    if (!x_end || !y_end) return fail(PC_ERR_ARGUMENT, "pc_civp_endpoint: null output pointer");
    return guarded([&] {
        auto path = pcircle::trig::civp_integrate(pcircle::trig::PParam(p), t_end, step);
        *x_end = path.back().x;
        *y_end = path.back().y;
    });
}

pc_status pc_series_arcsin(int p, int max_order, pc_series** out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_series_arcsin: null output pointer");
    return guarded([&] { *out = new pc_series{pcircle::series::arcsin_series(p, max_order)}; });
}

pc_status pc_series_sin(int p, int max_order, pc_series** out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_series_sin: null output pointer");
    return guarded([&] { *out = new pc_series{pcircle::series::sin_series(p, max_order)}; });
}

pc_status pc_series_invert(const pc_series* f, pc_series** out) {
    if (!f || !out) return fail(PC_ERR_ARGUMENT, "pc_series_invert: null pointer");
    return guarded([&] { *out = new pc_series{pcircle::series::lagrange_invert(f->impl)}; });
}

void pc_series_free(pc_series* s) { delete s; }

int pc_series_order(const pc_series* s) { return s ? s->impl.order() : -1; }

pc_status pc_series_coeff(const pc_series* s, int k, char** fraction) {
    if (!s || !fraction) return fail(PC_ERR_ARGUMENT, "pc_series_coeff: null pointer");
    return guarded([&] { *fraction = dup_string(s->impl.coeff(k).to_string()); });
}

pc_status pc_series_ordinary_coeff(const pc_series* s, int k, char** fraction) {
    if (!s || !fraction) return fail(PC_ERR_ARGUMENT, "pc_series_ordinary_coeff: null pointer");
    return guarded([&] { *fraction = dup_string(s->impl.ordinary_coeff(k).to_string()); });
}

pc_status pc_series_json(const pc_series* s, char** json) {
    if (!s || !json) return fail(PC_ERR_ARGUMENT, "pc_series_json: null pointer");
    return guarded([&] { *json = dup_string(s->impl.to_json()); });
}

pc_status pc_sinc_limit(int p, char** fraction) {
    if (!fraction) return fail(PC_ERR_ARGUMENT, "pc_sinc_limit: null pointer");
    return guarded([&] { *fraction = dup_string(pcircle::series::sinc_limit(p).to_string()); });
}

pc_status pc_arcsin_derivative(int n, int l, char** exact_fraction, double* gamma_form,
                               double* gamma_form_shifted) {
    if (!exact_fraction || !gamma_form || !gamma_form_shifted)
        return fail(PC_ERR_ARGUMENT, "pc_arcsin_derivative: null pointer");
    return guarded([&] {
        auto rep = pcircle::series::arcsin_derivative_report(n, l);
        *exact_fraction = dup_string(rep.exact_value.to_string());
        *gamma_form = rep.gamma_form;
        *gamma_form_shifted = rep.gamma_form_shifted;
    });
}

pc_status pc_rigidity_report(int p, int depth, char** json) {
    if (!json) return fail(PC_ERR_ARGUMENT, "pc_rigidity_report: null pointer");
    return guarded(
        [&] { *json = dup_string(pcircle::series::rigidity_report(p, depth).to_json()); });
}

pc_status pc_pi_gamma(double p, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_pi_gamma: null output pointer");
    return guarded([&] { *out = pcircle::pi::gamma_form(p); });
}

pc_status pc_pi_defining_integral(double p, const pc_quad_config* cfg, pc_estimate* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_pi_defining_integral: null output pointer");
    return guarded([&] { fill_estimate(out, pcircle::pi::defining_integral(p, to_config(cfg))); });
}

pc_status pc_pi_area_integral(double p, const pc_quad_config* cfg, pc_estimate* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_pi_area_integral: null output pointer");
    return guarded([&] { fill_estimate(out, pcircle::pi::area_integral(p, to_config(cfg))); });
}

pc_status pc_pi_series(int p, unsigned long long terms, pc_estimate* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_pi_series: null output pointer");
    return guarded([&] { fill_estimate(out, pcircle::pi::series_partial_sum(p, terms)); });
}

pc_status pc_pi_monte_carlo(double p, unsigned long long n, unsigned long long seed,
                            unsigned workers, pc_estimate* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_pi_monte_carlo: null output pointer");
    return guarded([&] { fill_estimate(out, pcircle::pi::monte_carlo(p, n, seed, workers)); });
}

pc_status pc_pi_monotonicity_scan(const double* grid, size_t count, double* values,
                                  int* strictly_increasing, double* gap_to_limit) {
    if (!grid || !values || !strictly_increasing || !gap_to_limit)
        return fail(PC_ERR_ARGUMENT, "pc_pi_monotonicity_scan: null pointer");
    return guarded([&] {
        auto scan = pcircle::pi::monotonicity_scan(std::span<const double>(grid, count));
        for (size_t i = 0; i < scan.points.size(); ++i) values[i] = scan.points[i].pi_p;
        *strictly_increasing = scan.strictly_increasing ? 1 : 0;
        *gap_to_limit = scan.gap_to_limit;
    });
}

pc_status pc_area(double p, const pc_quad_config* cfg, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_area: null output pointer");
    return guarded([&] { *out = pcircle::geom::area(p, to_config(cfg)); });
}

pc_status pc_perimeter(double p, const pc_quad_config* cfg, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_perimeter: null output pointer");
    return guarded([&] { *out = pcircle::geom::perimeter(p, to_config(cfg)); });
}

pc_status pc_curvature(double x, double y, double p, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_curvature: null output pointer");
    return guarded([&] { *out = pcircle::geom::curvature_implicit(x, y, p); });
}

pc_status pc_curvature_diagonal(double p, double* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_curvature_diagonal: null output pointer");
    return guarded([&] { *out = pcircle::geom::curvature_diagonal(p); });
}

pc_status pc_optimal_p(pc_objective objective, double tol, pc_optimal_result* out) {
    if (!out) return fail(PC_ERR_ARGUMENT, "pc_optimal_p: null output pointer");
    return guarded([&] {
        pcircle::geom::Objective obj;
        switch (objective) {
            case PC_OPT_AREA: obj = pcircle::geom::Objective::area; break;
            case PC_OPT_PERIMETER: obj = pcircle::geom::Objective::perimeter; break;
            case PC_OPT_CURVATURE: obj = pcircle::geom::Objective::curvature; break;
            default: throw pcircle::ArgumentError("pc_optimal_p: unknown objective tag");
        }
        auto res = pcircle::geom::optimal_p(obj, tol);
        out->p_star = res.p_star;
        out->residual = res.residual;
        out->bracket_lo = res.bracket_lo;
        out->bracket_hi = res.bracket_hi;
        out->iterations = res.iterations;
        std::snprintf(out->note, sizeof(out->note), "%s", res.note.c_str());
    });
}

pc_status pc_pythagorean_point(unsigned long u, unsigned long v, char** x_fraction,
                               char** y_fraction) {
    if (!x_fraction || !y_fraction)
        return fail(PC_ERR_ARGUMENT, "pc_pythagorean_point: null pointer");
    return guarded([&] {
        auto pt = pcircle::geom::pythagorean_point(u, v);
        *x_fraction = dup_string(pt.x.to_string());
        *y_fraction = dup_string(pt.y.to_string());
    });
}

pc_status pc_rational_points(int p, char** json) {
    if (!json) return fail(PC_ERR_ARGUMENT, "pc_rational_points: null pointer");
    return guarded(
        [&] { *json = dup_string(pcircle::geom::classify_rational_points(p).to_json()); });
}

pc_status pc_sample_circle(double p, size_t count, const pc_quad_config* cfg, double* xs,
                           double* ys) {
    if (!xs || !ys) return fail(PC_ERR_ARGUMENT, "pc_sample_circle: null output pointer");
    if (count < 2) return fail(PC_ERR_ARGUMENT, "pc_sample_circle: need at least 2 points");
    return guarded([&] {
        const auto c = to_config(cfg);
        pcircle::trig::PParam pp(p);
        const double quarter_area = pcircle::pi::gamma_form(p) / 4.0;
        for (size_t i = 0; i < count; ++i) {
            const double a =
                quarter_area * static_cast<double>(i) / static_cast<double>(count - 1);
            auto pt = pcircle::trig::areal_point(a, pp, c);
            xs[i] = pt.x;
            ys[i] = pt.y;
        }
    });
}

pc_status pc_sample_wave(pc_function fn, double p, size_t count, const pc_quad_config* cfg,
                         double* ts, double* values) {
    if (!ts || !values) return fail(PC_ERR_ARGUMENT, "pc_sample_wave: null output pointer");
    if (count < 2) return fail(PC_ERR_ARGUMENT, "pc_sample_wave: need at least 2 points");
    if (fn != PC_FN_SIN && fn != PC_FN_COS)
        return fail(PC_ERR_ARGUMENT, "pc_sample_wave: only sin and cos can be sampled");
    return guarded([&] {
        const auto c = to_config(cfg);
        pcircle::trig::PParam pp(p);
        const double period = 2.0 * pcircle::pi::gamma_form(p);
        for (size_t i = 0; i < count; ++i) {
            const double t = period * static_cast<double>(i) / static_cast<double>(count - 1);
            ts[i] = t;
            values[i] = (fn == PC_FN_SIN) ? pcircle::trig::sin_p(t, pp, c)
                                          : pcircle::trig::cos_p(t, pp, c);
        }
    });
}

} // extern "C"
