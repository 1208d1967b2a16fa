// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <limits>

#include "detail.hpp"
#include "srlab/algorithms.hpp"
#include "srlab/bounds.hpp"
#include "srlab/chebyshev.hpp"
#include "srlab/errors.hpp"
#include "srlab/experiments/csv.hpp"

namespace srlab::experiments {

namespace {

struct Point {
    Polynomial poly;
    std::vector<double> coeffs;
    double x = 0;
    BoundReport bounds;
    double plot_x = 0;
};

struct Task {
    std::size_t point = 0;
    SRMode mode = SRMode::Nearest;
    int sample = 0;
};

double relative_error(const Rational& value, const Rational& exact) {
    if (exact == 0) {
        throw ZeroDenominator("P(x) == 0: the relative error is undefined");
    }
    return to_double(boost::multiprecision::abs(value - exact) / boost::multiprecision::abs(exact));
}

using StreamFn = std::function<std::uint64_t(std::size_t point, SRMode mode, int sample)>;
using PrefixFn = std::function<std::vector<std::string>(const Point&)>;

/// Evaluates every point under RN and `samples` draws of each SR mode and
/// writes one long-format row per value plus the two per-mode means.
/// `scale_by_cond` divides every error column by cond1.
void sweep(const std::vector<Point>& points, const std::vector<SRMode>& modes, int samples, const ExperimentConfig& cfg,
           const StreamFn& stream, const PrefixFn& prefix, bool scale_by_cond, CsvWriter& csv, Plot& plot,
           std::vector<std::string>& errors) {
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < points.size(); ++p) {
        tasks.push_back({p, SRMode::Nearest, 0});
        for (const SRMode m : modes) {
            for (int i = 0; i < samples; ++i) {
                tasks.push_back({p, m, i});
            }
        }
    }
    std::vector<double> values(tasks.size());
    std::vector<std::string> failures(tasks.size());
    detail::parallel_for(tasks.size(), cfg.workers, [&](std::size_t i) {
        const Task& t = tasks[i];
        const Point& pt = points[t.point];
        const std::string where = "x=" + format_real(pt.x) + " degree=" + std::to_string(pt.poly.degree()) +
                                  " mode=" + std::string(to_string(t.mode)) + " sample=" + std::to_string(t.sample);
        values[i] = detail::guarded(cfg, where, failures[i], [&] {
            RngStream rng(cfg.seed, stream(t.point, t.mode, t.sample));
            Rounder rounder(cfg.format, t.mode, rng);
            return horner_eval(pt.coeffs, pt.poly.variable(), pt.x, rounder).value;
        });
    });
    for (const std::string& f : failures) {
        if (!f.empty()) {
            errors.push_back(f);
        }
    }
    auto rel = [](double v, const Rational& exact) {
        return std::isnan(v) ? v : relative_error(to_rational(v), exact);
    };

    Series det{"deterministic bound", {}, true};
    Series prob{"probabilistic bound", {}, true};
    Series rn{"rn", {}, false};
    std::vector<Series> sr_samples;
    std::vector<Series> sr_means;
    for (const SRMode m : modes) {
        sr_samples.push_back({std::string(to_string(m)) + " samples", {}, false});
        sr_means.push_back({std::string(to_string(m)) + " mean of values", {}, false});
    }

    std::size_t i = 0;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Point& pt = points[p];
        const BoundReport& b = pt.bounds;
        const double cond = to_double(b.cond1);
        const double scale = scale_by_cond ? cond : 1.0;
        const double det_v = to_double(b.deterministic_bound) / scale;
        const double prob_v = to_double(b.probabilistic_bound) / scale;
        const std::vector<std::string> pre = prefix(pt);
        const double plot_x = pt.plot_x;
        det.points.emplace_back(plot_x, det_v);
        prob.points.emplace_back(plot_x, prob_v);

        auto emit = [&](std::string_view kind, SRMode m, const std::string& sample, const std::string& value,
                        double err) {
            std::vector<std::string> cells = pre;
            cells.insert(cells.end(), {std::string(kind), std::string(to_string(m)), sample, format_real(cond),
                                       format_real(det_v), format_real(prob_v), value, format_real(err / scale)});
            csv.row(cells);
        };

        const double rn_err = rel(values[i], b.exact_value);
        emit("rn", SRMode::Nearest, "0", format_real(values[i]), rn_err);
        rn.points.emplace_back(plot_x, rn_err / scale);
        ++i;
        for (std::size_t mi = 0; mi < modes.size(); ++mi) {
            Rational sum = 0;
            double err_sum = 0;
            int ok = 0;
            for (int s = 0; s < samples; ++s, ++i) {
                const double err = rel(values[i], b.exact_value);
                emit("sample", modes[mi], std::to_string(s), format_real(values[i]), err);
                sr_samples[mi].points.emplace_back(plot_x, err / scale);
                if (!std::isnan(values[i])) {
                    sum += to_rational(values[i]);
                    err_sum += err;
                    ++ok;
                }
            }
            if (ok == 0) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                emit("mean_of_values", modes[mi], "", format_real(nan), nan);
                emit("mean_of_errors", modes[mi], "", "", nan);
                continue;
            }
            const Rational mean = sum / ok;
            const double mean_err = relative_error(mean, b.exact_value);
            emit("mean_of_values", modes[mi], "", format_real(to_double(mean)), mean_err);
            emit("mean_of_errors", modes[mi], "", "", err_sum / ok);
            sr_means[mi].points.emplace_back(plot_x, mean_err / scale);
        }
    }
    plot.series.push_back(std::move(det));
    plot.series.push_back(std::move(prob));
    plot.series.push_back(std::move(rn));
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        plot.series.push_back(std::move(sr_samples[mi]));
        plot.series.push_back(std::move(sr_means[mi]));
    }
}

std::vector<SRMode> sample_modes(const ExperimentConfig& cfg) {
    std::vector<SRMode> out;
    for (const SRMode m : detail::modes_or(cfg, {SRMode::Nearness})) {
        if (m != SRMode::Nearest) {
            out.push_back(m);
        }
    }
    return out;
}

Point make_point(Polynomial poly, double x, const ExperimentConfig& cfg) {
    BoundOptions opts;
    opts.count_squaring = cfg.count_squaring;
    std::vector<double> coeffs = poly.format_coefficients(cfg.format);
    BoundReport report = bound_report(poly, to_rational(x), cfg.format, cfg.lambda, opts);
    return {std::move(poly), std::move(coeffs), x, std::move(report), x};
}

}  // namespace

Output run_horner_x_sweep(const ExperimentConfig& cfg) {
    validate(cfg);
    const Polynomial poly = parse_poly(cfg.poly);
    const auto modes = sample_modes(cfg);
    const int samples = cfg.samples.value_or(30);
    const Grid& g = cfg.x_grid;

    std::vector<Point> points;
    for (int i = 0; i < g.count; ++i) {
        const Rational xr = g.count == 1 ? g.start : g.start + (g.end - g.start) * i / (g.count - 1);
        points.push_back(make_point(poly, round_nearest_exact(xr, cfg.format), cfg));
    }

    std::string prov = detail::provenance(cfg) + " poly=" + cfg.poly + " x-grid=" + srlab::to_string(g.start) + ":" +
                       srlab::to_string(g.end) + ":" + std::to_string(g.count) + " lambda=" + format_real(cfg.lambda) +
                       " modes=" + detail::join_modes(modes) + " samples=" + std::to_string(samples) +
                       " count-squaring=" + (cfg.count_squaring ? "1" : "0");
    CsvWriter csv(prov);
    std::vector<std::string> errors;
    csv.header({"x", "x_hex", "kind", "mode", "sample_id", "cond1", "det_bound", "prob_bound", "value", "error"});
    Plot plot{"Horner forward error, " + cfg.poly, "x", "relative forward error", false, true, {}};
    sweep(
        points, modes, samples, cfg,
        [&](std::size_t p, SRMode m, int s) {
            return derive_stream_id({detail::kTagXSweep, p, detail::mode_id(m), static_cast<std::uint64_t>(s)});
        },
        [](const Point& pt) { return std::vector<std::string>{format_real(pt.x), format_hex(pt.x)}; }, false, csv,
        plot, errors);
    return {csv.str(), std::move(plot), std::move(errors)};
}

Output run_horner_n_sweep(const ExperimentConfig& cfg) {
    validate(cfg);
    const std::vector<int> n_list = cfg.n_list.empty() ? parse_n_list("2:36:2") : cfg.n_list;
    const auto modes = sample_modes(cfg);
    const int samples = cfg.samples.value_or(30);
    const double x = round_nearest_exact(cfg.x, cfg.format);

    std::vector<Point> points;
    for (const int n : n_list) {
        points.push_back(make_point(chebyshev_z_coeffs(n), x, cfg));
        points.back().plot_x = n;
    }

    std::string prov = detail::provenance(cfg) + " x=" + srlab::to_string(cfg.x) + " n-list=" + detail::join_ints(n_list) +
                       " lambda=" + format_real(cfg.lambda) + " modes=" + detail::join_modes(modes) +
                       " samples=" + std::to_string(samples) + " count-squaring=" + (cfg.count_squaring ? "1" : "0");
    CsvWriter csv(prov);
    std::vector<std::string> errors;
    csv.header({"N", "n", "kind", "mode", "sample_id", "cond1", "det_over_cond", "prob_over_cond", "value",
                "error_over_cond"});
    Plot plot{"Forward error / cond1 of Horner for T_N at x = " + format_real(x), "N", "error / cond1", false, true, {}};
    BoundOptions opts;
    opts.count_squaring = cfg.count_squaring;
    sweep(
        points, modes, samples, cfg,
        [&](std::size_t p, SRMode m, int s) {
            return derive_stream_id({detail::kTagNSweep, static_cast<std::uint64_t>(n_list[p]), detail::mode_id(m),
                                     static_cast<std::uint64_t>(s)});
        },
        [&](const Point& pt) {
            return std::vector<std::string>{std::to_string(2 * pt.poly.degree()),
                                            std::to_string(bound_degree(pt.poly, opts))};
        },
        true, csv, plot, errors);
    return {csv.str(), std::move(plot), std::move(errors)};
}

}  // namespace srlab::experiments
