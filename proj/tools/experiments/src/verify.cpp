// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "detail.hpp"
#include "srlab/algorithms.hpp"
#include "srlab/bounds.hpp"
#include "srlab/chebyshev.hpp"
#include "srlab/errors.hpp"
#include "srlab/experiments/csv.hpp"
#include "srlab/stats.hpp"

namespace srlab::experiments {

namespace {

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

/// Uniform integer in [lo, hi].
int uniform_int(RngStream& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng.next_u64() % span);
}

/// SR-nearness with the comparison reversed: rounds up with probability
/// 1 - theta. Only used to check that the unbiasedness suite can fail.
double flipped_nearness(const ExactValue& x, const FloatFormat& fmt, RngStream& rng) {
    const RoundingNeighborhood nb = neighborhood(x, fmt);
    if (nb.representable()) {
        return nb.down;
    }
    return rng.draw_unit() < 1.0 - nb.theta ? nb.up : nb.down;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma1",  "toy-expectation", "theta-constancy",
                                                   "sqrt-asymptotics", "unbiasedness",    "mean-independence"};
    return names;
}

SuiteResult suite_floor_scaling(const FloatFormat& fmt, std::uint64_t seed, int trials) {
    RngStream rng(seed, derive_stream_id({detail::kTagVerify, 1}));
    const int p = fmt.precision();
    // Keep the upper neighbor finite and the scaled values inside double.
    const int e_lo = std::max(fmt.emin(), -900);
    const int e_hi = std::min(fmt.emax() - 1, 900);
    int failures = 0;
    int oracle_mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        const int e = uniform_int(rng, e_lo, e_hi);
        const double m = 1.0 + static_cast<double>(rng.next_u64() >> 12) * 0x1.0p-52;
        const double x = (rng.next_u64() & 1 ? -1.0 : 1.0) * std::ldexp(m, e);
        const RoundingNeighborhood nb = neighborhood(ExactValue::of(x), fmt);
        const double lhs = std::ldexp(nb.down, p - 1 - e);
        const double rhs = std::floor(std::ldexp(x, p - 1 - e));
        if (lhs != rhs) {
            ++failures;
        }
        const ExactNeighborhood ref = exact_neighborhood(to_rational(x), fmt);
        if (to_rational(nb.down) != ref.down || to_rational(nb.up) != ref.up) {
            ++oracle_mismatches;
        }
    }
    std::ostringstream os;
    os << "seed=" << seed << " trials=" << trials << " failures=" << failures
       << " oracle_mismatches=" << oracle_mismatches;
    return {"lemma1", failures == 0 && oracle_mismatches == 0, os.str()};
}

SuiteResult suite_toy_expectation(int precision) {
    const FloatFormat fmt = FloatFormat::toy(precision);
    const double ulp = fmt.ulp_at(0);
    // 64 sub-steps per ulp; every point is a dyadic rational.
    constexpr int kRefine = 64;
    const int per_binade = (1 << (precision - 1)) * kRefine;
    int checked = 0;
    int failures = 0;
    for (int j = 0; j < per_binade; ++j) {
        if (j % kRefine == 0) {
            continue;
        }
        const double x = 1.0 + j * (ulp / kRefine);
        const ExactValue xv = ExactValue::of(x);
        const ExactNeighborhood nb = exact_neighborhood(to_rational(x), fmt);
        const Rational eps = nb.up - nb.down;
        const Rational xr = to_rational(x);
        const Rational mid = (nb.down + nb.up) / 2;

        const Rational p_near = to_rational(probability_up(xv, fmt, SRMode::Nearness));
        const Rational p_uod = to_rational(probability_up(xv, fmt, SRMode::UpOrDown));
        const bool ok = nb.down + p_near * eps == xr && nb.down + p_uod * eps == mid &&
                        to_rational(expected_round(xv, fmt, SRMode::Nearness)) == xr &&
                        to_rational(expected_round(xv, fmt, SRMode::UpOrDown)) == mid;
        failures += ok ? 0 : 1;
        ++checked;
    }
    std::ostringstream os;
    os << "p=" << precision << " points=" << checked << " failures=" << failures;
    return {"toy-expectation", failures == 0 && checked > 0, os.str()};
}

SuiteResult suite_theta_constancy(const FloatFormat& fmt, std::uint64_t seed, int random_n) {
    RngStream rng(seed, derive_stream_id({detail::kTagVerify, 3}));
    std::vector<int> ns = {20};
    for (int i = 0; i < random_n; ++i) {
        ns.push_back(uniform_int(rng, 2, 10000));
    }
    long rows = 0;
    int failures = 0;
    for (const int n : ns) {
        const double h = integration_step(n, fmt);
        int current = std::numeric_limits<int>::min();
        for (const BiasTableRow& r : bias_table(n, fmt, 1)) {
            if (r.exponent != current) {
                current = r.exponent;
                continue;
            }
            ++rows;
            if (r.theta != theta_of_interval(h, r.exponent, fmt)) {
                ++failures;
            }
        }
    }
    std::ostringstream os;
    os << "seed=" << seed << " n_values=" << ns.size() << " rows=" << rows << " failures=" << failures;
    return {"theta-constancy", failures == 0, os.str()};
}

SuiteResult suite_sqrt_asymptotics(const FloatFormat& fmt) {
    const Wide u(fmt.unit_roundoff());
    bool ok = true;
    std::ostringstream os;
    for (const int n : {10, 100, 1000}) {
        const Wide ratio = boost::multiprecision::sqrt(u * gamma(4 * n, u)) / (2 * boost::multiprecision::sqrt(Wide(n)) * u);
        const Wide dev = boost::multiprecision::abs(ratio - 1);
        const Wide tol = 10 * n * u;
        ok = ok && dev <= tol;
        os << "n=" << n << " deviation=" << format_real(to_double(dev)) << " tol=" << format_real(to_double(tol)) << ' ';
    }
    std::string detail = os.str();
    detail.pop_back();
    return {"sqrt-asymptotics", ok, detail};
}

SuiteResult suite_unbiasedness(const FloatFormat& fmt, std::uint64_t seed, int samples, bool inject_bug) {
    constexpr int kSteps = 20;
    const double h = integration_step(kSteps, fmt);
    SampleSet set{{}, 0.0, seed, SRMode::Nearness};
    set.values.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        RngStream rng(seed, derive_stream_id({detail::kTagVerify, 5, static_cast<std::uint64_t>(i)}));
        double s = h;
        ExactValue last = ExactValue::of(h);
        for (int k = 1; k < kSteps; ++k) {
            last = ExactValue::sum(s, h);
            s = inject_bug ? flipped_nearness(last, fmt, rng) : sr_round(last, fmt, SRMode::Nearness, rng);
        }
        set.values.push_back((s - last.hi) - last.lo);
    }
    const UnbiasednessReport r = unbiasedness_test(set, 4.0);
    return {"unbiasedness", r.passed, "N=20 final-step error, " + r.describe()};
}

SuiteResult suite_mean_independence(const FloatFormat& fmt, std::uint64_t seed, int samples) {
    const Polynomial p = chebyshev_z_coeffs(20);
    const double x = round_nearest_exact(Rational(24, 26), fmt);
    // Group "all" holds Y_{2n}. The other two hold Y_{2n} - Y_j, where j is
    // the first step with a nonzero error, split by the sign of that error.
    // j is a stopping time, so every group must be centered on zero.
    std::map<int, SampleSet> groups;
    for (const int key : {0, -1, 1}) {
        groups[key] = SampleSet{{}, 0.0, seed, SRMode::Nearness};
    }
    for (int i = 0; i < samples; ++i) {
        RngStream rng(seed, derive_stream_id({detail::kTagVerify, 6, static_cast<std::uint64_t>(i)}));
        const HornerResult res = horner_eval(p, x, fmt, SRMode::Nearness, rng, true);
        const HornerTrace& tr = *res.trace;
        const Rational& last = tr.normalized.back();
        groups[0].values.push_back(to_double(last));
        for (std::size_t j = 0; j < tr.errors.size(); ++j) {
            if (tr.errors[j] != 0) {
                groups[tr.errors[j] > 0 ? 1 : -1].values.push_back(to_double(last - tr.normalized[j]));
                break;
            }
        }
    }
    bool ok = true;
    std::ostringstream os;
    os << "seed=" << seed << " samples=" << samples;
    for (const auto& [key, set] : groups) {
        const char* name = key == 0 ? "all" : (key < 0 ? "first<0" : "first>0");
        if (set.values.size() < 30) {
            os << ' ' << name << ":too-few";
            ok = false;
            continue;
        }
        const UnbiasednessReport r = unbiasedness_test(set, 4.0);
        ok = ok && r.passed;
        os << ' ' << name << ":" << pass_fail(r.passed) << "(n=" << r.summary.count
           << " mean=" << format_real(r.summary.mean) << " se=" << format_real(r.summary.standard_error) << ')';
    }
    return {"mean-independence", ok, os.str()};
}

bool VerifyReport::passed() const {
    for (const SuiteResult& s : suites) {
        if (!s.passed) {
            return false;
        }
    }
    return !suites.empty();
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    for (const SuiteResult& s : suites) {
        os << pass_fail(s.passed) << ' ' << s.name << ' ' << s.detail << '\n';
    }
    os << (passed() ? "all suites passed" : "some suites FAILED") << '\n';
    return os.str();
}

VerifyReport run_verify(const ExperimentConfig& cfg) {
    validate(cfg);
    const std::vector<std::string>& wanted = cfg.suites.empty() ? suite_names() : cfg.suites;
    VerifyReport report;
    for (const std::string& name : wanted) {
        try {
            if (name == "lemma1") {
                report.suites.push_back(suite_floor_scaling(cfg.format, cfg.seed, cfg.trials.value_or(100000)));
            } else if (name == "toy-expectation") {
                report.suites.push_back(suite_toy_expectation(4));
            } else if (name == "theta-constancy") {
                report.suites.push_back(suite_theta_constancy(cfg.format, cfg.seed, 50));
            } else if (name == "sqrt-asymptotics") {
                report.suites.push_back(suite_sqrt_asymptotics(cfg.format));
            } else if (name == "unbiasedness") {
                report.suites.push_back(
                    suite_unbiasedness(cfg.format, cfg.seed, cfg.samples.value_or(2000), cfg.inject_bug));
            } else if (name == "mean-independence") {
                report.suites.push_back(suite_mean_independence(cfg.format, cfg.seed, cfg.samples.value_or(2000)));
            }
        } catch (const Error& e) {
            report.suites.push_back({name, false, std::string("error: ") + e.what()});
        }
    }
    return report;
}

}  // namespace srlab::experiments
