#include "mmp/moment_problem.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mmp/errors.hpp"
#include "mmp/pencil.hpp"
#include "mmp/rng.hpp"

namespace mmp {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            std::ostringstream os;
            os << what << ": entries must be finite, got " << x;
            throw InputError(os.str());
        }
    }
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

}  // namespace

MomentVector::MomentVector(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.size() < 2 || values_.size() % 2 != 0) {
        std::ostringstream os;
        os << "MomentVector: the moment count K must be even and >= 2, got "
           << values_.size() << " (odd K is outside this problem class)";
        throw InputError(os.str());
    }
    require_finite(values_, "MomentVector");
}

SwitchConfiguration::SwitchConfiguration(std::vector<double> points)
    : points_(std::move(points)) {
    if (points_.size() < 2 || points_.size() % 2 != 0) {
        std::ostringstream os;
        os << "SwitchConfiguration: the switch count K must be even and >= 2,"
              " got "
           << points_.size();
        throw InputError(os.str());
    }
    require_finite(points_, "SwitchConfiguration");
    if (points_.front() < 0.0) {
        std::ostringstream os;
        os << "SwitchConfiguration: points must be nonnegative, got u_1 = "
           << points_.front();
        throw InputError(os.str());
    }
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (points_[i] > points_[i + 1]) {
            std::ostringstream os;
            os << "SwitchConfiguration: points must be nondecreasing, but u_"
               << (i + 1) << " = " << points_[i] << " > u_" << (i + 2)
               << " = " << points_[i + 1];
            throw InputError(os.str());
        }
    }
}

double SwitchConfiguration::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        g = std::min(g, points_[i + 1] - points_[i]);
    }
    return g;
}

std::vector<double> AuxVectors::a_tilde() const {
    std::vector<double> t;
    t.reserve(a.size() + 1);
    t.push_back(1.0);
    t.insert(t.end(), a.begin(), a.end());
    return t;
}

std::vector<double> AuxVectors::b_tilde() const {
    std::vector<double> t;
    t.reserve(b.size() + 1);
    t.push_back(1.0);
    t.insert(t.end(), b.begin(), b.end());
    return t;
}

MomentVector forward_moments(const SwitchConfiguration& u) {
    const std::vector<double>& pts = u.points();
    const std::size_t order = u.count();
    std::vector<double> pw(pts);
    std::vector<double> m(order, 0.0);
    for (std::size_t k = 0; k < order; ++k) {
        if (k > 0) {
            for (std::size_t j = 0; j < pw.size(); ++j) {
                pw[j] *= pts[j];
            }
        }
        double acc = 0.0;
        for (std::size_t j = 0; j + 1 < pw.size(); j += 2) {
            acc += pw[j + 1] - pw[j];
        }
        m[k] = acc;
    }
    return MomentVector(std::move(m));
}

MomentVector moments_from_density(const StepDensity& f, std::size_t order) {
    if (order < 2 || order % 2 != 0) {
        std::ostringstream os;
        os << "moments_from_density: the moment count K must be even and"
              " >= 2, got "
           << order;
        throw InputError(os.str());
    }
    if (!std::isfinite(f.support_end) || f.support_end < 0.0) {
        throw InputError("moments_from_density: invalid support end");
    }
    double prev_end = 0.0;
    for (const auto& [lo, hi] : f.intervals) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi ||
            lo < prev_end || hi > f.support_end) {
            std::ostringstream os;
            os << "moments_from_density: intervals must be ordered, disjoint"
                  " and inside [0, "
               << f.support_end << "], offending interval (" << lo << ", "
               << hi << ")";
            throw InputError(os.str());
        }
        prev_end = hi;
    }

    std::vector<double> lo_pw, hi_pw;
    lo_pw.reserve(f.intervals.size());
    hi_pw.reserve(f.intervals.size());
    for (const auto& [lo, hi] : f.intervals) {
        lo_pw.push_back(lo);
        hi_pw.push_back(hi);
    }
    std::vector<double> m(order, 0.0);
    for (std::size_t k = 0; k < order; ++k) {
        if (k > 0) {
            for (std::size_t j = 0; j < lo_pw.size(); ++j) {
                lo_pw[j] *= f.intervals[j].first;
                hi_pw[j] *= f.intervals[j].second;
            }
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < lo_pw.size(); ++j) {
            acc += hi_pw[j] - lo_pw[j];
        }
        m[k] = acc;
    }
    return MomentVector(std::move(m));
}

AuxVectors solve_ab(const MomentVector& m) {
    const std::vector<double>& mv = m.values();
    const std::size_t order = m.order();
    AuxVectors aux;
    aux.a.assign(order, 0.0);
    aux.b.assign(order, 0.0);
    for (std::size_t k = 0; k < order; ++k) {
        double sa = mv[k];
        double sb = -mv[k];
        for (std::size_t j = 0; j < k; ++j) {
            sa += mv[k - 1 - j] * aux.a[j];
            sb -= mv[k - 1 - j] * aux.b[j];
        }
        const double diag = static_cast<double>(k + 1);
        aux.a[k] = sa / diag;
        aux.b[k] = sb / diag;
    }
    for (std::size_t k = 0; k < order; ++k) {
        if (!std::isfinite(aux.a[k]) || !std::isfinite(aux.b[k])) {
            std::ostringstream os;
            os << "solve_ab: forward substitution overflowed at index "
               << (k + 1)
               << "; the moments are too wildly scaled, rescale the domain"
                  " toward [0, 1]";
            throw ScalingError(os.str());
        }
    }
    return aux;
}

namespace {

double moment_residual_inf(const std::vector<double>& points,
                           const std::vector<double>& m) {
    double r = 0.0;
    std::vector<double> pw(points);
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k > 0) {
            for (std::size_t j = 0; j < pw.size(); ++j) {
                pw[j] *= points[j];
            }
        }
        double acc = 0.0;
        for (std::size_t j = 0; j + 1 < pw.size(); j += 2) {
            acc += pw[j + 1] - pw[j];
        }
        r = std::max(r, std::abs(acc - m[k]));
    }
    return r;
}

// Newton iteration on the moment equations, started from the pencil output.
// The Jacobian d m_k / d u_i = -+ k u_i^(k-1) is the (scaled) Vandermonde
// the problem's conditioning lives in: with the pencil's points as the
// starting guess a couple of steps reach machine-level residuals. Steps are
// accepted only while the residual shrinks and the ordering survives, so the
// polish can only improve the extracted configuration.
void polish_points(std::vector<double>& points, const std::vector<double>& m,
                   double tie_abs) {
    const std::size_t order = m.size();
    const auto dim = static_cast<Eigen::Index>(order);
    std::vector<double> current(points);
    double best_residual = moment_residual_inf(current, m);

    for (int iter = 0; iter < 3 && best_residual > 0.0; ++iter) {
        Eigen::MatrixXd jac(dim, dim);
        Eigen::VectorXd minus_f(dim);
        std::vector<double> pw(order, 1.0);  // u_j^(k-1)
        for (std::size_t k = 1; k <= order; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < order; ++j) {
                const double sign = (j % 2 == 0) ? -1.0 : 1.0;
                jac(static_cast<Eigen::Index>(k - 1),
                    static_cast<Eigen::Index>(j)) =
                    sign * static_cast<double>(k) * pw[j];
                pw[j] *= current[j];
                acc += sign * pw[j];
            }
            minus_f(static_cast<Eigen::Index>(k - 1)) = m[k - 1] - acc;
        }

        const Eigen::VectorXd step = jac.partialPivLu().solve(minus_f);
        if (!step.allFinite()) {
            break;
        }
        std::vector<double> candidate(current);
        for (std::size_t j = 0; j < order; ++j) {
            candidate[j] += step(static_cast<Eigen::Index>(j));
        }
        bool shape_ok = candidate.front() >= -tie_abs;
        for (std::size_t j = 0; j + 1 < order && shape_ok; ++j) {
            shape_ok = candidate[j + 1] - candidate[j] >= -tie_abs;
        }
        if (!shape_ok) {
            break;
        }
        for (double& p : candidate) {
            p = std::max(p, 0.0);
        }
        std::sort(candidate.begin(), candidate.end());
        const double candidate_residual = moment_residual_inf(candidate, m);
        if (candidate_residual >= best_residual) {
            break;
        }
        current = candidate;
        best_residual = candidate_residual;
    }
    points = current;
}

struct CoreResult {
    std::vector<double> points;
    double eig_imag_max = 0.0;
};

CoreResult invert_core(const MomentVector& m, const InversionOptions& opts) {
    const std::size_t n = m.pairs();
    const AuxVectors aux = solve_ab(m);

    const HankelPencil pencil_a(aux.a);
    const HankelPencil pencil_b(aux.b);
    const double tol_a =
        opts.imag_tol > 0.0 ? opts.imag_tol : default_imag_tol(pencil_a);
    const double tol_b =
        opts.imag_tol > 0.0 ? opts.imag_tol : default_imag_tol(pencil_b);

    // b-pencil eigenvalues are the odd points u_1, u_3, ...; a-pencil
    // eigenvalues the even points u_2, u_4, ...
    const PencilEigenvalues odd = generalized_eigenvalues(pencil_b, tol_b);
    const PencilEigenvalues even = generalized_eigenvalues(pencil_a, tol_a);

    CoreResult out;
    out.eig_imag_max = std::max(odd.max_imag_abs, even.max_imag_abs);
    out.points.assign(2 * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        out.points[2 * j] = odd.values[j];
        out.points[2 * j + 1] = even.values[j];
    }

    const double support = *std::max_element(out.points.begin(),
                                             out.points.end());
    const double tie_abs = opts.tie_tol * std::max(support, 0.0);

    for (double& p : out.points) {
        if (p < -tie_abs) {
            std::ostringstream os;
            os << "invert_moments: recovered switch point " << p
               << " is negative; the moments do not come from a valid"
                  " configuration";
            throw InfeasibleError(os.str());
        }
        if (p < 0.0) {
            p = 0.0;
        }
    }
    for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
        if (out.points[i + 1] - out.points[i] < -tie_abs) {
            std::ostringstream os;
            os << "invert_moments: odd/even point families do not interleave:"
                  " u_"
               << (i + 1) << " = " << out.points[i] << " > u_" << (i + 2)
               << " = " << out.points[i + 1];
            throw InconsistencyError(os.str());
        }
    }
    // Roundoff can swap near-coincident points; repair silently.
    std::sort(out.points.begin(), out.points.end());
    polish_points(out.points, m.values(), tie_abs);
    return out;
}

double estimate_scale(const MomentVector& m) {
    const std::vector<double>& mv = m.values();
    double s = 0.0;
    for (std::size_t k = 0; k < mv.size(); ++k) {
        s = std::max(s, std::pow(std::abs(mv[k]),
                                 1.0 / static_cast<double>(k + 1)));
    }
    return (std::isfinite(s) && s > 0.0) ? s : 1.0;
}

}  // namespace

InversionResult invert_moments(const MomentVector& m,
                               const InversionOptions& opts) {
    CoreResult core{};
    double scale_used = 1.0;
    if (opts.rescale) {
        const double s =
            opts.scale_hint > 0.0 ? opts.scale_hint : estimate_scale(m);
        std::vector<double> scaled(m.values());
        double sk = 1.0;
        for (double& v : scaled) {
            sk *= s;
            v /= sk;
        }
        core = invert_core(MomentVector(std::move(scaled)), opts);
        for (double& p : core.points) {
            p *= s;
        }
        scale_used = s;
    } else {
        core = invert_core(m, opts);
    }

    InversionResult result{SwitchConfiguration(std::move(core.points)), {}};
    result.report.scale_used = scale_used;
    result.report.residual_inf = residual_inf(m, result.switches);
    result.report.min_gap = result.switches.min_gap();
    result.report.eig_imag_max = core.eig_imag_max;
    const double scale = std::max(1.0, max_abs(m.values()));
    result.report.status =
        result.report.residual_inf <= opts.residual_tol * scale
            ? InversionStatus::ok
            : InversionStatus::ill_conditioned_warning;
    return result;
}

double residual_inf(const MomentVector& m, const SwitchConfiguration& u) {
    if (m.order() != u.count()) {
        std::ostringstream os;
        os << "residual_inf: moment count " << m.order()
           << " does not match switch count " << u.count();
        throw InputError(os.str());
    }
    const MomentVector fm = forward_moments(u);
    double r = 0.0;
    for (std::size_t k = 0; k < m.order(); ++k) {
        r = std::max(r, std::abs(m.values()[k] - fm.values()[k]));
    }
    return r;
}

StepDensity density_from_switches(const SwitchConfiguration& u) {
    StepDensity f;
    f.support_end = u.support_end();
    const std::vector<double>& pts = u.points();
    for (std::size_t j = 0; j + 1 < pts.size(); j += 2) {
        if (pts[j] < pts[j + 1]) {
            f.intervals.emplace_back(pts[j], pts[j + 1]);
        }
    }
    return f;
}

TrialStats summarize_trials(std::vector<TrialOutcome> trials) {
    TrialStats stats;
    stats.trials = std::move(trials);
    double worst = 0.0;
    double sum = 0.0;
    std::size_t ok_count = 0;
    for (const TrialOutcome& t : stats.trials) {
        if (t.ok) {
            worst = std::max(worst, t.error);
            sum += t.error;
            ++ok_count;
        } else {
            ++stats.failures;
        }
    }
    if (ok_count == 0) {
        stats.worst = std::numeric_limits<double>::quiet_NaN();
        stats.mean = std::numeric_limits<double>::quiet_NaN();
    } else {
        stats.worst = worst;
        stats.mean = sum / static_cast<double>(ok_count);
    }
    return stats;
}

TrialStats perturbation_probe(const SwitchConfiguration& u, double eps,
                              int trials, std::uint64_t seed) {
    if (eps < 0.0 || !std::isfinite(eps)) {
        throw InputError("perturbation_probe: eps must be >= 0");
    }
    if (trials < 1) {
        throw InputError("perturbation_probe: trials must be >= 1");
    }
    const MomentVector m0 = forward_moments(u);
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<double> mv(m0.values());
        for (double& v : mv) {
            v += uniform(rng, -eps, eps);
        }
        TrialOutcome& out = outcomes[static_cast<std::size_t>(t)];
        try {
            const InversionResult res = invert_moments(MomentVector(mv));
            double err = 0.0;
            for (std::size_t i = 0; i < u.count(); ++i) {
                err = std::max(err, std::abs(res.switches.points()[i] -
                                             u.points()[i]));
            }
            out.error = err;
            out.ok = true;
        } catch (const Error&) {
            out.ok = false;
        }
    }
    return summarize_trials(std::move(outcomes));
}

}  // namespace mmp
