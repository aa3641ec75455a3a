#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mmp {

// The given data: K = 2n scaled power-sum-difference moments m_1..m_K. The
// k-th moment of a switch configuration u is
//
//   m_k = sum_{j=1..n} (u_{2j}^k - u_{2j-1}^k),
//
// i.e. k times the k-1 power moment of the {0,1}-valued step density whose
// "on" intervals are (u_1,u_2), (u_3,u_4), ...
class MomentVector {
public:
    // values = (m_1, ..., m_K); K must be even and >= 2.
    explicit MomentVector(std::vector<double> values);

    std::size_t order() const { return values_.size(); }      // K
    std::size_t pairs() const { return values_.size() / 2; }  // n
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Ordered switch points 0 <= u_1 <= u_2 <= ... <= u_K = X, K even. Odd
// positions start an interval where the density is 1, even positions end it.
class SwitchConfiguration {
public:
    explicit SwitchConfiguration(std::vector<double> points);

    std::size_t count() const { return points_.size(); }      // K
    std::size_t pairs() const { return points_.size() / 2; }  // n
    double support_end() const { return points_.back(); }     // X
    const std::vector<double>& points() const { return points_; }

    // Smallest gap between consecutive points.
    double min_gap() const;

private:
    std::vector<double> points_;
};

// Solutions a, b of the triangular systems A a = m, B b = -m, where A (resp.
// B) has diagonal (1, 2, ..., K) and subdiagonals -m_k (resp. +m_k). In
// augmented form a~ = (1, a), b~ = (1, b) these satisfy
//
//   T(m~) a~ =  diag(0..K) a~,
//   T(m~) b~ = -diag(0..K) b~,      with m~ = (0, m),
//
// and T(a~) T(b~) = I.
struct AuxVectors {
    std::vector<double> a;
    std::vector<double> b;

    std::vector<double> a_tilde() const;
    std::vector<double> b_tilde() const;
};

// Piecewise constant {0,1} density on ]0, X[: equal to 1 on the listed
// intervals, 0 elsewhere. Intervals are disjoint, ordered and within [0, X].
struct StepDensity {
    double support_end = 0.0;  // X
    std::vector<std::pair<double, double>> intervals;
};

enum class InversionStatus { ok, ill_conditioned_warning };

struct InversionReport {
    double residual_inf = 0.0;   // max_k |m_k - forward_moments(u)_k|
    double min_gap = 0.0;        // smallest gap between recovered points
    double eig_imag_max = 0.0;   // largest |Im| seen among pencil roots
    double scale_used = 1.0;     // domain scale applied when rescaling
    InversionStatus status = InversionStatus::ok;
};

struct InversionOptions {
    // Imaginary-part tolerance for pencil eigenvalues; <= 0 selects the
    // per-pencil default 1e-6 * max(1, max |g_i|).
    double imag_tol = 0.0;
    // Moment residuals above residual_tol * max(1, max |m_k|) downgrade the
    // report status to ill_conditioned_warning.
    double residual_tol = 1e-6;
    // Interleaving violations and negative undershoots smaller than
    // tie_tol * X are repaired silently; larger ones raise errors.
    double tie_tol = 1e-9;
    // Solve an equivalent problem rescaled to a domain near [0, 1], then map
    // the points back. scale_hint > 0 supplies the domain scale; otherwise
    // it is estimated as max_k |m_k|^(1/k).
    bool rescale = false;
    double scale_hint = 0.0;
};

struct InversionResult {
    SwitchConfiguration switches;
    InversionReport report;
};

// Forward problem: the K moments of a switch configuration.
MomentVector forward_moments(const SwitchConfiguration& u);

// The K moments of a step density, k * integral of f(s) s^(k-1), in closed
// form over the intervals. Matches forward_moments of the configuration
// formed by the interval endpoints.
MomentVector moments_from_density(const StepDensity& f, std::size_t order);

// Step 1-2 of the inversion: forward substitution on the triangular systems.
// Throws ScalingError if the recursion overflows (wildly scaled moments).
AuxVectors solve_ab(const MomentVector& m);

// Full inversion: solve_ab, build the Hankel pencils of a and b, extract
// their generalized eigenvalues, and interleave (b-pencil values take the
// odd positions u_1, u_3, ...; a-pencil values the even positions). Throws
// InfeasibleError / InconsistencyError / DegeneracyError as symptoms of
// infeasible or degenerate moment data.
InversionResult invert_moments(const MomentVector& m,
                               const InversionOptions& opts = {});

// Max-norm moment residual of a candidate configuration.
double residual_inf(const MomentVector& m, const SwitchConfiguration& u);

// The density whose "on" intervals are consecutive point pairs of u;
// zero-length intervals are dropped.
StepDensity density_from_switches(const SwitchConfiguration& u);

struct TrialOutcome {
    double error = 0.0;  // recovery error, valid when ok
    bool ok = false;
};

struct TrialStats {
    std::vector<TrialOutcome> trials;
    double worst = 0.0;  // over successful trials; NaN if none
    double mean = 0.0;   // over successful trials; NaN if none
    int failures = 0;
};

TrialStats summarize_trials(std::vector<TrialOutcome> trials);

// Conditioning probe: perturbs each moment of forward_moments(u) by uniform
// noise in [-eps, eps], inverts, and records the max-norm recovery error per
// trial (inversion errors are counted as failures, not raised). Trial i uses
// a seed derived purely from (seed, i), so results are reproducible and
// independent of evaluation order. eps = 0 measures the baseline roundtrip
// error.
TrialStats perturbation_probe(const SwitchConfiguration& u, double eps,
                              int trials, std::uint64_t seed);

}  // namespace mmp
