#include "mmp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mmp/errors.hpp"
#include "mmp/rng.hpp"

namespace mmp {

std::vector<double> random_switch_points(std::size_t count, double min_gap,
                                         std::mt19937_64& rng) {
    if (count < 2 || count % 2 != 0) {
        throw InputError("random_switch_points: count must be even and >= 2");
    }
    const double span =
        1.0 - min_gap * static_cast<double>(count - 1);
    if (!(min_gap >= 0.0) || span <= 0.0) {
        std::ostringstream os;
        os << "random_switch_points: min_gap " << min_gap
           << " leaves no room for " << count << " points on [0, 1]";
        throw InputError(os.str());
    }
    std::vector<double> pts(count);
    for (double& p : pts) {
        p = span * uniform01(rng);
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < count; ++i) {
        pts[i] += min_gap * static_cast<double>(i);
    }
    return pts;
}

TrialStats roundtrip_experiment(std::size_t pairs, int trials, double min_gap,
                                std::uint64_t seed) {
    if (pairs < 1) {
        throw InputError("roundtrip_experiment: pairs must be >= 1");
    }
    if (trials < 1) {
        throw InputError("roundtrip_experiment: trials must be >= 1");
    }
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        const SwitchConfiguration u(
            random_switch_points(2 * pairs, min_gap, rng));
        TrialOutcome& out = outcomes[static_cast<std::size_t>(t)];
        try {
            const InversionResult res = invert_moments(forward_moments(u));
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
