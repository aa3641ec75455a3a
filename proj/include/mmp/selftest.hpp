#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mmp/moment_problem.hpp"

namespace mmp {

// Verification helpers shared by the selftest and the test suites. Each
// returns a max-norm residual that is ~0 for consistent data.

// Residuals of the defining identities T(m~) a~ = diag(0..K) a~ and
// T(m~) b~ = -diag(0..K) b~ with m~ = (0, m).
std::pair<double, double> aux_definition_residuals(const MomentVector& m);

// Residual of T(a~) T(b~) = I, measured on the product's first column.
double inverse_pair_residual(const MomentVector& m);

// Residual of the family-transfer identity T(a~) c = d, where c and d are
// the reversed, zero-padded coefficient vectors of the polynomials whose
// roots are the even points u_2, u_4, ... and the odd points u_1, u_3, ...
// of the configuration that generated m.
double family_transfer_residual(const MomentVector& m,
                                const SwitchConfiguration& u);

// Reversed coefficients (c_n, ..., c_0) of the monic polynomial with the
// given roots, zero-padded to the given length.
std::vector<double> reversed_poly_vector(const std::vector<double>& roots,
                                         std::size_t length);

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // measured value vs limit, set on failure
};

// Reference inputs the deterministic checks run against.
struct SelftestFixture {
    std::vector<double> k2_moments{0.5, 0.5};
    std::vector<double> k2_switches{0.25, 0.75};
    std::vector<double> k4_moments{0.5, 0.53, 0.539, 0.5345};
    std::vector<double> k4_switches{0.1, 0.3, 0.6, 0.9};
};

// Runs the embedded invariant suite: Toeplitz algebra identities, Newton
// relations, the aux-vector identities on the K=4 fixture, and the K=2/K=4
// inversion fixtures.
std::vector<SelftestCheck> selftest_checks(const SelftestFixture& fixture = {});

// Prints one line per check plus a summary; returns the failure count.
int run_selftest(std::ostream& out);

}  // namespace mmp
