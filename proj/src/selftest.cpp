#include "mmp/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "mmp/errors.hpp"
#include "mmp/newton.hpp"
#include "mmp/toeplitz.hpp"

namespace mmp {

namespace {

double max_abs_diff(const std::vector<double>& x,
                    const std::vector<double>& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d = std::max(d, std::abs(x[i] - y[i]));
    }
    return d;
}

std::vector<double> m_tilde(const MomentVector& m) {
    std::vector<double> t;
    t.reserve(m.order() + 1);
    t.push_back(0.0);
    t.insert(t.end(), m.values().begin(), m.values().end());
    return t;
}

}  // namespace

std::pair<double, double> aux_definition_residuals(const MomentVector& m) {
    const AuxVectors aux = solve_ab(m);
    const LowerToeplitz tm(m_tilde(m));
    const std::vector<double> at = aux.a_tilde();
    const std::vector<double> bt = aux.b_tilde();
    const std::vector<double> lhs_a = tm.matvec(at);
    const std::vector<double> lhs_b = tm.matvec(bt);
    std::vector<double> rhs_a = scaling_apply(at);
    std::vector<double> rhs_b = scaling_apply(bt);
    for (double& v : rhs_b) {
        v = -v;
    }
    return {max_abs_diff(lhs_a, rhs_a), max_abs_diff(lhs_b, rhs_b)};
}

double inverse_pair_residual(const MomentVector& m) {
    const AuxVectors aux = solve_ab(m);
    const LowerToeplitz ta(aux.a_tilde());
    const std::vector<double> product_col = ta.matvec(aux.b_tilde());
    std::vector<double> identity_col(product_col.size(), 0.0);
    identity_col[0] = 1.0;
    return max_abs_diff(product_col, identity_col);
}

std::vector<double> reversed_poly_vector(const std::vector<double>& roots,
                                         std::size_t length) {
    const MonicPolynomial p = MonicPolynomial::from_roots(roots);
    std::vector<double> v(p.coeffs().rbegin(), p.coeffs().rend());
    v.resize(length, 0.0);
    return v;
}

double family_transfer_residual(const MomentVector& m,
                                const SwitchConfiguration& u) {
    if (m.order() != u.count()) {
        throw InputError(
            "family_transfer_residual: moment and switch counts differ");
    }
    std::vector<double> odd_points, even_points;
    for (std::size_t i = 0; i < u.count(); ++i) {
        (i % 2 == 0 ? odd_points : even_points).push_back(u.points()[i]);
    }
    const std::size_t len = m.order() + 1;
    const std::vector<double> c = reversed_poly_vector(even_points, len);
    const std::vector<double> d = reversed_poly_vector(odd_points, len);
    const AuxVectors aux = solve_ab(m);
    const LowerToeplitz ta(aux.a_tilde());
    return max_abs_diff(ta.matvec(c), d);
}

namespace {

struct CheckContext {
    std::vector<SelftestCheck> results;

    void check(const std::string& name, double measured, double limit) {
        SelftestCheck c;
        c.name = name;
        c.passed = measured <= limit;
        if (!c.passed) {
            std::ostringstream os;
            os << "residual " << measured << " exceeds limit " << limit;
            c.detail = os.str();
        }
        results.push_back(std::move(c));
    }

    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            SelftestCheck c;
            c.name = name;
            c.passed = false;
            c.detail = e.what();
            results.push_back(std::move(c));
        }
    }
};

double inversion_error(const std::vector<double>& moments,
                       const std::vector<double>& expected) {
    const InversionResult res = invert_moments(MomentVector(moments));
    double err = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        err = std::max(err, std::abs(res.switches.points()[i] - expected[i]));
    }
    return err;
}

}  // namespace

std::vector<SelftestCheck> selftest_checks(const SelftestFixture& fixture) {
    CheckContext ctx;

    const std::vector<double> x{0.6, -0.3, 0.45, 0.2, -0.8};
    const std::vector<double> y{1.0, 0.25, -0.4, 0.9, 0.1};
    const LowerToeplitz tx(x);
    const LowerToeplitz ty(y);

    ctx.run("toeplitz_product_symmetry", [&] {
        ctx.check("toeplitz_product_symmetry",
                  max_abs_diff(tx.matvec(y), ty.matvec(x)), 1e-12);
    });
    ctx.run("toeplitz_commutation", [&] {
        ctx.check("toeplitz_commutation",
                  max_abs_diff(mul(tx, ty).column(), mul(ty, tx).column()),
                  1e-12);
    });
    ctx.run("toeplitz_scaling_commutator", [&] {
        // T(diag x) y == diag (T(x) y) - T(x) (diag y)
        const LowerToeplitz tsx(scaling_apply(x));
        const std::vector<double> lhs = tsx.matvec(y);
        std::vector<double> rhs = scaling_apply(tx.matvec(y));
        const std::vector<double> txdy = tx.matvec(scaling_apply(y));
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            rhs[i] -= txdy[i];
        }
        ctx.check("toeplitz_scaling_commutator", max_abs_diff(lhs, rhs),
                  1e-12);
    });
    ctx.run("toeplitz_solve_roundtrip", [&] {
        const std::vector<double> rhs{0.3, -1.2, 0.7, 0.05, 0.9};
        ctx.check("toeplitz_solve_roundtrip",
                  max_abs_diff(tx.matvec(tx.solve(rhs)), rhs), 1e-12);
    });

    ctx.run("newton_relations", [&] {
        const std::vector<double> roots{0.1, 0.3, 0.6, 0.9};
        const std::size_t n = roots.size();
        const PowerSums s = power_sums_from_roots(roots, n);
        const MonicPolynomial p = coeffs_from_power_sums(s);
        double worst = 0.0;
        for (std::size_t k = 0; k <= n; ++k) {
            double lhs = 0.0;
            for (std::size_t i = k; i <= n; ++i) {
                lhs += p.coeffs()[i] * s.values[i - k];
            }
            worst = std::max(worst, std::abs(lhs - static_cast<double>(k) *
                                                       p.coeffs()[k]));
        }
        ctx.check("newton_relations", worst, 1e-12);
    });
    ctx.run("newton_power_sum_roundtrip", [&] {
        const std::vector<double> roots{0.1, 0.3, 0.6, 0.9};
        const PowerSums direct = power_sums_from_roots(roots, 8);
        const PowerSums via_coeffs = power_sums_from_coeffs(
            MonicPolynomial::from_roots(roots), 8);
        ctx.check("newton_power_sum_roundtrip",
                  max_abs_diff(direct.values, via_coeffs.values), 1e-12);
    });

    ctx.run("aux_definitions_k4", [&] {
        const auto [ra, rb] =
            aux_definition_residuals(MomentVector(fixture.k4_moments));
        ctx.check("aux_definitions_k4", std::max(ra, rb), 1e-9);
    });
    ctx.run("inverse_pair_k4", [&] {
        ctx.check("inverse_pair_k4",
                  inverse_pair_residual(MomentVector(fixture.k4_moments)),
                  1e-8);
    });
    ctx.run("family_transfer_k4", [&] {
        ctx.check("family_transfer_k4",
                  family_transfer_residual(
                      MomentVector(fixture.k4_moments),
                      SwitchConfiguration(fixture.k4_switches)),
                  1e-7);
    });

    ctx.run("fixture_k2", [&] {
        ctx.check("fixture_k2",
                  inversion_error(fixture.k2_moments, fixture.k2_switches),
                  1e-12);
    });
    ctx.run("fixture_k4", [&] {
        ctx.check("fixture_k4",
                  inversion_error(fixture.k4_moments, fixture.k4_switches),
                  1e-8);
    });

    return ctx.results;
}

int run_selftest(std::ostream& out) {
    const std::vector<SelftestCheck> checks = selftest_checks();
    int failures = 0;
    for (const SelftestCheck& c : checks) {
        if (c.passed) {
            out << "ok   " << c.name << "\n";
        } else {
            ++failures;
            out << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    out << "selftest: " << checks.size() << " checks, " << failures
        << " failed\n";
    return failures;
}

}  // namespace mmp
