#include "mmp/newton.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <utility>

#include "mmp/errors.hpp"

namespace mmp {

MonicPolynomial::MonicPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw InputError("MonicPolynomial: degree must be at least 1");
    }
    if (coeffs_.back() != 1.0) {
        std::ostringstream os;
        os << "MonicPolynomial: leading coefficient must be 1, got "
           << coeffs_.back();
        throw InputError(os.str());
    }
}

MonicPolynomial MonicPolynomial::from_roots(std::span<const double> roots) {
    if (roots.empty()) {
        throw InputError("MonicPolynomial::from_roots: need at least one root");
    }
    std::vector<double> c{1.0};  // ascending powers
    for (double r : roots) {
        // multiply by (x - r)
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k >= 1; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] = -r * c[0];
    }
    return MonicPolynomial(std::move(c));
}

double MonicPolynomial::eval(double x) const {
    double v = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        v = v * x + coeffs_[k];
    }
    return v;
}

PowerSums power_sums_from_roots(std::span<const double> roots,
                                std::size_t m_max) {
    PowerSums s;
    s.values.assign(m_max + 1, 0.0);
    s.values[0] = static_cast<double>(roots.size());
    std::vector<double> pw(roots.begin(), roots.end());
    for (std::size_t k = 1; k <= m_max; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < pw.size(); ++j) {
            acc += pw[j];
            pw[j] *= roots[j];
        }
        s.values[k] = acc;
    }
    return s;
}

MonicPolynomial coeffs_from_power_sums(const PowerSums& s) {
    if (s.values.size() < 2) {
        throw InputError(
            "coeffs_from_power_sums: need power sums S0..Sn with n >= 1");
    }
    const std::size_t n = s.values.size() - 1;
    const double s0 = s.values[0];
    if (std::abs(s0 - static_cast<double>(n)) > 1e-9) {
        std::ostringstream os;
        os << "coeffs_from_power_sums: S0 = " << s0
           << " does not match the sum count n = " << n;
        throw InputError(os.str());
    }
    // Relation k: sum_{i=k}^{n} c_i S_{i-k} = k c_k. With c_n = 1 the
    // unknown c_k carries coefficient S0 - k = n - k != 0, so solve downward.
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    for (std::size_t k = n; k-- > 0;) {
        double acc = 0.0;
        for (std::size_t i = k + 1; i <= n; ++i) {
            acc += c[i] * s.values[i - k];
        }
        c[k] = -acc / static_cast<double>(n - k);
    }
    return MonicPolynomial(std::move(c));
}

PowerSums power_sums_from_coeffs(const MonicPolynomial& p,
                                 std::size_t m_max) {
    const std::size_t n = p.degree();
    const std::vector<double>& c = p.coeffs();
    PowerSums s;
    s.values.assign(m_max + 1, 0.0);
    s.values[0] = static_cast<double>(n);
    // Relation k = n - m isolates S_m while m <= n; beyond the degree the
    // same relations applied to x^j p(x) give the shift recurrence.
    for (std::size_t m = 1; m <= m_max; ++m) {
        if (m <= n) {
            const std::size_t k = n - m;
            double acc = static_cast<double>(k) * c[k];
            for (std::size_t i = k; i < n; ++i) {
                acc -= c[i] * s.values[i - k];
            }
            s.values[m] = acc;
        } else {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc -= c[i] * s.values[m - n + i];
            }
            s.values[m] = acc;
        }
    }
    return s;
}

std::vector<std::complex<double>> roots_of_monic(const MonicPolynomial& p) {
    const std::size_t n = p.degree();
    const std::vector<double>& c = p.coeffs();
    if (n == 1) {
        return {std::complex<double>(-c[0], 0.0)};
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i),
                  static_cast<Eigen::Index>(i - 1)) = 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i),
                  static_cast<Eigen::Index>(n - 1)) = -c[i];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion,
                                               /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << "roots_of_monic: eigenvalue iteration did not converge for"
              " coefficients (";
        for (std::size_t i = 0; i < c.size(); ++i) {
            os << (i ? ", " : "") << c[i];
        }
        os << ")";
        throw NumericalError(os.str());
    }
    std::vector<std::complex<double>> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    return roots;
}

}  // namespace mmp
