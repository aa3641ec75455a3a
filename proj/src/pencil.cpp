#include "mmp/pencil.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "mmp/errors.hpp"

namespace mmp {

namespace {

// Valid well-separated instances at n = 8 reach pivot ratios near 5e-12,
// while data from coincident points sits below 4e-15 even at K = 16; this
// floor separates the two populations with two orders of margin each way.
constexpr double kPivotRatioFloor = 1e-13;

}  // namespace

HankelPencil::HankelPencil(std::vector<double> source)
    : source_(std::move(source)) {
    if (source_.size() < 2 || source_.size() % 2 != 0) {
        std::ostringstream os;
        os << "HankelPencil: source length must be even and >= 2, got "
           << source_.size();
        throw InputError(os.str());
    }
}

MonicPolynomial char_poly(const HankelPencil& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    const std::vector<double>& g = p.source();

    Eigen::MatrixXd h1(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            h1(i, j) = p.h1(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j));
        }
        rhs(i) = -g[static_cast<std::size_t>(n + i)];
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(h1);
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pivot_max = pivots.maxCoeff();
    const double pivot_min = pivots.minCoeff();
    if (pivot_max == 0.0 || pivot_min < kPivotRatioFloor * pivot_max) {
        std::ostringstream os;
        os << "char_poly: Hankel system is numerically rank deficient"
              " (pivot ratio "
           << (pivot_max == 0.0 ? 0.0 : pivot_min / pivot_max)
           << "); underlying points are coincident or nearly so";
        throw DegeneracyError(os.str());
    }

    Eigen::VectorXd c = lu.solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = c(i);
    }
    coeffs.back() = 1.0;
    return MonicPolynomial(std::move(coeffs));
}

double default_imag_tol(const HankelPencil& p) {
    double gmax = 0.0;
    for (double v : p.source()) {
        gmax = std::max(gmax, std::abs(v));
    }
    return 1e-6 * std::max(1.0, gmax);
}

PencilEigenvalues generalized_eigenvalues(const HankelPencil& p,
                                          double imag_tol) {
    const MonicPolynomial poly = char_poly(p);
    const std::vector<std::complex<double>> roots = roots_of_monic(poly);

    PencilEigenvalues out;
    std::vector<std::complex<double>> offenders;
    for (const auto& r : roots) {
        out.max_imag_abs = std::max(out.max_imag_abs, std::abs(r.imag()));
        if (std::abs(r.imag()) > imag_tol) {
            offenders.push_back(r);
        } else {
            out.values.push_back(r.real());
        }
    }
    if (!offenders.empty()) {
        std::ostringstream os;
        os << "generalized_eigenvalues: " << offenders.size()
           << " of " << roots.size()
           << " eigenvalues are complex beyond tolerance " << imag_tol << ":";
        for (const auto& r : offenders) {
            os << " (" << r.real() << (r.imag() < 0 ? "" : "+") << r.imag()
               << "i)";
        }
        throw InfeasibleError(os.str());
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace mmp
