#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "mmp/pencil.hpp"
#include "mmp/rng.hpp"

// Dense-matrix oracles. Everything here is deliberately independent of the
// structured implementations under test: matrices are materialized entry by
// entry from their definitions and handed to Eigen.
namespace ts {

inline Eigen::MatrixXd dense_lower_toeplitz(std::span<const double> col) {
    const auto p = static_cast<Eigen::Index>(col.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            m(i, j) = col[static_cast<std::size_t>(i - j)];
        }
    }
    return m;
}

// diag(0, 1, ..., p-1)
inline Eigen::MatrixXd dense_scaling(std::size_t p) {
    Eigen::MatrixXd m =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p),
                              static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < p; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            static_cast<double>(i);
    }
    return m;
}

inline Eigen::MatrixXd dense_h1(const mmp::HankelPencil& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = p.source()[static_cast<std::size_t>(i + j)];
        }
    }
    return m;
}

inline Eigen::MatrixXd dense_h2(const mmp::HankelPencil& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = p.source()[static_cast<std::size_t>(i + j + 1)];
        }
    }
    return m;
}

inline Eigen::VectorXd to_eigen(std::span<const double> v) {
    Eigen::VectorXd e(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        e(static_cast<Eigen::Index>(i)) = v[i];
    }
    return e;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                         double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) {
        x = mmp::uniform(rng, lo, hi);
    }
    return v;
}

inline double max_abs_diff(std::span<const double> x,
                           std::span<const double> y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d = std::max(d, std::abs(x[i] - y[i]));
    }
    return d;
}

}  // namespace ts
