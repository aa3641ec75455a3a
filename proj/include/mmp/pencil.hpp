#pragma once

#include <cstddef>
#include <vector>

#include "mmp/newton.hpp"

namespace mmp {

// Pair (H1, H2) of n x n Hankel matrices built from shifted windows of one
// length-2n source vector g:
//
//   H1(i,j) = g[i+j]     (entries g_1 .. g_{2n-1} in 1-based terms)
//   H2(i,j) = g[i+j+1]   (entries g_2 .. g_{2n})
//
// with 0-based indices throughout. The generalized eigenvalues u with
// H2 v = u H1 v are the quantities the inversion pipeline extracts.
class HankelPencil {
public:
    // source must have even length >= 2.
    explicit HankelPencil(std::vector<double> source);

    std::size_t size() const { return source_.size() / 2; }  // n
    const std::vector<double>& source() const { return source_; }

    double h1(std::size_t i, std::size_t j) const { return source_[i + j]; }
    double h2(std::size_t i, std::size_t j) const {
        return source_[i + j + 1];
    }

private:
    std::vector<double> source_;
};

// Monic degree-n polynomial whose roots are the generalized eigenvalues of
// (H2, H1). Its coefficients satisfy sum_{i=0..n} c_i g_{i+k} = 0 for
// k = 1..n (1-based g), which is an n x n Hankel system solved with a
// partially pivoted LU. Throws DegeneracyError when that system is
// numerically rank deficient (smallest pivot below 1e-10 of the largest),
// which for moment data signals coincident underlying points.
MonicPolynomial char_poly(const HankelPencil& p);

struct PencilEigenvalues {
    std::vector<double> values;   // real parts, sorted ascending
    double max_imag_abs = 0.0;    // largest |Im| among the raw roots
};

// Default tolerance separating genuine complex pairs from roundoff.
double default_imag_tol(const HankelPencil& p);

// Roots of char_poly(p), required to be real: any root with |Im| > imag_tol
// raises InfeasibleError listing the offenders (the source data was not
// generated by a valid switch configuration, or is severely perturbed).
PencilEigenvalues generalized_eigenvalues(const HankelPencil& p,
                                          double imag_tol);

}  // namespace mmp
