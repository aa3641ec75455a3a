#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mmp {

// Monic real polynomial c0 + c1 x + ... + c_{n-1} x^{n-1} + x^n, degree >= 1.
class MonicPolynomial {
public:
    // coeffs = (c0, ..., cn); requires cn == 1 exactly and degree >= 1.
    explicit MonicPolynomial(std::vector<double> coeffs);

    // Expands prod_j (x - roots[j]); requires at least one root.
    static MonicPolynomial from_roots(std::span<const double> roots);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Horner evaluation.
    double eval(double x) const;

private:
    std::vector<double> coeffs_;
};

// Power sums of a root multiset: values[k] = sum_j r_j^k for k >= 1, and
// values[0] is the number of roots counted with multiplicity.
struct PowerSums {
    std::vector<double> values;
};

PowerSums power_sums_from_roots(std::span<const double> roots,
                                std::size_t m_max);

// Recovers the monic polynomial of degree n = S0 from its power sums
// (S0, ..., Sn) via Newton's relations, solved by back-substitution from the
// leading coefficient downward. Requires S0 == values.size() - 1 >= 1.
MonicPolynomial coeffs_from_power_sums(const PowerSums& s);

// Power sums S0..S_m_max of the roots of p, computed from the coefficients
// alone via Newton's relations (extended past the degree by the shift
// recurrence), without finding the roots.
PowerSums power_sums_from_coeffs(const MonicPolynomial& p, std::size_t m_max);

// All complex roots of p, multiset-complete, via the eigenvalues of the
// companion matrix. Roots of a real polynomial come in conjugate pairs.
// Throws NumericalError if the eigenvalue iteration fails to converge.
std::vector<std::complex<double>> roots_of_monic(const MonicPolynomial& p);

}  // namespace mmp
