#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mmp {

// Lower triangular Toeplitz matrix, stored as its first column x. The p x p
// matrix has entry (i,j) = x[i-j] for i >= j (0-based) and zero above the
// diagonal, so the matrix is fully determined by x.
//
// These matrices form a commutative algebra: T(x) T(y) = T(y) T(x) is again
// lower triangular Toeplitz with first column T(x) y, and the product also
// satisfies T(x) y = T(y) x. When x[0] != 0 the inverse exists and is lower
// triangular Toeplitz as well.
class LowerToeplitz {
public:
    // column must be nonempty; its length is the matrix dimension.
    explicit LowerToeplitz(std::vector<double> column);

    std::size_t dim() const { return column_.size(); }
    const std::vector<double>& column() const { return column_; }

    // Matrix-vector product T(x) y. Requires y.size() == dim().
    std::vector<double> matvec(std::span<const double> y) const;

    // Solves T(x) y = rhs by forward substitution in O(p^2). Requires
    // rhs.size() == dim(). Throws SingularityError when |x[0]| vanishes.
    std::vector<double> solve(std::span<const double> rhs) const;

private:
    std::vector<double> column_;
};

// Product of two equal-dimension lower triangular Toeplitz matrices; the
// result has first column T(s) t.column(). Commutative.
LowerToeplitz mul(const LowerToeplitz& s, const LowerToeplitz& t);

// Applies the diagonal scaling matrix diag(0, 1, ..., p-1): component i of
// the result is i * x[i] (0-based). Its commutator with the algebra is
// T(scaling_apply(x)) = diag * T(x) - T(x) * diag.
std::vector<double> scaling_apply(std::span<const double> x);

}  // namespace mmp
