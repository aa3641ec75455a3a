#include "mmp/toeplitz.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "mmp/errors.hpp"

namespace mmp {

namespace {

// Below this magnitude the leading element is treated as an exact zero. The
// moment pipeline only solves systems whose diagonal is 1, so anything near
// zero signals caller misuse rather than a marginal system.
constexpr double kSingularityFloor = 1e-300;

void require_dim(std::size_t expected, std::size_t got, const char* op) {
    if (expected != got) {
        std::ostringstream os;
        os << op << ": dimension mismatch, matrix is " << expected
           << " but vector has length " << got;
        throw InputError(os.str());
    }
}

}  // namespace

LowerToeplitz::LowerToeplitz(std::vector<double> column)
    : column_(std::move(column)) {
    if (column_.empty()) {
        throw InputError("LowerToeplitz: first column must be nonempty");
    }
}

std::vector<double> LowerToeplitz::matvec(std::span<const double> y) const {
    const std::size_t p = dim();
    require_dim(p, y.size(), "LowerToeplitz::matvec");
    std::vector<double> r(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j <= i; ++j) {
            s += column_[i - j] * y[j];
        }
        r[i] = s;
    }
    return r;
}

std::vector<double> LowerToeplitz::solve(std::span<const double> rhs) const {
    const std::size_t p = dim();
    require_dim(p, rhs.size(), "LowerToeplitz::solve");
    const double diag = column_[0];
    if (std::abs(diag) < kSingularityFloor) {
        std::ostringstream os;
        os << "LowerToeplitz::solve: leading element " << diag
           << " is numerically zero, matrix is singular";
        throw SingularityError(os.str(), diag);
    }
    std::vector<double> y(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        double s = rhs[i];
        for (std::size_t j = 0; j < i; ++j) {
            s -= column_[i - j] * y[j];
        }
        y[i] = s / diag;
    }
    return y;
}

LowerToeplitz mul(const LowerToeplitz& s, const LowerToeplitz& t) {
    require_dim(s.dim(), t.dim(), "mul(LowerToeplitz)");
    return LowerToeplitz(s.matvec(t.column()));
}

std::vector<double> scaling_apply(std::span<const double> x) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = static_cast<double>(i) * x[i];
    }
    return r;
}

}  // namespace mmp
