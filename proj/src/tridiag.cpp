#include "corrsim/tridiag.hpp"

#include <cmath>
#include <string>

#include "corrsim/errors.hpp"

namespace corrsim {

namespace {

void check_sizes(const TridiagonalSystem& sys) {
    const Eigen::Index n = sys.diag.size();
    if (n == 0) throw NumericsError("tridiagonal system is empty");
    if (sys.sub.size() != n - 1 || sys.sup.size() != n - 1 || sys.rhs.size() != n) {
        throw NumericsError("tridiagonal system has inconsistent band sizes");
    }
}

} // namespace

Eigen::VectorXd solve_tridiagonal(const TridiagonalSystem& sys) {
    check_sizes(sys);
    const Eigen::Index n = sys.diag.size();

    Eigen::VectorXd c(n > 1 ? n - 1 : 0); // modified superdiagonal
    Eigen::VectorXd d(n);                 // modified right-hand side

    double pivot = sys.diag[0];
    if (std::abs(pivot) < 1e-300) {
        throw NumericsError("zero pivot in tridiagonal solve at row 0");
    }
    if (n > 1) c[0] = sys.sup[0] / pivot;
    d[0] = sys.rhs[0] / pivot;

    for (Eigen::Index i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.sub[i - 1] * c[i - 1];
        if (std::abs(pivot) < 1e-300) {
            throw NumericsError("zero pivot in tridiagonal solve at row " + std::to_string(i));
        }
        if (i < n - 1) c[i] = sys.sup[i] / pivot;
        d[i] = (sys.rhs[i] - sys.sub[i - 1] * d[i - 1]) / pivot;
    }

    Eigen::VectorXd x(n);
    x[n - 1] = d[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    return x;
}

Eigen::VectorXd tridiagonal_residual(const TridiagonalSystem& sys, const Eigen::VectorXd& u) {
    check_sizes(sys);
    const Eigen::Index n = sys.diag.size();
    if (u.size() != n) throw NumericsError("residual: solution size mismatch");

    Eigen::VectorXd r = sys.diag.cwiseProduct(u) - sys.rhs;
    r.head(n - 1) += sys.sup.cwiseProduct(u.tail(n - 1));
    r.tail(n - 1) += sys.sub.cwiseProduct(u.head(n - 1));
    return r;
}

} // namespace corrsim
