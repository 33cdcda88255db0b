#include "gradients/tridiagonal.hpp"

#include <cmath>

namespace igfv {

namespace {
constexpr double pivot_tol = 1e-300;
}

TridiagFactor::TridiagFactor(const double* sub, const double* diag, const double* super, int n,
                             bool periodic)
    : n_(n), periodic_(periodic) {
    if (n < 2) throw ConfigError("tridiagonal system needs n >= 2");
    if (!periodic) {
        factor(sub, diag, super);
        return;
    }
    // Sherman-Morrison: B = A - u v^T with u = (gamma, 0,..., beta),
    // v = (1, 0,..., alpha/gamma); alpha = A(0,n-1), beta = A(n-1,0).
    const double alpha = sub[0];
    const double beta = super[n - 1];
    const double gamma = -diag[0];
    std::vector<double> d(diag, diag + n);
    d[0] = diag[0] - gamma;
    d[n - 1] = diag[n - 1] - alpha * beta / gamma;
    factor(sub, d.data(), super);

    std::vector<double> u(n, 0.0), scratch(n);
    u[0] = gamma;
    u[n - 1] = beta;
    z_.resize(n);
    periodic_ = false; // plain solve while building the correction
    solve(u.data(), z_.data(), scratch.data());
    periodic_ = true;
    v0_ = 1.0;
    vn_ = alpha / gamma;
    denom_ = 1.0 + v0_ * z_[0] + vn_ * z_[n - 1];
    if (std::abs(denom_) < pivot_tol) throw NumericalError("singular cyclic tridiagonal correction");
}

void TridiagFactor::factor(const double* sub, const double* diag, const double* super) {
    sub_.assign(sub, sub + n_);
    cp_.resize(n_);
    inv_.resize(n_);
    double den = diag[0];
    if (std::abs(den) < pivot_tol) throw NumericalError("singular tridiagonal system (zero pivot)");
    inv_[0] = 1.0 / den;
    cp_[0] = super[0] * inv_[0];
    for (int i = 1; i < n_; ++i) {
        den = diag[i] - sub[i] * cp_[i - 1];
        if (std::abs(den) < pivot_tol) throw NumericalError("singular tridiagonal system (zero pivot)");
        inv_[i] = 1.0 / den;
        cp_[i] = super[i] * inv_[i];
    }
}

void TridiagFactor::solve(const double* rhs, double* x, double* scratch) const {
    const int n = n_;
    double* y = scratch;
    y[0] = rhs[0] * inv_[0];
    for (int i = 1; i < n; ++i) y[i] = (rhs[i] - sub_[i] * y[i - 1]) * inv_[i];
    x[n - 1] = y[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = y[i] - cp_[i] * x[i + 1];
    if (periodic_) {
        const double f = (v0_ * x[0] + vn_ * x[n - 1]) / denom_;
        for (int i = 0; i < n; ++i) x[i] -= f * z_[i];
    }
}

std::vector<std::vector<double>> solve_tridiagonal(const TridiagonalSystem& sys) {
    if (sys.periodic) throw ConfigError("system is periodic; use solve_cyclic_tridiagonal");
    const int n = (int)sys.diag.size();
    TridiagFactor fac(sys.sub.data(), sys.diag.data(), sys.super.data(), n, false);
    std::vector<std::vector<double>> out;
    std::vector<double> scratch(n);
    out.reserve(sys.rhs.size());
    for (const auto& r : sys.rhs) {
        std::vector<double> x(n);
        fac.solve(r.data(), x.data(), scratch.data());
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<std::vector<double>> solve_cyclic_tridiagonal(const TridiagonalSystem& sys) {
    if (!sys.periodic) throw ConfigError("system is not periodic; use solve_tridiagonal");
    const int n = (int)sys.diag.size();
    TridiagFactor fac(sys.sub.data(), sys.diag.data(), sys.super.data(), n, true);
    std::vector<std::vector<double>> out;
    std::vector<double> scratch(n);
    out.reserve(sys.rhs.size());
    for (const auto& r : sys.rhs) {
        std::vector<double> x(n);
        fac.solve(r.data(), x.data(), scratch.data());
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace igfv
