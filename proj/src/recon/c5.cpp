#include "recon/c5.hpp"

#include <vector>

#include "recon/limiters.hpp"

namespace igfv {

namespace {
constexpr double cL_sub = 1.0 / 2.0, cL_sup = 1.0 / 6.0;
constexpr double rhs_a = 1.0 / 18.0, rhs_b = 19.0 / 18.0, rhs_c = 5.0 / 9.0;
} // namespace

C5LineSolver::C5LineSolver(int n, bool periodic) : n_(n), periodic_(periodic) {
    if (n < 5) throw ConfigError("c5 reconstruction needs at least 5 cells");
    if (periodic) {
        std::vector<double> sub(n, cL_sub), diag(n, 1.0), sup(n, cL_sup);
        facL_ = TridiagFactor(sub.data(), diag.data(), sup.data(), n, true);
        std::vector<double> subr(n, cL_sup), supr(n, cL_sub);
        facR_ = TridiagFactor(subr.data(), diag.data(), supr.data(), n, true);
        return;
    }
    const int m = n + 1;
    std::vector<double> sub(m, cL_sub), diag(m, 1.0), sup(m, cL_sup);
    std::vector<double> subr(m, cL_sup), supr(m, cL_sub);
    for (int k : {0, 1, n - 1, n}) {
        sub[k] = sup[k] = subr[k] = supr[k] = 0.0;
    }
    facL_ = TridiagFactor(sub.data(), diag.data(), sup.data(), m, false);
    facR_ = TridiagFactor(subr.data(), diag.data(), supr.data(), m, false);
}

void C5LineSolver::solve(const double* u, int g, double* L, double* R, double* scratch) const {
    const int n = n_;
    auto cell = [&](int c) { return u[c + g]; };

    if (periodic_) {
        // faces 0..n-1 cyclic; face n duplicates face 0
        double* rhs = scratch;
        double* tmp = scratch + n;
        auto wrap = [&](int c) { return cell(((c % n) + n) % n); };
        for (int k = 0; k < n; ++k)
            rhs[k] = rhs_a * wrap(k - 2) + rhs_b * wrap(k - 1) + rhs_c * wrap(k);
        facL_.solve(rhs, L, tmp);
        for (int k = 0; k < n; ++k)
            rhs[k] = rhs_c * wrap(k - 1) + rhs_b * wrap(k) + rhs_a * wrap(k + 1);
        facR_.solve(rhs, R, tmp);
        L[n] = L[0];
        R[n] = R[0];
        return;
    }

    const int m = n + 1;
    double* rhs = scratch;
    double* tmp = scratch + m;
    for (int k = 2; k <= n - 2; ++k)
        rhs[k] = rhs_a * cell(k - 2) + rhs_b * cell(k - 1) + rhs_c * cell(k);
    for (int k : {0, 1, n - 1, n}) rhs[k] = muscl_left(cell(k - 2), cell(k - 1), cell(k));
    facL_.solve(rhs, L, tmp);

    for (int k = 2; k <= n - 2; ++k)
        rhs[k] = rhs_c * cell(k - 1) + rhs_b * cell(k) + rhs_a * cell(k + 1);
    for (int k : {0, 1, n - 1, n}) rhs[k] = muscl_right(cell(k - 1), cell(k), cell(k + 1));
    facR_.solve(rhs, R, tmp);
}

} // namespace igfv
