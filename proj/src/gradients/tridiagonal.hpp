#ifndef IGFV_GRADIENTS_TRIDIAGONAL_HPP
#define IGFV_GRADIENTS_TRIDIAGONAL_HPP

#include <vector>

#include "core/errors.hpp"

namespace igfv {

// Assembled tridiagonal system with one or more right-hand sides. For the
// periodic variant, sub[0] couples row 0 to row n-1 and super[n-1] couples
// row n-1 to row 0.
struct TridiagonalSystem {
    std::vector<double> sub, diag, super;
    std::vector<std::vector<double>> rhs;
    bool periodic = false;
};

std::vector<std::vector<double>> solve_tridiagonal(const TridiagonalSystem& sys);
std::vector<std::vector<double>> solve_cyclic_tridiagonal(const TridiagonalSystem& sys);

// Factorized form for repeated solves against the same matrix. The Thomas
// forward-elimination coefficients are precomputed; the cyclic variant adds a
// Sherman-Morrison rank-one correction whose auxiliary solve is also cached.
class TridiagFactor {
  public:
    TridiagFactor() = default;
    TridiagFactor(const double* sub, const double* diag, const double* super, int n, bool periodic);

    // x may alias rhs. scratch must hold >= n doubles.
    void solve(const double* rhs, double* x, double* scratch) const;

    int size() const { return n_; }

  private:
    void factor(const double* sub, const double* diag, const double* super);

    int n_ = 0;
    bool periodic_ = false;
    std::vector<double> sub_, cp_, inv_;
    // cyclic pieces
    std::vector<double> z_;
    double v0_ = 0.0, vn_ = 0.0, denom_ = 1.0;
};

} // namespace igfv

#endif
