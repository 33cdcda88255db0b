#ifndef IGFV_RECON_C5_HPP
#define IGFV_RECON_C5_HPP

#include "gradients/tridiagonal.hpp"

namespace igfv {

// Fifth-order compact (spatially implicit) reconstruction of left and right
// face values along a line. Non-periodic lines pin the four end faces to the
// explicit third-order kappa values as Dirichlet rows; periodic lines solve
// the cyclic systems directly.
class C5LineSolver {
  public:
    C5LineSolver(int n, bool periodic);

    // u is the padded line (g ghost cells each side); L and R receive the
    // n+1 face values. scratch needs >= 2*(n+1) doubles.
    void solve(const double* u, int g, double* L, double* R, double* scratch) const;

    int size() const { return n_; }

  private:
    int n_;
    bool periodic_;
    TridiagFactor facL_, facR_;
};

} // namespace igfv

#endif
