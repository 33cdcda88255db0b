#ifndef IGFV_GRADIENTS_COMPACT_HPP
#define IGFV_GRADIENTS_COMPACT_HPP

#include <memory>
#include <vector>

#include "core/field.hpp"
#include "gradients/tridiagonal.hpp"

namespace igfv {

// CD4: optimised fourth-order compact first derivative (alpha = 5/14).
// CD6: sixth-order compact first derivative (alpha = 1/3).
enum class CompactScheme { cd4, cd6 };

enum class LineClosure { one_sided, periodic };

// Tridiagonal compact derivative over one grid line of physical cells.
// Non-periodic lines close with the third-order one-sided rows at both ends
// and a three-point fourth-order compact row one cell in (the five-point
// interior stencil does not fit there); periodic lines use the interior
// stencil everywhere through the cyclic solver. Ghost cells are not used.
class CompactOperator {
  public:
    CompactOperator(int n, double h, CompactScheme scheme, LineClosure closure);

    // dq <- derivative of q. Applying it to a derivative line yields the
    // second derivative. scratch needs >= 2n doubles.
    void apply(const double* q, int stride, double* dq, double* scratch) const;

    int size() const { return n_; }

  private:
    int n_;
    double h_;
    CompactScheme scheme_;
    LineClosure closure_;
    TridiagFactor fac_;
};

std::vector<double> first_derivative(const std::vector<double>& line, double h,
                                     CompactScheme scheme, LineClosure closure);
std::vector<double> second_derivative(const std::vector<double>& qprime, double h,
                                      CompactScheme scheme, LineClosure closure);

// Per-axis, per-variable first (and optionally second) derivatives of every
// variable at every physical cell, stored on the padded grid layout.
struct GradientField {
    Grid grid;
    int nvar = 0;
    bool with_second = false;
    std::array<std::vector<double>, 3> qp;
    std::array<std::vector<double>, 3> qpp;

    double* dq(int axis, int v) { return qp[axis].data() + (size_t)v * grid.total_padded(); }
    const double* dq(int axis, int v) const { return qp[axis].data() + (size_t)v * grid.total_padded(); }
    double* d2q(int axis, int v) { return qpp[axis].data() + (size_t)v * grid.total_padded(); }
    const double* d2q(int axis, int v) const { return qpp[axis].data() + (size_t)v * grid.total_padded(); }
};

// Caches the factorized operators for one grid so repeated stages reuse them.
class GradientWorkspace {
  public:
    GradientWorkspace(const Grid& grid, int nvar, CompactScheme scheme, bool with_second);

    // Line-by-line application along each active axis; the closure follows
    // the grid's boundary tags (periodic -> cyclic, anything else one-sided).
    void compute(const Field& prim, GradientField& out) const;

    GradientField make_field() const;

  private:
    Grid grid_;
    int nvar_;
    CompactScheme scheme_;
    bool second_;
    std::array<std::unique_ptr<CompactOperator>, 3> ops_;
};

GradientField gradients_all(const Field& prim, CompactScheme scheme, bool with_second = true);

} // namespace igfv

#endif
