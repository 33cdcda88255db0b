#include "gradients/compact.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace igfv {

namespace {

struct SchemeCoef {
    double alpha, a, b;
};

SchemeCoef coef(CompactScheme s) {
    if (s == CompactScheme::cd4) return {5.0 / 14.0, 11.0 / 7.0, 1.0 / 7.0};
    return {1.0 / 3.0, 14.0 / 9.0, 1.0 / 9.0};
}

// Classical three-point fourth-order compact row used one cell in from a
// non-periodic boundary, where the five-point right-hand side does not fit.
constexpr double pade_alpha = 0.25;
constexpr double pade_a = 1.5;

} // namespace

CompactOperator::CompactOperator(int n, double h, CompactScheme scheme, LineClosure closure)
    : n_(n), h_(h), scheme_(scheme), closure_(closure) {
    if (n < 5) throw ConfigError("compact derivative line needs at least 5 cells");
    const SchemeCoef c = coef(scheme);
    std::vector<double> sub(n, c.alpha), diag(n, 1.0), super(n, c.alpha);
    if (closure == LineClosure::one_sided) {
        diag[0] = 1.0;
        super[0] = 2.0;
        sub[1] = pade_alpha;
        super[1] = pade_alpha;
        sub[n - 2] = pade_alpha;
        super[n - 2] = pade_alpha;
        sub[n - 1] = 2.0;
        diag[n - 1] = 1.0;
    }
    fac_ = TridiagFactor(sub.data(), diag.data(), super.data(), n, closure == LineClosure::periodic);
}

void CompactOperator::apply(const double* q, int stride, double* dq, double* scratch) const {
    const int n = n_;
    double* line = scratch;         // contiguous copy of the input
    double* rhs = scratch + n;      // right-hand side, solved in place
    double* tmp = scratch + 2 * n;  // Thomas forward sweep
    for (int i = 0; i < n; ++i) line[i] = q[(long)i * stride];

    const SchemeCoef c = coef(scheme_);
    const double ca = c.a / (2.0 * h_);
    const double cb = c.b / (4.0 * h_);

    if (closure_ == LineClosure::periodic) {
        auto at = [&](int i) { return line[(i % n + n) % n]; };
        for (int i = 0; i < n; ++i)
            rhs[i] = ca * (at(i + 1) - at(i - 1)) + cb * (at(i + 2) - at(i - 2));
    } else {
        const double ih = 1.0 / h_;
        rhs[0] = (-2.5 * line[0] + 2.0 * line[1] + 0.5 * line[2]) * ih;
        rhs[1] = pade_a * 0.5 * (line[2] - line[0]) * ih;
        for (int i = 2; i < n - 2; ++i)
            rhs[i] = ca * (line[i + 1] - line[i - 1]) + cb * (line[i + 2] - line[i - 2]);
        rhs[n - 2] = pade_a * 0.5 * (line[n - 1] - line[n - 3]) * ih;
        rhs[n - 1] = (2.5 * line[n - 1] - 2.0 * line[n - 2] - 0.5 * line[n - 3]) * ih;
    }

    fac_.solve(rhs, rhs, tmp);
    for (int i = 0; i < n; ++i) dq[(long)i * stride] = rhs[i];
}

std::vector<double> first_derivative(const std::vector<double>& line, double h,
                                     CompactScheme scheme, LineClosure closure) {
    const int n = (int)line.size();
    CompactOperator op(n, h, scheme, closure);
    std::vector<double> out(n), scratch(3 * n);
    op.apply(line.data(), 1, out.data(), scratch.data());
    return out;
}

std::vector<double> second_derivative(const std::vector<double>& qprime, double h,
                                      CompactScheme scheme, LineClosure closure) {
    return first_derivative(qprime, h, scheme, closure);
}

GradientWorkspace::GradientWorkspace(const Grid& grid, int nvar, CompactScheme scheme,
                                     bool with_second)
    : grid_(grid), nvar_(nvar), scheme_(scheme), second_(with_second) {
    for (int a = 0; a < 3; ++a) {
        if (!grid.axis_active(a)) continue;
        const LineClosure cl = grid.periodic_axis(a) ? LineClosure::periodic : LineClosure::one_sided;
        ops_[a] = std::make_unique<CompactOperator>(grid.n[a], grid.h[a], scheme_, cl);
    }
}

GradientField GradientWorkspace::make_field() const {
    GradientField gf;
    gf.grid = grid_;
    gf.nvar = nvar_;
    gf.with_second = second_;
    const size_t sz = (size_t)nvar_ * grid_.total_padded();
    for (int a = 0; a < 3; ++a) {
        if (!grid_.axis_active(a)) continue;
        gf.qp[a].assign(sz, 0.0);
        if (second_) gf.qpp[a].assign(sz, 0.0);
    }
    return gf;
}

void GradientWorkspace::compute(const Field& prim, GradientField& out) const {
    const Grid& g = grid_;
    const long strides[3] = {1, g.pad(0), (long)g.pad(0) * g.pad(1)};

    for (int axis = 0; axis < 3; ++axis) {
        if (!g.axis_active(axis)) continue;
        const CompactOperator& op = *ops_[axis];
        const int t1 = (axis == 0) ? 1 : 0;
        const int t2 = (axis == 2) ? 1 : 2;
        const int n1 = g.n[t1], n2 = g.n[t2];
        const long nlines = (long)n1 * n2 * nvar_;
        const int n = g.n[axis];

#pragma omp parallel
        {
            std::vector<double> scratch(3 * n);
#pragma omp for schedule(static)
            for (long l = 0; l < nlines; ++l) {
                const int v = (int)(l % nvar_);
                const long li = l / nvar_;
                const int c1 = (int)(li % n1);
                const int c2 = (int)(li / n1);
                int idx[3] = {0, 0, 0};
                idx[t1] = c1;
                idx[t2] = c2;
                const long base = prim.cell_index(idx[0], idx[1], idx[2]);
                const long stride = strides[axis];
                const double* q = prim.var(v) + base;
                double* dq = out.dq(axis, v) + base;
                op.apply(q, (int)stride, dq, scratch.data());
                if (second_) op.apply(dq, (int)stride, out.d2q(axis, v) + base, scratch.data());
            }
        }
    }
}

GradientField gradients_all(const Field& prim, CompactScheme scheme, bool with_second) {
    GradientWorkspace ws(prim.grid, prim.nvar, scheme, with_second);
    GradientField gf = ws.make_field();
    ws.compute(prim, gf);
    return gf;
}

} // namespace igfv
