#ifndef IGFV_RECON_EIGEN_HPP
#define IGFV_RECON_EIGEN_HPP

#include "core/gas.hpp"
#include "core/errors.hpp"

namespace igfv {

// Frozen left/right eigenvector pair of the primitive-variable system at a
// face, evaluated from averaged states. Dense matrices are kept for tests and
// external use; the sweep kernels use the sparse apply functions below.
struct EigenSystem {
    int nvar = 0;
    int axis = 0;
    double rho = 0.0, c = 0.0;      // averaged density and sound speed
    double a1r1 = 0.0, a2r2 = 0.0;  // averaged partial densities (two-fluid)
    double L[36] = {0};
    double R[36] = {0};
};

// Roe averages feed the single-species matrices; the two-fluid matrices take
// arithmetic averages of rho, c and the partial densities.
EigenSystem build_eigensystem(const double* uL, const double* uR, int axis, const GasModel& gas);

// Fill only the averaged scalars (the part the sweep kernels need).
void eigen_averages(const double* uL, const double* uR, int axis, const GasModel& gas,
                    EigenSystem& es);

// W = L U and U = R W specialized to the axis-aligned sparsity.
inline void project_single(const EigenSystem& es, const double* u, double* w) {
    const int d = es.axis;
    const int t1 = (d == 0) ? 1 : 0;
    const int t2 = (d == 2) ? 1 : 2;
    const double A = 0.5 * es.rho / es.c;
    const double B = 0.5 / (es.c * es.c);
    const double un = u[sv::u + d];
    const double p = u[sv::p];
    w[0] = -A * un + B * p;
    w[1] = u[sv::rho] - 2.0 * B * p;
    w[2] = A * un + B * p;
    w[3] = es.rho * u[sv::u + t1];
    w[4] = es.rho * u[sv::u + t2];
}

inline void unproject_single(const EigenSystem& es, const double* w, double* u) {
    const int d = es.axis;
    const int t1 = (d == 0) ? 1 : 0;
    const int t2 = (d == 2) ? 1 : 2;
    u[sv::rho] = w[0] + w[1] + w[2];
    u[sv::u + d] = (es.c / es.rho) * (w[2] - w[0]);
    u[sv::u + t1] = w[3] / es.rho;
    u[sv::u + t2] = w[4] / es.rho;
    u[sv::p] = es.c * es.c * (w[0] + w[2]);
}

inline void project_multi(const EigenSystem& es, const double* u, double* w) {
    const int d = es.axis;
    const int t = 1 - d;
    const double cr = es.c * es.rho;
    const double f1 = es.a1r1 / (es.c * es.c * es.rho);
    const double f2 = es.a2r2 / (es.c * es.c * es.rho);
    const double un = u[mv::u + d];
    const double p = u[mv::p];
    w[0] = -0.5 * cr * un + 0.5 * p;
    w[1] = u[mv::a1r1] - f1 * p;
    w[2] = u[mv::a2r2] - f2 * p;
    w[3] = u[mv::u + t];
    w[4] = u[mv::alpha];
    w[5] = 0.5 * cr * un + 0.5 * p;
}

inline void unproject_multi(const EigenSystem& es, const double* w, double* u) {
    const int d = es.axis;
    const int t = 1 - d;
    const double f1 = es.a1r1 / (es.c * es.c * es.rho);
    const double f2 = es.a2r2 / (es.c * es.c * es.rho);
    const double acoustic = w[0] + w[5];
    u[mv::a1r1] = f1 * acoustic + w[1];
    u[mv::a2r2] = f2 * acoustic + w[2];
    u[mv::u + d] = (w[5] - w[0]) / (es.c * es.rho);
    u[mv::u + t] = w[3];
    u[mv::p] = acoustic;
    u[mv::alpha] = w[4];
}

inline void eigen_project(const EigenSystem& es, bool multi, const double* u, double* w) {
    multi ? project_multi(es, u, w) : project_single(es, u, w);
}
inline void eigen_unproject(const EigenSystem& es, bool multi, const double* w, double* u) {
    multi ? unproject_multi(es, w, u) : unproject_single(es, w, u);
}

} // namespace igfv

#endif
